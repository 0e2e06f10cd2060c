#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddmol {

enum class GateKind { H, Z, XZ, CNOT, CZ, Measure, Bell };

std::string to_string(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<std::size_t> molecules;
    double angle = 0.0;      // Z, XZ
    double axis_angle = 0.0; // XZ
    std::size_t line = 0;    // 1-based source line, 0 if synthesised

    static Gate h(std::size_t m) { return {GateKind::H, {m}}; }
    static Gate z(std::size_t m, double phi) { return {GateKind::Z, {m}, phi}; }
    static Gate xz(std::size_t m, double axis, double phi) { return {GateKind::XZ, {m}, phi, axis}; }
    static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, {c, t}}; }
    static Gate cz(std::size_t i, std::size_t j) { return {GateKind::CZ, {i, j}}; }
    static Gate measure(std::size_t m) { return {GateKind::Measure, {m}}; }
    static Gate bell(std::size_t i, std::size_t j) { return {GateKind::Bell, {i, j}}; }
};

/// Parses the line-oriented circuit format:
///
///   H i | Z i phi | XZ i axis phi | CNOT i j | CZ i j | MEASURE i | BELL i j
///
/// `#` starts a comment. Angles are decimal numbers or multiples of `pi`
/// (`pi`, `-pi/2`, `0.25pi`, `3*pi/4`). Throws ParseError with the line
/// number. When `molecule_count` is given, indices beyond it are rejected;
/// adjacency is left to the compiler.
std::vector<Gate> parse_circuit(std::string_view text,
                                std::optional<std::size_t> molecule_count = std::nullopt);

std::vector<Gate> parse_circuit_file(const std::string& path,
                                     std::optional<std::size_t> molecule_count = std::nullopt);

/// Parses an angle token as accepted by `parse_circuit`.
std::optional<double> parse_angle(std::string_view token);

} // namespace ddmol

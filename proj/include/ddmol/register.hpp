#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ddmol/geometry.hpp"

namespace ddmol {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

/// Logical basis of one molecule: |T> = 0, |S> = 1.
enum class Logical : unsigned { T = 0, S = 1 };

/// Detuning sector a molecule is parked in. `Shifted` means the molecule is
/// held at +Ec/2, so its singlet component sits in the (0,2) charge state.
enum class ChargeSector { Balanced, Shifted };

/// Normalised amplitudes over {T, S}^n plus a per-molecule charge sector.
///
/// Basis index is row-major in molecule order: molecule 0 is the most
/// significant bit.
class EncodedRegisterState {
public:
    /// |T...T> on n molecules.
    explicit EncodedRegisterState(std::size_t n);

    /// Throws PhysicsError unless the length is 2^n and the norm is 1 to 1e-10.
    static EncodedRegisterState from_amplitudes(std::vector<Complex> amplitudes);
    static EncodedRegisterState product(const std::vector<Logical>& labels);

    std::size_t molecules() const { return n_; }
    std::size_t dimension() const { return amps_.size(); }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    Complex operator[](std::size_t index) const { return amps_[index]; }

    ChargeSector charge(std::size_t m) const { return charges_.at(m); }
    void set_charge(std::size_t m, ChargeSector sector) { charges_.at(m) = sector; }
    bool any_shifted() const;

    /// Logical value of molecule m in basis state `index`.
    Logical bit(std::size_t index, std::size_t m) const {
        return static_cast<Logical>((index >> (n_ - 1 - m)) & 1u);
    }
    std::size_t mask(std::size_t m) const { return std::size_t{1} << (n_ - 1 - m); }

    double norm_squared() const;
    /// Rescales to unit norm; throws PhysicsError on a zero vector.
    void normalize();

private:
    std::size_t n_;
    std::vector<Complex> amps_;
    std::vector<ChargeSector> charges_;
};

/// Single-molecule rotation.
///
///   Z(phi)          exp(-i phi sz/2)
///   XZ(alpha, beta) rotation by beta about (sin alpha, 0, cos alpha)
///   Hadamard        (sx + sz)/sqrt2
///   EulerX(phi)     XZ(pi/4, pi) . Z(phi) . XZ(pi/4, pi), an X rotation
///                   built from the two available axes
struct Rotation {
    enum class Kind { Z, XZ, Hadamard, EulerX };

    Kind kind = Kind::Hadamard;
    double angle = 0.0;
    double axis_angle = 0.0;
    double duration = 0.0; // ns, budget accounting only

    static Rotation z(double phi, double duration = 0.0) { return {Kind::Z, phi, 0.0, duration}; }
    static Rotation xz(double axis, double beta, double duration = 0.0) {
        return {Kind::XZ, beta, axis, duration};
    }
    static Rotation hadamard(double duration = 0.0) { return {Kind::Hadamard, 0.0, 0.0, duration}; }
    static Rotation euler_x(double phi, double duration = 0.0) {
        return {Kind::EulerX, phi, 0.0, duration};
    }

    Mat2 matrix() const;
};

Mat2 multiply(const Mat2& lhs, const Mat2& rhs);

/// Applies a 2x2 unitary to molecule m. No sector check.
void apply_matrix(EncodedRegisterState& state, std::size_t m, const Mat2& u);

/// Throws PhysicsError for a bad index or a molecule held in (0,2).
void apply_rotation(EncodedRegisterState& state, std::size_t m, const Rotation& r);

/// Multiplies amplitudes with molecules i and j both |S> by e^{i phi}.
/// Throws PhysicsError unless i, j are adjacent in `topology`.
void ising_phase(EncodedRegisterState& state, const Topology& topology, std::size_t i,
                 std::size_t j, double phi);

/// H(target) . U(pi) . H(target).
void cnot(EncodedRegisterState& state, const Topology& topology, std::size_t control,
          std::size_t target);

/// L2 distance after aligning b's global phase to a (maximal overlap).
double distance_up_to_phase(std::span<const Complex> a, std::span<const Complex> b);

} // namespace ddmol

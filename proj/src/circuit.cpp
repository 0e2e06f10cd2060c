#include "ddmol/circuit.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

namespace {

std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // from_chars for double is unavailable on older libstdc++; strtod on a copy
    std::string copy(s);
    char* end = nullptr;
    const double v = std::strtod(copy.c_str(), &end);
    if (end != copy.c_str() + copy.size()) return std::nullopt;
    return v;
}

std::optional<std::size_t> parse_index(std::string_view s) {
    std::size_t v = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || s.empty()) return std::nullopt;
    return v;
}

struct Arity {
    GateKind kind;
    std::size_t indices;
    std::size_t angles;
};

std::optional<Arity> lookup(std::string_view name) {
    if (name == "H") return Arity{GateKind::H, 1, 0};
    if (name == "Z") return Arity{GateKind::Z, 1, 1};
    if (name == "XZ") return Arity{GateKind::XZ, 1, 2};
    if (name == "CNOT") return Arity{GateKind::CNOT, 2, 0};
    if (name == "CZ") return Arity{GateKind::CZ, 2, 0};
    if (name == "MEASURE") return Arity{GateKind::Measure, 1, 0};
    if (name == "BELL") return Arity{GateKind::Bell, 2, 0};
    return std::nullopt;
}

} // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::Z: return "Z";
    case GateKind::XZ: return "XZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::Measure: return "MEASURE";
    case GateKind::Bell: return "BELL";
    }
    return "?";
}

std::optional<double> parse_angle(std::string_view token) {
    if (auto v = parse_number(token)) return v;
    const auto pos = token.find("pi");
    if (pos == std::string_view::npos) return std::nullopt;
    std::string_view head = token.substr(0, pos);
    std::string_view tail = token.substr(pos + 2);
    double factor = 1.0;
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    if (head == "-") {
        factor = -1.0;
    } else if (head == "+" || head.empty()) {
        factor = 1.0;
    } else if (auto f = parse_number(head)) {
        factor = *f;
    } else {
        return std::nullopt;
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') return std::nullopt;
        auto d = parse_number(tail.substr(1));
        if (!d || *d == 0.0) return std::nullopt;
        divisor = *d;
    }
    return factor * units::pi / divisor;
}

std::vector<Gate> parse_circuit(std::string_view text, std::optional<std::size_t> molecule_count) {
    std::vector<Gate> gates;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream tokens(raw);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        const auto arity = lookup(tok[0]);
        if (!arity) throw ParseError(line_no, "unknown gate '" + tok[0] + "'");
        const std::size_t want = 1 + arity->indices + arity->angles;
        if (tok.size() != want) {
            throw ParseError(line_no, tok[0] + " takes " + std::to_string(want - 1) + " argument(s), got " +
                                          std::to_string(tok.size() - 1));
        }
        Gate g{arity->kind, {}};
        g.line = line_no;
        for (std::size_t k = 0; k < arity->indices; ++k) {
            const auto idx = parse_index(tok[1 + k]);
            if (!idx) throw ParseError(line_no, "bad molecule index '" + tok[1 + k] + "'");
            if (molecule_count && *idx >= *molecule_count) {
                throw ParseError(line_no, "molecule index " + tok[1 + k] + " out of range (" +
                                              std::to_string(*molecule_count) + " molecules)");
            }
            g.molecules.push_back(*idx);
        }
        if (g.molecules.size() == 2 && g.molecules[0] == g.molecules[1]) {
            throw ParseError(line_no, tok[0] + " needs two distinct molecules");
        }
        std::vector<double> angles;
        for (std::size_t k = 0; k < arity->angles; ++k) {
            const auto& t = tok[1 + arity->indices + k];
            const auto a = parse_angle(t);
            if (!a) throw ParseError(line_no, "bad angle '" + t + "'");
            angles.push_back(*a);
        }
        if (g.kind == GateKind::Z) g.angle = angles[0];
        if (g.kind == GateKind::XZ) {
            g.axis_angle = angles[0];
            g.angle = angles[1];
        }
        gates.push_back(std::move(g));
    }
    return gates;
}

std::vector<Gate> parse_circuit_file(const std::string& path, std::optional<std::size_t> molecule_count) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open circuit file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str(), molecule_count);
}

} // namespace ddmol

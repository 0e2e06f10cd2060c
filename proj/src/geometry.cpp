#include "ddmol/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

std::string to_string(Layout layout) {
    return layout == Layout::Perpendicular ? "perpendicular" : "in_line";
}

Layout layout_from_string(const std::string& s) {
    if (s == "perpendicular") return Layout::Perpendicular;
    if (s == "in_line" || s == "inline") return Layout::InLine;
    throw ConfigError("unknown layout '" + s + "' (expected perpendicular or in_line)");
}

Topology Topology::line(std::size_t n) {
    if (n == 0) throw PhysicsError("topology needs at least one molecule");
    return Topology(Kind::Line, 1, n, false);
}

Topology Topology::grid(std::size_t rows, std::size_t cols, bool diagonal) {
    if (rows == 0 || cols == 0) throw PhysicsError("grid needs rows, cols >= 1");
    return Topology(Kind::Grid, rows, cols, diagonal);
}

bool Topology::adjacent(std::size_t i, std::size_t j) const {
    if (!contains(i) || !contains(j) || i == j) return false;
    const auto dr = std::abs(static_cast<long>(row_of(i)) - static_cast<long>(row_of(j)));
    const auto dc = std::abs(static_cast<long>(col_of(i)) - static_cast<long>(col_of(j)));
    if (dr > 1 || dc > 1) return false;
    if (dr + dc == 1) return true;
    return diagonal_ && kind_ == Kind::Grid;
}

std::vector<std::size_t> Topology::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
        if (adjacent(i, j)) out.push_back(j);
    }
    return out;
}

std::vector<std::string> LayoutGeometry::validate() const {
    const double a = intra_dot_distance;
    const double b = inter_molecule_distance;
    if (!std::isfinite(a) || !(a > 0.0)) throw PhysicsError("intra_dot_distance a must be > 0");
    if (!std::isfinite(b) || !(b > 0.0)) throw PhysicsError("inter_molecule_distance b must be > 0");
    if (!std::isfinite(relative_permittivity) || !(relative_permittivity > 1.0)) {
        throw PhysicsError("relative_permittivity must be > 1");
    }
    if (!std::isfinite(inline_gap_offset) || b + inline_gap_offset <= 0.0) {
        throw PhysicsError("inline_gap_offset leaves no gap between molecules");
    }
    if (b < 5.0 * a) {
        std::ostringstream os;
        os << "b = " << b << " nm < 5a = " << 5.0 * a
           << " nm: nearest-neighbour truncation is not justified";
        throw PhysicsError(os.str());
    }
    if (topology.kind() == Topology::Kind::Grid && layout != Layout::Perpendicular) {
        throw PhysicsError("grid topology requires the perpendicular (bilayer) layout");
    }
    std::vector<std::string> warnings;
    if (b < 10.0 * a) {
        std::ostringstream os;
        os << "b = " << b << " nm is below 10a = " << 10.0 * a << " nm";
        warnings.push_back(os.str());
    }
    return warnings;
}

double LayoutGeometry::coulomb_scale() const { return units::coulomb_constant / relative_permittivity; }

} // namespace ddmol

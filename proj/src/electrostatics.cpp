#include "ddmol/electrostatics.hpp"

#include <cmath>

#include "ddmol/errors.hpp"

namespace ddmol {

namespace {

void require_layout(const LayoutGeometry& g, Layout want, const char* op) {
    if (g.layout != want) {
        throw PhysicsError(std::string(op) + ": requires the " + to_string(want) + " layout");
    }
    if (!(g.inter_molecule_distance > 0.0) || g.intra_dot_distance < 0.0) {
        throw PhysicsError(std::string(op) + ": need b > 0 and a >= 0");
    }
}

std::array<double, 2> dot_charges(Occupancy occ) {
    switch (occ) {
    case Occupancy::Balanced: return {1.0, 1.0};
    case Occupancy::SecondDot: return {0.0, 2.0};
    case Occupancy::FirstDot: return {2.0, 0.0};
    }
    return {1.0, 1.0};
}

} // namespace

double distance(const Vec3& p, const Vec3& q) {
    return std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y) + (p.z - q.z) * (p.z - q.z));
}

std::array<Vec3, 2> dot_positions(const LayoutGeometry& g, std::size_t m) {
    const double a = g.intra_dot_distance;
    const double b = g.inter_molecule_distance;
    if (g.layout == Layout::InLine) {
        const double pitch = a + b + g.inline_gap_offset;
        const double left = static_cast<double>(m) * pitch;
        return {Vec3{left, 0.0, 0.0}, Vec3{left + a, 0.0, 0.0}};
    }
    const double x = static_cast<double>(g.topology.col_of(m)) * b;
    const double y = static_cast<double>(g.topology.row_of(m)) * b;
    return {Vec3{x, y, a}, Vec3{x, y, 0.0}};
}

double pair_energy(const LayoutGeometry& g, std::size_t i, Occupancy occ_i, std::size_t j,
                   Occupancy occ_j) {
    const auto pi = dot_positions(g, i);
    const auto pj = dot_positions(g, j);
    const auto qi = dot_charges(occ_i);
    const auto qj = dot_charges(occ_j);
    double sum = 0.0;
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            if (qi[u] == 0.0 || qj[v] == 0.0) continue;
            sum += qi[u] * qj[v] / distance(pi[u], pj[v]);
        }
    }
    return g.coulomb_scale() * sum;
}

double configuration_energy(const LayoutGeometry& g, std::span<const Occupancy> occupancy) {
    double total = 0.0;
    for (std::size_t i = 0; i < occupancy.size(); ++i) {
        for (std::size_t j = i + 1; j < occupancy.size(); ++j) {
            total += pair_energy(g, i, occupancy[i], j, occupancy[j]);
        }
    }
    return total;
}

double background_interaction(const LayoutGeometry& g) {
    require_layout(g, Layout::Perpendicular, "background_interaction");
    const double a = g.intra_dot_distance;
    const double b = g.inter_molecule_distance;
    return g.coulomb_scale() * (2.0 / b + 2.0 / std::hypot(a, b));
}

double doubly_occupied_interaction(const LayoutGeometry& g) {
    require_layout(g, Layout::Perpendicular, "doubly_occupied_interaction");
    return 4.0 * g.coulomb_scale() / g.inter_molecule_distance;
}

double h_cc_max(const LayoutGeometry& g) {
    require_layout(g, Layout::Perpendicular, "h_cc");
    const double a = g.intra_dot_distance;
    const double b = g.inter_molecule_distance;
    return g.coulomb_scale() * (2.0 / b - 2.0 / std::hypot(a, b));
}

double h_cc(double theta, const LayoutGeometry& g) {
    if (!std::isfinite(theta)) throw PhysicsError("h_cc: non-finite angle");
    const double s = std::sin(theta);
    return s * s * h_cc_max(g);
}

PairCoupling pair_coupling(const LayoutGeometry& g) {
    PairCoupling c;
    c.h_int0 = background_interaction(g);
    c.h_ss = doubly_occupied_interaction(g);
    c.h_cc_max = h_cc_max(g);
    return c;
}

std::array<double, 4> inline_interaction(const LayoutGeometry& g, Occupancy charge_i,
                                         Occupancy charge_j) {
    require_layout(g, Layout::InLine, "inline_interaction");
    if (charge_i == Occupancy::FirstDot) throw PhysicsError("inline_interaction: molecule i moves to (0,2)");
    if (charge_j == Occupancy::SecondDot) throw PhysicsError("inline_interaction: molecule j moves to (2,0)");
    const auto bal = Occupancy::Balanced;
    return {pair_energy(g, 0, bal, 1, bal), pair_energy(g, 0, bal, 1, charge_j),
            pair_energy(g, 0, charge_i, 1, bal), pair_energy(g, 0, charge_i, 1, charge_j)};
}

InlineShifts inline_shifts(const LayoutGeometry& g) {
    const auto e = inline_interaction(g, Occupancy::SecondDot, Occupancy::FirstDot);
    return {e[0], e[2] - e[0], e[3] - e[0]};
}

namespace {

// Spectator 0 stays (1,1); active molecule 1 is displaced away from it.
std::array<double, 4> spectator_energies(const LayoutGeometry& g) {
    const auto bal = Occupancy::Balanced;
    const auto disp = Occupancy::SecondDot;
    LayoutGeometry line = g;
    if (g.layout == Layout::Perpendicular) line.topology = Topology::line(2);
    const double bg = pair_energy(line, 1, bal, 0, bal);
    const double shifted = pair_energy(line, 1, disp, 0, bal);
    return {bg, bg, shifted, shifted};
}

} // namespace

std::array<double, 4> inline_crosstalk(const LayoutGeometry& g) {
    require_layout(g, Layout::InLine, "inline_crosstalk");
    return spectator_energies(g);
}

std::array<double, 4> spectator_shift(const LayoutGeometry& g) {
    auto e = spectator_energies(g);
    const double bg = e[0];
    for (auto& v : e) v -= bg;
    return e;
}

double nnn_coupling_ratio(const LayoutGeometry& g) {
    const double a = g.intra_dot_distance;
    const double b = g.inter_molecule_distance;
    if (!(a > 0.0) || !(b > 0.0)) throw PhysicsError("nnn_coupling_ratio: need a, b > 0");
    // 1/d - 1/sqrt(a^2+d^2) without cancellation for a << d
    const auto gap = [a](double d) {
        const double r = std::hypot(a, d);
        return a * a / (d * r * (r + d));
    };
    return gap(2.0 * b) / gap(b);
}

} // namespace ddmol

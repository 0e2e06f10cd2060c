#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ddmol/geometry.hpp"

namespace ddmol {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

double distance(const Vec3& p, const Vec3& q);

/// Electron occupancy of a molecule's two dots.
///
/// The "second" dot is the one that receives both electrons in the (0,2)
/// sector: the lower dot for the perpendicular layout, the right dot in-line.
enum class Occupancy {
    Balanced,  // (1,1)
    SecondDot, // (0,2)
    FirstDot,  // (2,0)
};

/// Centre of the first and second dot of molecule `m`.
std::array<Vec3, 2> dot_positions(const LayoutGeometry& g, std::size_t m);

/// Coulomb energy between two molecules' point charges [µeV].
double pair_energy(const LayoutGeometry& g, std::size_t i, Occupancy occ_i, std::size_t j,
                   Occupancy occ_j);

/// Inter-molecule Coulomb energy summed over every molecule pair [µeV].
/// Intra-molecule repulsion is a state-independent constant and is left out.
double configuration_energy(const LayoutGeometry& g, std::span<const Occupancy> occupancy);

/// Closed-form couplings for the perpendicular layout.
struct PairCoupling {
    double h_int0 = 0.0;   // both molecules (1,1)
    double h_ss = 0.0;     // both molecules (0,2)
    double h_cc_max = 0.0; // h_ss - h_int0
};

double background_interaction(const LayoutGeometry& g);
double doubly_occupied_interaction(const LayoutGeometry& g);
PairCoupling pair_coupling(const LayoutGeometry& g);

/// Differential cross-capacitance energy sin^2(theta) k (2/b - 2/sqrt(a^2+b^2)).
double h_cc(double theta, const LayoutGeometry& g);
double h_cc_max(const LayoutGeometry& g);

/// Diagonal pair energies in the basis (TT, TS~, S~T, S~S~) for the in-line
/// layout, where an S~ molecule takes the given occupancy and T stays (1,1).
/// charge_i must be Balanced or SecondDot, charge_j Balanced or FirstDot.
std::array<double, 4> inline_interaction(const LayoutGeometry& g, Occupancy charge_i,
                                         Occupancy charge_j);

/// Displacement energies of the in-line pair gate: E for one molecule moved
/// toward its partner, E' for both.
struct InlineShifts {
    double background = 0.0; // H'_int0
    double single = 0.0;     // E
    double both = 0.0;       // E'
};
InlineShifts inline_shifts(const LayoutGeometry& g);

/// Energies seen by the (i-1, i) pair while i is displaced toward i+1, in the
/// basis (TT, TS~, S~T, S~S~) ordered (i, i-1). In-line layout only.
std::array<double, 4> inline_crosstalk(const LayoutGeometry& g);

/// Differential energies of a spectator pair (i, i-1) when only i is swept
/// into its gate configuration, background removed. Valid for both layouts;
/// identically zero for the perpendicular layout.
std::array<double, 4> spectator_shift(const LayoutGeometry& g);

/// h_cc at distance 2b over h_cc at distance b, both at |theta| = pi/2.
double nnn_coupling_ratio(const LayoutGeometry& g);

} // namespace ddmol

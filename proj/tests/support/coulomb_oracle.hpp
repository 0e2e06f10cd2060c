#pragma once

// Brute-force point-charge sums, written independently of the library's
// dot placement code.

#include <cmath>
#include <vector>

namespace oracle {

inline constexpr double coulomb = 1.43996e6; // µeV nm

struct Charge {
    double x, y, z, q;
};

// Perpendicular molecule at (x, y): upper dot at height a, lower dot at 0.
// doubly = true puts both electrons on the lower dot.
inline std::vector<Charge> perpendicular_molecule(double x, double y, double a, bool doubly) {
    if (doubly) return {{x, y, 0.0, 2.0}};
    return {{x, y, a, 1.0}, {x, y, 0.0, 1.0}};
}

inline double interaction(const std::vector<Charge>& p, const std::vector<Charge>& q, double eps_r) {
    double e = 0.0;
    for (const auto& c : p) {
        for (const auto& d : q) {
            const double r = std::sqrt((c.x - d.x) * (c.x - d.x) + (c.y - d.y) * (c.y - d.y) +
                                       (c.z - d.z) * (c.z - d.z));
            e += c.q * d.q / r;
        }
    }
    return coulomb / eps_r * e;
}

struct PerpendicularPair {
    double h_int0, h_ss, h_cc_max;
};

inline PerpendicularPair perpendicular_pair(double a, double b, double eps_r) {
    const auto m0 = perpendicular_molecule(0, 0, a, false);
    const auto m1 = perpendicular_molecule(b, 0, a, false);
    const auto d0 = perpendicular_molecule(0, 0, a, true);
    const auto d1 = perpendicular_molecule(b, 0, a, true);
    const double h0 = interaction(m0, m1, eps_r);
    const double hss = interaction(d0, d1, eps_r);
    return {h0, hss, hss - h0};
}

// In-line molecule with its left dot at x0 and its right dot at x0 + a.
// shift: 0 = (1,1), +1 = both electrons on the right dot, -1 = on the left.
inline std::vector<Charge> inline_molecule(double x0, double a, int shift) {
    if (shift > 0) return {{x0 + a, 0, 0, 2.0}};
    if (shift < 0) return {{x0, 0, 0, 2.0}};
    return {{x0, 0, 0, 1.0}, {x0 + a, 0, 0, 1.0}};
}

} // namespace oracle

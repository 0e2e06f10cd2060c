#include <catch_amalgamated.hpp>

#include <random>

#include "ddmol/electrostatics.hpp"
#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"
#include "support/coulomb_oracle.hpp"
#include "support/helpers.hpp"

using namespace ddmol;
using Catch::Approx;
using testing::rel_err;

namespace {

LayoutGeometry perpendicular(double a, double b, double eps = 12.9) {
    LayoutGeometry g;
    g.intra_dot_distance = a;
    g.inter_molecule_distance = b;
    g.relative_permittivity = eps;
    return g;
}

LayoutGeometry in_line(double a = 20, double b = 200) {
    auto g = perpendicular(a, b);
    g.layout = Layout::InLine;
    return g;
}

} // namespace

TEST_CASE("default couplings") {
    const auto c = pair_coupling(perpendicular(20, 200));
    CHECK(c.h_int0 == Approx(2226.96).epsilon(1e-5));
    CHECK(c.h_ss == Approx(2232.51).epsilon(1e-5));
    CHECK(c.h_cc_max == Approx(5.54).epsilon(2e-3));
    CHECK(c.h_cc_max == Approx(c.h_ss - c.h_int0).epsilon(1e-12));
}

TEST_CASE("closed forms against pairwise sums over random geometries") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> ua(1.0, 60.0), ratio(5.0, 50.0), ue(1.5, 20.0);
    for (int k = 0; k < 200; ++k) {
        const double a = ua(gen), b = a * ratio(gen), e = ue(gen);
        const auto g = perpendicular(a, b, e);
        const auto want = oracle::perpendicular_pair(a, b, e);
        const auto got = pair_coupling(g);
        REQUIRE(rel_err(got.h_int0, want.h_int0) < 1e-10);
        REQUIRE(rel_err(got.h_ss, want.h_ss) < 1e-10);
        REQUIRE(rel_err(got.h_cc_max, want.h_cc_max) < 1e-10);
        REQUIRE(rel_err(h_cc(-units::pi / 2, g), want.h_cc_max) < 1e-10);
    }
}

TEST_CASE("h_cc follows sin^2") {
    const auto g = perpendicular(20, 200);
    CHECK(h_cc(0.0, g) == 0.0);
    CHECK(h_cc(units::pi / 4, g) == Approx(h_cc_max(g) / 2).epsilon(1e-14));
    CHECK(h_cc(-units::pi / 2, g) == Approx(h_cc_max(g)).epsilon(1e-14));
}

TEST_CASE("degenerate and scaling limits") {
    CHECK(background_interaction(perpendicular(0, 200)) ==
          Approx(4 * units::coulomb_constant / 12.9 / 200).epsilon(1e-14));
    CHECK(doubly_occupied_interaction(perpendicular(20, 400)) ==
          Approx(doubly_occupied_interaction(perpendicular(20, 200)) / 2).epsilon(1e-14));
    CHECK(background_interaction(perpendicular(20, 1e12)) < 1e-5);
    CHECK(h_cc_max(perpendicular(20, 200)) > 0);
}

TEST_CASE("geometry validation") {
    CHECK(perpendicular(20, 200).validate().empty());
    CHECK(perpendicular(20, 150).validate().size() == 1); // below 10a: warning only
    CHECK_THROWS_AS(perpendicular(20, 90).validate(), PhysicsError);
    CHECK_THROWS_AS(perpendicular(20, 200, 1.0).validate(), PhysicsError);
    auto g = in_line();
    g.topology = Topology::grid(2, 2);
    CHECK_THROWS_AS(g.validate(), PhysicsError);
    CHECK_THROWS_AS(background_interaction(in_line()), PhysicsError);
    CHECK_THROWS_AS(inline_interaction(perpendicular(20, 200), Occupancy::Balanced, Occupancy::Balanced),
                    PhysicsError);
}

TEST_CASE("in-line shifts against explicit charges") {
    const double a = 20, b = 200, e = 12.9;
    const auto g = in_line(a, b);
    const double x1 = a + b;
    const auto bal0 = oracle::inline_molecule(0, a, 0);
    const auto bal1 = oracle::inline_molecule(x1, a, 0);
    const auto near0 = oracle::inline_molecule(0, a, +1);  // toward molecule 1
    const auto near1 = oracle::inline_molecule(x1, a, -1); // toward molecule 0
    const double h0 = oracle::interaction(bal0, bal1, e);
    const double e_single = oracle::interaction(near0, bal1, e) - h0;
    const double e_both = oracle::interaction(near0, near1, e) - h0;

    const auto v = inline_interaction(g, Occupancy::SecondDot, Occupancy::FirstDot);
    CHECK(rel_err(v[0], h0) < 1e-12);
    CHECK(rel_err(v[1] - v[0], e_single) < 1e-10);
    CHECK(rel_err(v[3] - v[0], e_both) < 1e-10);
    CHECK(e_single > 0);
    CHECK(v[3] - v[0] > 2 * (v[1] - v[0]));

    const auto idle = inline_interaction(g, Occupancy::Balanced, Occupancy::Balanced);
    CHECK(idle[0] == idle[3]);
}

TEST_CASE("crosstalk: in-line nonzero, perpendicular zero") {
    const auto x = inline_crosstalk(in_line());
    CHECK(x[0] == x[1]);
    CHECK(x[2] == x[3]);
    const auto s = spectator_shift(in_line());
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 0.0);
    CHECK(std::abs(s[2]) > 0.0);
    CHECK(s[2] == s[3]);

    const auto p = spectator_shift(perpendicular(20, 200));
    for (double v : p) CHECK(v == 0.0);

    CHECK(std::abs(spectator_shift(in_line(20, 1e9))[2]) < 1e-8);
}

TEST_CASE("next-nearest-neighbour coupling is small") {
    const auto g = perpendicular(20, 200);
    const double r = nnn_coupling_ratio(g);
    CHECK(r == Approx(0.1257).epsilon(1e-3));
    // direct check against two molecules at distance 2b
    const auto far = oracle::perpendicular_pair(20, 400, 12.9);
    CHECK(rel_err(r, far.h_cc_max / h_cc_max(g)) < 1e-10);
}

TEST_CASE("configuration energy sums every pair") {
    LayoutGeometry g = perpendicular(20, 200);
    g.topology = Topology::line(3);
    std::vector<Occupancy> occ(3, Occupancy::Balanced);
    const double all = configuration_energy(g, occ);
    const double sum = pair_energy(g, 0, Occupancy::Balanced, 1, Occupancy::Balanced) +
                       pair_energy(g, 0, Occupancy::Balanced, 2, Occupancy::Balanced) +
                       pair_energy(g, 1, Occupancy::Balanced, 2, Occupancy::Balanced);
    CHECK(all == Approx(sum).epsilon(1e-14));
}

#include <catch_amalgamated.hpp>

#include <random>

#include "ddmol/errors.hpp"
#include "ddmol/register.hpp"
#include "ddmol/units.hpp"
#include "support/helpers.hpp"

using namespace ddmol;
using testing::frobenius_up_to_phase;
using testing::unitary_of;

namespace {

constexpr double pi = units::pi;
const Topology line2 = Topology::line(2);

std::vector<Complex> cnot_reference() {
    // column-major, control = molecule 0 (MSB), logical S = 1
    std::vector<Complex> u(16, 0.0);
    const std::size_t map[4] = {0, 1, 3, 2};
    for (std::size_t col = 0; col < 4; ++col) u[col * 4 + map[col]] = 1.0;
    return u;
}

bool is_unitary(const Mat2& m) {
    const Complex a = m[0], b = m[1], c = m[2], d = m[3];
    return std::abs(std::norm(a) + std::norm(c) - 1) < 1e-12 && std::abs(std::norm(b) + std::norm(d) - 1) < 1e-12 &&
           std::abs(std::conj(a) * b + std::conj(c) * d) < 1e-12;
}

} // namespace

TEST_CASE("register construction") {
    EncodedRegisterState s(3);
    CHECK(s.dimension() == 8);
    CHECK(s[0] == Complex(1.0));
    CHECK_THROWS_AS(EncodedRegisterState::from_amplitudes({1.0, 1.0}), PhysicsError);
    CHECK_THROWS_AS(EncodedRegisterState::from_amplitudes({1.0, 0.0, 0.0}), PhysicsError);
    auto p = EncodedRegisterState::product({Logical::S, Logical::T});
    CHECK(p[2] == Complex(1.0));
    CHECK(p.bit(2, 0) == Logical::S);
    CHECK(p.bit(2, 1) == Logical::T);
}

TEST_CASE("rotations are unitary") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 200; ++k) {
        REQUIRE(is_unitary(Rotation::z(u(gen)).matrix()));
        REQUIRE(is_unitary(Rotation::xz(u(gen), u(gen)).matrix()));
        REQUIRE(is_unitary(Rotation::euler_x(u(gen)).matrix()));
    }
    CHECK(is_unitary(Rotation::hadamard().matrix()));
}

TEST_CASE("Hadamard and Z on one molecule") {
    EncodedRegisterState s(1);
    apply_rotation(s, 0, Rotation::hadamard());
    CHECK(std::abs(s[0] - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s[1] - 1 / std::sqrt(2.0)) < 1e-15);

    auto t = EncodedRegisterState::from_amplitudes({0.6, 0.8});
    apply_rotation(t, 0, Rotation::z(2 * pi));
    CHECK(std::norm(t[0]) == Catch::Approx(0.36));
    CHECK(std::norm(t[1]) == Catch::Approx(0.64));
}

TEST_CASE("EulerX(pi) is X up to phase") {
    const auto m = Rotation::euler_x(pi).matrix();
    const std::vector<Complex> got(m.begin(), m.end());
    const std::vector<Complex> x = {0.0, 1.0, 1.0, 0.0};
    CHECK(frobenius_up_to_phase(got, x) < 1e-10);

    // general angle: exp(-i phi sx / 2)
    const double phi = 0.731;
    const auto r = Rotation::euler_x(phi).matrix();
    const std::vector<Complex> want = {std::cos(phi / 2), Complex(0, -std::sin(phi / 2)),
                                       Complex(0, -std::sin(phi / 2)), std::cos(phi / 2)};
    CHECK(frobenius_up_to_phase({r.begin(), r.end()}, want) < 1e-12);
}

TEST_CASE("rotation on a shifted molecule is rejected") {
    EncodedRegisterState s(2);
    s.set_charge(1, ChargeSector::Shifted);
    CHECK_THROWS_AS(apply_rotation(s, 1, Rotation::hadamard()), PhysicsError);
    CHECK_NOTHROW(apply_rotation(s, 0, Rotation::hadamard()));
    CHECK_THROWS_AS(apply_rotation(s, 2, Rotation::hadamard()), PhysicsError);
}

TEST_CASE("ising phase") {
    const double r = 1 / std::sqrt(2.0);
    auto phi_plus = EncodedRegisterState::from_amplitudes({r, 0, 0, r});
    ising_phase(phi_plus, line2, 0, 1, pi);
    CHECK(std::abs(phi_plus[3] + r) < 1e-15);
    CHECK(phi_plus[0] == Complex(r));

    auto u = unitary_of(2, [](auto& s) { ising_phase(s, line2, 0, 1, pi); });
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(u[k * 4 + k] - (k == 3 ? -1.0 : 1.0)) < 1e-15);
    }
    auto id = unitary_of(2, [](auto& s) { ising_phase(s, line2, 0, 1, 0.0); });
    CHECK(frobenius_up_to_phase(id, unitary_of(2, [](auto&) {})) == 0.0);

    EncodedRegisterState s3(3);
    CHECK_THROWS_AS(ising_phase(s3, Topology::line(3), 0, 2, pi), PhysicsError);
}

TEST_CASE("CNOT") {
    const auto u = unitary_of(2, [](auto& s) { cnot(s, line2, 0, 1); });
    CHECK(frobenius_up_to_phase(u, cnot_reference()) < 1e-10);

    auto st = EncodedRegisterState::product({Logical::S, Logical::T});
    cnot(st, line2, 0, 1);
    CHECK(std::norm(st[3]) == Catch::Approx(1.0));
    auto ss = EncodedRegisterState::product({Logical::S, Logical::S});
    cnot(ss, line2, 0, 1);
    CHECK(std::norm(ss[2]) == Catch::Approx(1.0));

    const auto twice = unitary_of(2, [](auto& s) {
        cnot(s, line2, 0, 1);
        cnot(s, line2, 0, 1);
    });
    CHECK(frobenius_up_to_phase(twice, unitary_of(2, [](auto&) {})) < 1e-10);
}

TEST_CASE("norm is preserved by random gate sequences") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> ang(-pi, pi);
    const auto topo = Topology::line(4);
    EncodedRegisterState s(4);
    for (int k = 0; k < 300; ++k) {
        const std::size_t m = gen() % 4;
        switch (gen() % 4) {
        case 0: apply_rotation(s, m, Rotation::hadamard()); break;
        case 1: apply_rotation(s, m, Rotation::xz(ang(gen), ang(gen))); break;
        case 2: apply_rotation(s, m, Rotation::euler_x(ang(gen))); break;
        default:
            if (m + 1 < 4) ising_phase(s, topo, m, m + 1, ang(gen));
        }
    }
    CHECK(std::abs(s.norm_squared() - 1) < 1e-12);
}

#include "ddmol/register.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

namespace {

constexpr std::size_t max_register_molecules = 24;

void check_index(const EncodedRegisterState& s, std::size_t m, const char* op) {
    if (m >= s.molecules()) {
        throw PhysicsError(std::string(op) + ": molecule " + std::to_string(m) + " out of range");
    }
}

} // namespace

EncodedRegisterState::EncodedRegisterState(std::size_t n)
    : n_(n), amps_(std::size_t{1} << n), charges_(n, ChargeSector::Balanced) {
    if (n == 0 || n > max_register_molecules) {
        throw PhysicsError("register size must be within 1.." + std::to_string(max_register_molecules));
    }
    amps_[0] = 1.0;
}

EncodedRegisterState EncodedRegisterState::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) throw PhysicsError("amplitude count must be 2^n, n >= 1");
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    EncodedRegisterState s(n);
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm_squared() - 1.0) > 1e-10) throw PhysicsError("amplitudes are not normalized");
    return s;
}

EncodedRegisterState EncodedRegisterState::product(const std::vector<Logical>& labels) {
    EncodedRegisterState s(labels.size());
    std::size_t index = 0;
    for (auto l : labels) index = (index << 1) | static_cast<std::size_t>(l);
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

bool EncodedRegisterState::any_shifted() const {
    return std::any_of(charges_.begin(), charges_.end(),
                       [](ChargeSector c) { return c == ChargeSector::Shifted; });
}

double EncodedRegisterState::norm_squared() const {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double acc, const Complex& a) { return acc + std::norm(a); });
}

void EncodedRegisterState::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) throw PhysicsError("cannot normalize a zero state");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amps_) a *= inv;
}

Mat2 multiply(const Mat2& l, const Mat2& r) {
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

Mat2 Rotation::matrix() const {
    using namespace std::complex_literals;
    switch (kind) {
    case Kind::Z: {
        const double h = 0.5 * angle;
        return {std::exp(-1i * h), 0.0, 0.0, std::exp(1i * h)};
    }
    case Kind::XZ: {
        const double c = std::cos(0.5 * angle);
        const double s = std::sin(0.5 * angle);
        const double nx = std::sin(axis_angle);
        const double nz = std::cos(axis_angle);
        // cos(b/2) I - i sin(b/2) (nx sx + nz sz)
        return {Complex(c, -s * nz), Complex(0.0, -s * nx), Complex(0.0, -s * nx), Complex(c, s * nz)};
    }
    case Kind::Hadamard: {
        const double r = 1.0 / std::sqrt(2.0);
        return {r, r, r, -r};
    }
    case Kind::EulerX: {
        const Mat2 outer = Rotation::xz(units::pi / 4.0, units::pi).matrix();
        return multiply(outer, multiply(Rotation::z(angle).matrix(), outer));
    }
    }
    return {1.0, 0.0, 0.0, 1.0};
}

void apply_matrix(EncodedRegisterState& state, std::size_t m, const Mat2& u) {
    check_index(state, m, "apply_matrix");
    auto amps = state.amplitudes();
    const std::size_t bit = state.mask(m);
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (k & bit) continue;
        const Complex a0 = amps[k];
        const Complex a1 = amps[k | bit];
        amps[k] = u[0] * a0 + u[1] * a1;
        amps[k | bit] = u[2] * a0 + u[3] * a1;
    }
}

void apply_rotation(EncodedRegisterState& state, std::size_t m, const Rotation& r) {
    check_index(state, m, "apply_rotation");
    if (state.charge(m) == ChargeSector::Shifted) {
        throw PhysicsError("apply_rotation: molecule " + std::to_string(m) +
                           " is held in (0,2); the logical basis is unavailable mid-sweep");
    }
    apply_matrix(state, m, r.matrix());
}

void ising_phase(EncodedRegisterState& state, const Topology& topology, std::size_t i,
                 std::size_t j, double phi) {
    check_index(state, i, "ising_phase");
    check_index(state, j, "ising_phase");
    if (!topology.adjacent(i, j)) {
        throw PhysicsError("ising_phase: molecules " + std::to_string(i) + " and " +
                           std::to_string(j) + " are not adjacent");
    }
    const Complex factor = std::polar(1.0, phi);
    const std::size_t both = state.mask(i) | state.mask(j);
    auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if ((k & both) == both) amps[k] *= factor;
    }
}

void cnot(EncodedRegisterState& state, const Topology& topology, std::size_t control,
          std::size_t target) {
    if (!topology.adjacent(control, target)) {
        throw PhysicsError("cnot: molecules " + std::to_string(control) + " and " +
                           std::to_string(target) + " are not adjacent");
    }
    apply_rotation(state, target, Rotation::hadamard());
    ising_phase(state, topology, control, target, units::pi);
    apply_rotation(state, target, Rotation::hadamard());
}

double distance_up_to_phase(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw PhysicsError("distance_up_to_phase: size mismatch");
    Complex overlap = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) overlap += std::conj(b[k]) * a[k];
    const Complex align = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += std::norm(a[k] - align * b[k]);
    return std::sqrt(sum);
}

} // namespace ddmol

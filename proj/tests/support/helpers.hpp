#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "ddmol/register.hpp"

namespace testing {

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Frobenius distance between unitaries after removing the best global phase.
inline double frobenius_up_to_phase(const std::vector<ddmol::Complex>& a, const std::vector<ddmol::Complex>& b) {
    ddmol::Complex overlap = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) overlap += std::conj(b[k]) * a[k];
    const ddmol::Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d += std::norm(a[k] - phase * b[k]);
    return std::sqrt(d);
}

// Column-major 2^n x 2^n matrix of an operation applied to every basis state.
template <class Op>
std::vector<ddmol::Complex> unitary_of(std::size_t n, Op&& op) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<ddmol::Complex> u(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<ddmol::Complex> e(dim, 0.0);
        e[col] = 1.0;
        auto s = ddmol::EncodedRegisterState::from_amplitudes(e);
        op(s);
        for (std::size_t row = 0; row < dim; ++row) u[col * dim + row] = s[row];
    }
    return u;
}

} // namespace testing

#include "ddmol/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

namespace {

std::size_t pow3(std::size_t n) {
    std::size_t p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= 3;
    return p;
}

void check_size(std::size_t n, std::span<const OracleDrive> drives) {
    if (n == 0 || n > OracleState::max_molecules) {
        throw PhysicsError("oracle supports 1.." + std::to_string(OracleState::max_molecules) +
                           " molecules");
    }
    if (drives.size() != n) throw PhysicsError("oracle needs one drive per molecule");
}

double detuning_at(const OracleDrive& d, const MoleculeParams& params, double t) {
    return d.waveform ? d.waveform->at(t) : params.idle_detuning();
}

// Breakpoints of every drive plus anticrossing passages, clipped to [0, T].
std::vector<double> time_grid(std::span<const OracleDrive> drives, double duration) {
    std::vector<double> grid{0.0, duration};
    for (const auto& d : drives) {
        if (!d.waveform) continue;
        const auto& pts = d.waveform->breakpoints();
        for (std::size_t k = 0; k < pts.size(); ++k) {
            grid.push_back(pts[k].time);
            if (k + 1 < pts.size() && pts[k].detuning * pts[k + 1].detuning < 0.0) {
                const double u = -pts[k].detuning / (pts[k + 1].detuning - pts[k].detuning);
                grid.push_back(pts[k].time + u * (pts[k + 1].time - pts[k].time));
            }
        }
    }
    std::erase_if(grid, [duration](double t) { return t < 0.0 || t > duration; });
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

template <class F>
double integrate_grid(const std::vector<double>& grid, F&& f) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        if (grid[k + 1] <= grid[k]) continue;
        total += integrator.integrate(f, grid[k], grid[k + 1], 1e-12);
    }
    return total;
}

std::vector<Occupancy> occupancy_of(std::span<const OracleDrive> drives, std::size_t displaced_mask) {
    const std::size_t n = drives.size();
    std::vector<Occupancy> occ(n, Occupancy::Balanced);
    for (std::size_t m = 0; m < n; ++m) {
        if (displaced_mask & (std::size_t{1} << (n - 1 - m))) occ[m] = drives[m].displaced;
    }
    return occ;
}

// Probability that exactly the molecules in `displaced` (a subset of
// `singlets`) sit in (0,2), given per-molecule (0,2) weights.
double charge_weight(std::span<const double> s02, std::size_t singlets, std::size_t displaced) {
    const std::size_t n = s02.size();
    double w = 1.0;
    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t bit = std::size_t{1} << (n - 1 - m);
        if (!(singlets & bit)) continue;
        w *= (displaced & bit) ? s02[m] : 1.0 - s02[m];
    }
    return w;
}

std::vector<std::size_t> subsets_of(std::size_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
        out.push_back(sub);
        if (sub == 0) break;
    }
    return out;
}

} // namespace

OracleState::OracleState(std::size_t n) : n_(n) {
    if (n == 0 || n > max_molecules) {
        throw PhysicsError("oracle supports 1.." + std::to_string(max_molecules) + " molecules");
    }
    amps_.assign(pow3(n), 0.0);
    amps_[0] = 1.0;
}

OracleState OracleState::from_amplitudes(std::size_t n, std::vector<Complex> amplitudes) {
    OracleState s(n);
    if (amplitudes.size() != s.amps_.size()) throw PhysicsError("oracle amplitude count must be 3^n");
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm_squared() - 1.0) > 1e-10) throw PhysicsError("oracle state is not normalized");
    return s;
}

double OracleState::norm_squared() const {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double acc, const Complex& a) { return acc + std::norm(a); });
}

Level OracleState::level(std::size_t index, std::size_t m) const {
    for (std::size_t k = m + 1; k < n_; ++k) index /= 3;
    return static_cast<Level>(index % 3);
}

double oracle_background_phase(const LayoutGeometry& g, std::size_t n, double duration) {
    std::vector<Occupancy> occ(n, Occupancy::Balanced);
    return configuration_energy(g, occ) * duration / units::hbar;
}

std::vector<double> oracle_logical_phases(const LayoutGeometry& g, const MoleculeParams& params,
                                          std::span<const OracleDrive> drives, std::size_t n,
                                          double duration) {
    check_size(n, drives);
    if (duration < 0.0) throw PhysicsError("oracle duration must be >= 0");
    const std::size_t dim = std::size_t{1} << n;

    // displacement energy of every charge configuration over the all-(1,1) one
    const double background = configuration_energy(g, occupancy_of(drives, 0));
    std::vector<double> shift(dim);
    for (std::size_t sigma = 0; sigma < dim; ++sigma) {
        shift[sigma] = configuration_energy(g, occupancy_of(drives, sigma)) - background;
    }

    const auto grid = time_grid(drives, duration);
    const double bg_phase = background * duration / units::hbar;
    std::vector<double> phases(dim, bg_phase);
    std::vector<double> s02(n);
    for (std::size_t config = 0; config < dim; ++config) {
        const auto subsets = subsets_of(config);
        const auto energy = [&](double t) {
            for (std::size_t m = 0; m < n; ++m) {
                s02[m] = singlet_02_weight(detuning_at(drives[m], params, t), params.tunnel_coupling);
            }
            double e = 0.0;
            for (auto sigma : subsets) {
                if (sigma != 0) e += charge_weight(s02, config, sigma) * shift[sigma];
            }
            return e;
        };
        if (config != 0) phases[config] += integrate_grid(grid, energy) / units::hbar;
    }
    return phases;
}

double oracle_pair_phase(const LayoutGeometry& g, const MoleculeParams& params,
                         std::span<const OracleDrive> drives, std::size_t n, double duration,
                         std::size_t i, std::size_t j, std::size_t config) {
    check_size(n, drives);
    if (i >= n || j >= n || i == j) throw PhysicsError("oracle_pair_phase: bad pair");
    const std::size_t bit_i = std::size_t{1} << (n - 1 - i);
    const std::size_t bit_j = std::size_t{1} << (n - 1 - j);
    const double background = pair_energy(g, i, Occupancy::Balanced, j, Occupancy::Balanced);
    const bool si = config & bit_i;
    const bool sj = config & bit_j;
    const auto grid = time_grid(drives, duration);
    const auto energy = [&](double t) {
        const double wi = si ? singlet_02_weight(detuning_at(drives[i], params, t), params.tunnel_coupling) : 0.0;
        const double wj = sj ? singlet_02_weight(detuning_at(drives[j], params, t), params.tunnel_coupling) : 0.0;
        double e = 0.0;
        for (int di = 0; di < 2; ++di) {
            for (int dj = 0; dj < 2; ++dj) {
                const double w = (di ? wi : 1.0 - wi) * (dj ? wj : 1.0 - wj);
                if (w == 0.0) continue;
                e += w * (pair_energy(g, i, di ? drives[i].displaced : Occupancy::Balanced, j,
                                      dj ? drives[j].displaced : Occupancy::Balanced) -
                          background);
            }
        }
        return e;
    };
    return integrate_grid(grid, energy) / units::hbar;
}

OracleState oracle_evolve(const OracleState& state, const LayoutGeometry& g,
                          const MoleculeParams& params, std::span<const OracleDrive> drives,
                          double duration) {
    const std::size_t n = state.molecules();
    check_size(n, drives);
    params.validate();
    const std::size_t dim = std::size_t{1} << n;

    std::vector<HybridizedPair> start(n), end(n);
    for (std::size_t m = 0; m < n; ++m) {
        start[m] = hybridized_states(
            adiabatic_angle(detuning_at(drives[m], params, 0.0), params.tunnel_coupling));
        end[m] = hybridized_states(
            adiabatic_angle(detuning_at(drives[m], params, duration), params.tunnel_coupling));
    }

    // Every logical configuration expands into 2^{#S} charge configurations.
    const auto expand = [&](std::size_t config, const std::vector<HybridizedPair>& frame, auto&& visit) {
        const std::size_t singlets = static_cast<std::size_t>(std::popcount(config));
        for (std::size_t choice = 0; choice < (std::size_t{1} << singlets); ++choice) {
            std::size_t index = 0;
            double weight = 1.0;
            std::size_t used = 0;
            for (std::size_t m = 0; m < n; ++m) {
                unsigned digit = 0;
                if (config & (std::size_t{1} << (n - 1 - m))) {
                    const bool on02 = choice & (std::size_t{1} << used++);
                    digit = on02 ? 2 : 1;
                    weight *= frame[m].adiabatic_singlet[on02 ? 1 : 0];
                }
                index = index * 3 + digit;
            }
            visit(index, weight);
        }
    };

    std::vector<Complex> logical(dim, 0.0);
    const auto in = state.amplitudes();
    for (std::size_t config = 0; config < dim; ++config) {
        expand(config, start, [&](std::size_t index, double w) { logical[config] += w * in[index]; });
    }

    const auto phases = oracle_logical_phases(g, params, drives, n, duration);
    OracleState out(n);
    auto amps = out.amplitudes();
    std::fill(amps.begin(), amps.end(), Complex(0.0));
    for (std::size_t config = 0; config < dim; ++config) {
        const Complex a = logical[config] * std::polar(1.0, phases[config]);
        expand(config, end, [&](std::size_t index, double w) { amps[index] += w * a; });
    }
    return out;
}

OracleState embed(const EncodedRegisterState& state, std::span<const double> detunings,
                  double tunnel_coupling) {
    const std::size_t n = state.molecules();
    if (detunings.size() != n) throw PhysicsError("embed: one detuning per molecule");
    OracleState out(n);
    auto amps = out.amplitudes();
    std::fill(amps.begin(), amps.end(), Complex(0.0));
    std::vector<HybridizedPair> frame(n);
    for (std::size_t m = 0; m < n; ++m) {
        frame[m] = hybridized_states(adiabatic_angle(detunings[m], tunnel_coupling));
    }
    for (std::size_t config = 0; config < state.dimension(); ++config) {
        const Complex a = state[config];
        if (a == Complex(0.0)) continue;
        const std::size_t singlets = static_cast<std::size_t>(std::popcount(config));
        for (std::size_t choice = 0; choice < (std::size_t{1} << singlets); ++choice) {
            std::size_t index = 0;
            double weight = 1.0;
            std::size_t used = 0;
            for (std::size_t m = 0; m < n; ++m) {
                unsigned digit = 0;
                if (state.bit(config, m) == Logical::S) {
                    const bool on02 = choice & (std::size_t{1} << used++);
                    digit = on02 ? 2 : 1;
                    weight *= frame[m].adiabatic_singlet[on02 ? 1 : 0];
                }
                index = index * 3 + digit;
            }
            amps[index] += weight * a;
        }
    }
    return out;
}

} // namespace ddmol

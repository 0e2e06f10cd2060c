#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ddmol/electrostatics.hpp"
#include "ddmol/physics.hpp"
#include "ddmol/register.hpp"
#include "ddmol/waveform.hpp"

namespace ddmol {

/// Per-molecule level of the three-level model.
enum class Level : unsigned { T11 = 0, S11 = 1, S02 = 2 };

/// Amplitudes over {T(1,1), S(1,1), S(0,2)}^n; molecule 0 is the most
/// significant base-3 digit.
class OracleState {
public:
    static constexpr std::size_t max_molecules = 4;

    explicit OracleState(std::size_t n);
    static OracleState from_amplitudes(std::size_t n, std::vector<Complex> amplitudes);

    std::size_t molecules() const { return n_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    double norm_squared() const;

    Level level(std::size_t index, std::size_t m) const;

private:
    std::size_t n_;
    std::vector<Complex> amps_;
};

/// Control applied to one molecule during an oracle run. Without a waveform
/// the molecule idles at -Ec/2; otherwise the waveform is held at its end
/// value past its last breakpoint.
struct OracleDrive {
    std::optional<DetuningWaveform> waveform;
    Occupancy displaced = Occupancy::SecondDot;
};

/// Evolves under the diagonal inter-molecule Coulomb Hamiltonian of every
/// molecule pair, with each singlet following its adiabatic state
/// cos(theta)|S(1,1)> + sin(theta)|S(0,2)>. The energy of a logical
/// configuration is the expectation of the pairwise Coulomb sum over its
/// charge distribution; phases are integrated with tanh-sinh quadrature.
/// Phase convention e^{+i E t / hbar}. The background is kept.
OracleState oracle_evolve(const OracleState& state, const LayoutGeometry& g,
                          const MoleculeParams& params, std::span<const OracleDrive> drives,
                          double duration);

/// Phases (1/hbar) * integral E_L dt for every logical configuration L,
/// indexed like EncodedRegisterState.
std::vector<double> oracle_logical_phases(const LayoutGeometry& g, const MoleculeParams& params,
                                          std::span<const OracleDrive> drives, std::size_t n,
                                          double duration);

/// Coulomb phase of pair (i, j) alone in configuration `config`, minus the
/// same pair's all-(1,1) background.
double oracle_pair_phase(const LayoutGeometry& g, const MoleculeParams& params,
                         std::span<const OracleDrive> drives, std::size_t n, double duration,
                         std::size_t i, std::size_t j, std::size_t config);

/// (1/hbar) * all-(1,1) configuration energy * duration.
double oracle_background_phase(const LayoutGeometry& g, std::size_t n, double duration);

/// Maps an encoded state into the three-level space with each |S> replaced
/// by its adiabatic state at the given detunings.
OracleState embed(const EncodedRegisterState& state, std::span<const double> detunings,
                  double tunnel_coupling);

} // namespace ddmol

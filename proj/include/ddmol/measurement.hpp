#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "ddmol/geometry.hpp"
#include "ddmol/physics.hpp"
#include "ddmol/register.hpp"
#include "ddmol/rng.hpp"
#include "ddmol/waveform.hpp"

namespace ddmol {

/// QPC current next to a molecule pair: I_max for both (1,1), I_mid for
/// exactly one in (0,2), I_min for both in (0,2).
enum class CurrentLevel { Max, Mid, Min };

std::string to_string(CurrentLevel level);

/// Normalised current values. Only the ordering max > mid > min matters.
struct QpcCurrents {
    double max = 1.0;
    double mid = 0.5;
    double min = 0.0;

    double value(CurrentLevel level) const;
};

struct QpcReading {
    CurrentLevel level;
    double current;
    EncodedRegisterState post_state;
    double accumulated_phase; // Ising phase of the sweep that enabled the read
};

enum class SpinOutcome { S, T };

struct SingleReading {
    SpinOutcome outcome;
    double current;
    EncodedRegisterState post_state;
};

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string to_string(BellLabel label);
BellLabel bell_label_from_string(const std::string& s);

/// Phi+- = (|TT> +- |SS>)/sqrt2, Psi+- = (|TS> +- |ST>)/sqrt2.
EncodedRegisterState bell_state(BellLabel label);

/// Amplitudes over (Phi+, Phi-, Psi+, Psi-).
struct BellDecomposition {
    std::array<Complex, 4> p{};
    double norm_squared() const;
};

/// Throws PhysicsError unless the state has exactly two molecules.
BellDecomposition decompose_bell(const EncodedRegisterState& state);

enum class BellClass { TTOrPhiSector, SSOrPhiSector, PsiPlus, PsiMinus };

std::string to_string(BellClass c);

struct BellOutcome {
    QpcReading round1;
    std::optional<QpcReading> round2; // present iff round1 is I_mid
    BellClass classification;
    EncodedRegisterState final_state; // both molecules back in (1,1)
};

struct MeasurementSettings {
    QpcCurrents currents;
    double read_duration = 1000.0; // ns
    double safety_factor = default_safety_factor;
    /// Ramp of the measurement sweep; 0 selects the shortest valid ramp.
    double ramp = 0.0;
};

/// Born probability of outcome S for molecule m.
double singlet_probability(const EncodedRegisterState& state, std::size_t m);

/// Probabilities of (I_max, I_mid, I_min) for the pair (i, j).
std::array<double, 3> pair_level_probabilities(const EncodedRegisterState& state, std::size_t i,
                                               std::size_t j);

/// Sweep used to move a pair into the charge-sensitive configuration:
/// idle -> +Ec/2, held for the read, back to idle.
DetuningWaveform measurement_sweep(const MoleculeParams& params, const MeasurementSettings& settings);

/// Projective S/T readout of one molecule. Throws PhysicsError if a
/// neighbour (or the molecule itself) is already held in (0,2).
SingleReading qpc_read_single(const EncodedRegisterState& state, const Topology& topology,
                              std::size_t m, RngStream& rng, const QpcCurrents& currents = {});

/// Three-outcome charge readout of an adjacent pair already swept to +Ec/2
/// (both sectors Shifted), with the sweep's phase already applied.
QpcReading qpc_read_pair(const EncodedRegisterState& state, const Topology& topology, std::size_t i,
                         std::size_t j, RngStream& rng, double accumulated_phase = 0.0,
                         const QpcCurrents& currents = {});

/// Two-round partial Bell measurement of the adjacent pair (i, j).
BellOutcome bell_measure(const EncodedRegisterState& state, const Topology& topology, std::size_t i,
                         std::size_t j, const LayoutGeometry& g, const MoleculeParams& params,
                         RngStream& rng, const MeasurementSettings& settings = {});

} // namespace ddmol

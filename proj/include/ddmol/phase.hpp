#pragma once

#include "ddmol/geometry.hpp"
#include "ddmol/physics.hpp"
#include "ddmol/waveform.hpp"

namespace ddmol {

/// Reference point for the accumulated Ising phase.
///
/// `IdleSubtracted` removes the coupling still present at the idle point
/// -Ec/2, so a molecule pair that never leaves idle accumulates exactly zero.
/// `Absolute` integrates h_cc(theta) as is.
enum class PhaseReference { IdleSubtracted, Absolute };

/// Effective Ising energy of a pair swept together to detuning eps [µeV].
double ising_energy(double detuning, const LayoutGeometry& g, const MoleculeParams& params,
                    PhaseReference ref = PhaseReference::IdleSubtracted);

/// phi = (1/hbar) * integral of ising_energy(eps(t)) dt over a simultaneous
/// sweep of both molecules. Adaptive Gauss-Kronrod per linear segment.
/// Throws PhysicsError if the waveforms differ or leave [-Ec/2, +Ec/2].
double phase_from_waveform(const DetuningWaveform& first, const DetuningWaveform& second,
                           const LayoutGeometry& g, const MoleculeParams& params,
                           PhaseReference ref = PhaseReference::IdleSubtracted);

double phase_from_waveform(const DetuningWaveform& waveform, const LayoutGeometry& g,
                           const MoleculeParams& params,
                           PhaseReference ref = PhaseReference::IdleSubtracted);

/// Hold time at +Ec/2 that accumulates `phi` (no ramps).
double hold_time_for_phase(double phi, const LayoutGeometry& g, const MoleculeParams& params,
                           PhaseReference ref = PhaseReference::IdleSubtracted);

} // namespace ddmol

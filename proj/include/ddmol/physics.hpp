#pragma once

#include <array>
#include <complex>
#include <limits>
#include <string>

namespace ddmol {

/// Device parameters for one double-dot molecule.
///
/// Energies in µeV, field in mT, times in ns. The two-charge-state model
/// needs Tc well below Ec; construction via `validated()` enforces Tc < Ec/10.
struct MoleculeParams {
    double tunnel_coupling = 10.0;   // Tc
    double charging_energy = 5000.0; // Ec
    double g_factor = 0.44;          // |g*|
    double nuclear_field = 3.0;      // B_nuc
    double coherence_time = 10.0;    // T2 without echo
    double echo_coherence_time = 1000.0;

    /// Throws PhysicsError when any invariant fails.
    void validate() const;
    MoleculeParams validated() const {
        validate();
        return *this;
    }

    double idle_detuning() const { return -0.5 * charging_energy; }
    double hold_detuning() const { return 0.5 * charging_energy; }
    double coherence_limit(bool echo) const { return echo ? echo_coherence_time : coherence_time; }
};

/// Adiabatic mixing angle between |S(1,1)> and |S(0,2)>.
///
///   theta = arctan(2 Tc / (eps - sqrt(4 Tc^2 + eps^2)))
///
/// The printed branch lies in (-pi/2, 0): theta -> 0 deep in (1,1) and
/// theta -> -pi/2 deep in (0,2). Only sin^2(theta) enters the couplings.
double adiabatic_angle(double detuning, double tunnel_coupling);

/// sin^2(theta(eps)), the (0,2) weight of the adiabatic singlet, evaluated
/// without cancellation at either end of the detuning range.
double singlet_02_weight(double detuning, double tunnel_coupling);

/// Two-component amplitudes in the basis {|S(1,1)>, |S(0,2)>}.
using Spinor2 = std::array<double, 2>;

struct HybridizedPair {
    Spinor2 adiabatic_singlet; // |S~> = ( cos t, sin t)
    Spinor2 orthogonal;        // |G~> = (-sin t, cos t)
};

HybridizedPair hybridized_states(double theta);

/// Eigenvalues of the singlet charge Hamiltonian, lower branch first.
///
/// In the basis {|S(1,1)>, |S(0,2)>} the Hamiltonian is
///   [[ eps/2, Tc ], [ Tc, -eps/2 ]]
/// whose lower eigenvector is exactly |S~>. Branches are -/+ sqrt(eps^2/4 + Tc^2).
std::array<double, 2> charge_branch_energies(double detuning, double tunnel_coupling);

/// Allowed duration range for one full -Ec/2 -> +Ec/2 sweep.
struct SweepWindow {
    double min_duration = 0.0; // slow compared with hbar/Tc
    double max_duration = std::numeric_limits<double>::infinity(); // fast compared with nuclear mixing

    bool empty() const { return !(min_duration < max_duration); }
    bool bounded() const { return max_duration < std::numeric_limits<double>::infinity(); }
};

/// hbar / (g* muB B_nuc) in ns; infinite when B_nuc = 0.
double nuclear_mixing_time(const MoleculeParams& params);

/// Rapid-adiabatic-passage window. An empty window is returned as-is (check
/// `empty()`), never clamped. Throws PhysicsError for safety_factor < 1.
SweepWindow sweep_rate_window(const MoleculeParams& params, double safety_factor = 10.0);

inline constexpr double default_safety_factor = 10.0;

} // namespace ddmol

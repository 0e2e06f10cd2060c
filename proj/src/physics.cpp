#include "ddmol/physics.hpp"

#include <cmath>
#include <sstream>

#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw PhysicsError(std::string(name) + " must be finite");
    }
}

} // namespace

void MoleculeParams::validate() const {
    require_finite(tunnel_coupling, "tunnel_coupling");
    require_finite(charging_energy, "charging_energy");
    require_finite(g_factor, "g_factor");
    require_finite(nuclear_field, "nuclear_field");
    require_finite(coherence_time, "coherence_time");
    require_finite(echo_coherence_time, "echo_coherence_time");
    if (tunnel_coupling <= 0.0) throw PhysicsError("tunnel_coupling must be > 0");
    if (charging_energy <= 0.0) throw PhysicsError("charging_energy must be > 0");
    if (coherence_time <= 0.0) throw PhysicsError("coherence_time must be > 0");
    if (echo_coherence_time <= 0.0) throw PhysicsError("echo_coherence_time must be > 0");
    if (nuclear_field < 0.0) throw PhysicsError("nuclear_field must be >= 0");
    if (!(tunnel_coupling < charging_energy / 10.0)) {
        std::ostringstream os;
        os << "two-charge-state model needs Tc < Ec/10 (Tc=" << tunnel_coupling
           << ", Ec=" << charging_energy << ")";
        throw PhysicsError(os.str());
    }
}

double adiabatic_angle(double detuning, double tunnel_coupling) {
    if (!std::isfinite(detuning) || !std::isfinite(tunnel_coupling)) {
        throw PhysicsError("adiabatic_angle: non-finite input");
    }
    if (tunnel_coupling <= 0.0) throw PhysicsError("adiabatic_angle: Tc must be > 0");
    const double r = std::hypot(detuning, 2.0 * tunnel_coupling);
    // eps - r loses all digits for eps >> Tc; use the conjugate form there.
    const double denom = detuning > 0.0 ? -4.0 * tunnel_coupling * tunnel_coupling / (detuning + r)
                                        : detuning - r;
    return std::atan(2.0 * tunnel_coupling / denom);
}

double singlet_02_weight(double detuning, double tunnel_coupling) {
    if (!std::isfinite(detuning) || !std::isfinite(tunnel_coupling)) {
        throw PhysicsError("singlet_02_weight: non-finite input");
    }
    if (tunnel_coupling <= 0.0) throw PhysicsError("singlet_02_weight: Tc must be > 0");
    const double r = std::hypot(detuning, 2.0 * tunnel_coupling);
    if (detuning >= 0.0) return (r + detuning) / (2.0 * r);
    return 2.0 * tunnel_coupling * tunnel_coupling / (r * (r - detuning));
}

HybridizedPair hybridized_states(double theta) {
    if (!std::isfinite(theta)) throw PhysicsError("hybridized_states: non-finite angle");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {{c, s}, {-s, c}};
}

std::array<double, 2> charge_branch_energies(double detuning, double tunnel_coupling) {
    if (tunnel_coupling <= 0.0) throw PhysicsError("charge_branch_energies: Tc must be > 0");
    const double half_gap = std::hypot(0.5 * detuning, tunnel_coupling);
    return {-half_gap, half_gap};
}

double nuclear_mixing_time(const MoleculeParams& params) {
    const double zeeman = std::abs(params.g_factor) * units::bohr_magneton * params.nuclear_field * 1e-3;
    if (zeeman == 0.0) return std::numeric_limits<double>::infinity();
    return units::hbar / zeeman;
}

SweepWindow sweep_rate_window(const MoleculeParams& params, double safety_factor) {
    if (!(safety_factor >= 1.0)) throw PhysicsError("sweep_rate_window: safety_factor must be >= 1");
    params.validate();
    SweepWindow w;
    w.min_duration = safety_factor * units::hbar / params.tunnel_coupling;
    w.max_duration = nuclear_mixing_time(params) / safety_factor;
    return w;
}

} // namespace ddmol

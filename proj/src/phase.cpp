#include "ddmol/phase.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ddmol/electrostatics.hpp"
#include "ddmol/errors.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

namespace {

constexpr double quadrature_tolerance = 1e-11;
constexpr unsigned quadrature_depth = 12;

// Integral of f(eps) along one linear segment, in time units.
double integrate_segment(const Breakpoint& p, const Breakpoint& q, double tunnel_coupling, const auto& f) {
    using Integrator = boost::math::quadrature::gauss_kronrod<double, 31>;
    const double dt = q.time - p.time;
    const double de = q.detuning - p.detuning;
    const auto along = [&](double u) { return f(p.detuning + u * de); };
    // sin^2 turns over within a few Tc of the anticrossing; split there
    std::vector<double> cuts{0.0, 1.0};
    for (double e : {-50.0, -5.0, 0.0, 5.0, 50.0}) {
        const double u = (e * tunnel_coupling - p.detuning) / de;
        if (u > 0.0 && u < 1.0) cuts.push_back(u);
    }
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        sum += Integrator::integrate(along, cuts[k], cuts[k + 1], quadrature_depth, quadrature_tolerance);
    }
    return dt * sum;
}

void check_range(const DetuningWaveform& w, const MoleculeParams& params) {
    const double slack = 1e-12 * params.charging_energy;
    for (const auto& b : w.breakpoints()) {
        if (b.detuning < params.idle_detuning() - slack || b.detuning > params.hold_detuning() + slack) {
            throw PhysicsError("phase_from_waveform: detuning outside [-Ec/2, +Ec/2]");
        }
    }
}

} // namespace

double ising_energy(double detuning, const LayoutGeometry& g, const MoleculeParams& params,
                    PhaseReference ref) {
    double weight = singlet_02_weight(detuning, params.tunnel_coupling);
    if (ref == PhaseReference::IdleSubtracted) {
        weight -= singlet_02_weight(params.idle_detuning(), params.tunnel_coupling);
    }
    return weight * h_cc_max(g);
}

double phase_from_waveform(const DetuningWaveform& first, const DetuningWaveform& second,
                           const LayoutGeometry& g, const MoleculeParams& params, PhaseReference ref) {
    const auto& a = first.breakpoints();
    const auto& b = second.breakpoints();
    bool same = a.size() == b.size();
    for (std::size_t k = 0; same && k < a.size(); ++k) {
        same = a[k].time == b[k].time && a[k].detuning == b[k].detuning;
    }
    if (!same) throw PhysicsError("phase_from_waveform: the pair must be swept simultaneously");
    return phase_from_waveform(first, g, params, ref);
}

double phase_from_waveform(const DetuningWaveform& waveform, const LayoutGeometry& g,
                           const MoleculeParams& params, PhaseReference ref) {
    params.validate();
    check_range(waveform, params);
    const double hcc = h_cc_max(g);
    const double idle = ref == PhaseReference::IdleSubtracted
                            ? singlet_02_weight(params.idle_detuning(), params.tunnel_coupling)
                            : 0.0;
    const auto weight = [&](double eps) { return singlet_02_weight(eps, params.tunnel_coupling) - idle; };
    const auto& pts = waveform.breakpoints();
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        if (pts[k].detuning == pts[k + 1].detuning) {
            integral += (pts[k + 1].time - pts[k].time) * weight(pts[k].detuning);
        } else {
            integral += integrate_segment(pts[k], pts[k + 1], params.tunnel_coupling, weight);
        }
    }
    return hcc * integral / units::hbar;
}

double hold_time_for_phase(double phi, const LayoutGeometry& g, const MoleculeParams& params,
                           PhaseReference ref) {
    const double rate = ising_energy(params.hold_detuning(), g, params, ref) / units::hbar;
    if (!(rate > 0.0)) throw PhysicsError("hold_time_for_phase: coupling is off at +Ec/2");
    return phi / rate;
}

} // namespace ddmol

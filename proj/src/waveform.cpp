#include "ddmol/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ddmol/errors.hpp"

namespace ddmol {

DetuningWaveform::DetuningWaveform(std::vector<Breakpoint> points, bool measurement_hold)
    : points_(std::move(points)), hold_(measurement_hold) {
    if (points_.empty()) throw PhysicsError("waveform needs at least one breakpoint");
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (!std::isfinite(points_[k].time) || !std::isfinite(points_[k].detuning)) {
            throw PhysicsError("waveform breakpoint " + std::to_string(k) + " is not finite");
        }
        if (k > 0 && !(points_[k].time > points_[k - 1].time)) {
            throw PhysicsError("waveform times must be strictly increasing (breakpoint " +
                               std::to_string(k) + ")");
        }
    }
}

DetuningWaveform DetuningWaveform::constant(double detuning, double duration, bool measurement_hold) {
    if (!(duration > 0.0)) throw PhysicsError("constant waveform needs a positive duration");
    return DetuningWaveform({{0.0, detuning}, {duration, detuning}}, measurement_hold);
}

DetuningWaveform DetuningWaveform::trapezoid(const MoleculeParams& params, double ramp, double hold) {
    if (!(ramp > 0.0)) throw PhysicsError("trapezoid ramp must be > 0");
    if (hold < 0.0) throw PhysicsError("trapezoid hold must be >= 0");
    const double lo = params.idle_detuning();
    const double hi = params.hold_detuning();
    std::vector<Breakpoint> pts{{0.0, lo}, {ramp, hi}};
    if (hold > 0.0) pts.push_back({ramp + hold, hi});
    pts.push_back({2.0 * ramp + hold, lo});
    return DetuningWaveform(std::move(pts));
}

double DetuningWaveform::start_time() const { return points_.empty() ? 0.0 : points_.front().time; }
double DetuningWaveform::end_time() const { return points_.empty() ? 0.0 : points_.back().time; }

double DetuningWaveform::at(double t) const {
    if (points_.empty()) throw PhysicsError("empty waveform");
    if (t <= points_.front().time) return points_.front().detuning;
    if (t >= points_.back().time) return points_.back().detuning;
    auto hi = std::upper_bound(points_.begin(), points_.end(), t,
                               [](double v, const Breakpoint& b) { return v < b.time; });
    auto lo = hi - 1;
    const double u = (t - lo->time) / (hi->time - lo->time);
    return lo->detuning + u * (hi->detuning - lo->detuning);
}

std::string to_string(WaveformIssue issue) {
    switch (issue) {
    case WaveformIssue::OutOfRange: return "out-of-range";
    case WaveformIssue::EndpointNotIdle: return "endpoint-not-idle";
    case WaveformIssue::TooFast: return "too-fast";
    case WaveformIssue::TooSlow: return "too-slow";
    case WaveformIssue::EmptyWindow: return "empty-window";
    }
    return "unknown";
}

bool WaveformReport::has(WaveformIssue issue) const {
    return std::any_of(findings.begin(), findings.end(),
                       [issue](const WaveformFinding& f) { return f.issue == issue; });
}

WaveformReport validate_waveform(const DetuningWaveform& waveform, const MoleculeParams& params,
                                 double safety_factor) {
    WaveformReport report;
    report.window = sweep_rate_window(params, safety_factor);
    const auto& pts = waveform.breakpoints();
    const double lo = params.idle_detuning();
    const double hi = params.hold_detuning();
    // relative slack for breakpoints written as exactly +-Ec/2
    const double slack = 1e-12 * params.charging_energy;

    if (report.window.empty()) {
        std::ostringstream os;
        os << "no valid sweep speed: min duration " << report.window.min_duration
           << " ns >= max duration " << report.window.max_duration << " ns";
        report.findings.push_back({WaveformIssue::EmptyWindow, 0, 0.0, os.str()});
    }

    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (pts[k].detuning < lo - slack || pts[k].detuning > hi + slack) {
            std::ostringstream os;
            os << "detuning " << pts[k].detuning << " ueV outside [" << lo << ", " << hi << "]";
            report.findings.push_back({WaveformIssue::OutOfRange, k, 0.0, os.str()});
        }
    }
    if (!waveform.measurement_hold() && !pts.empty()) {
        if (std::abs(pts.front().detuning - lo) > slack) {
            report.findings.push_back(
                {WaveformIssue::EndpointNotIdle, 0, 0.0, "waveform does not start at -Ec/2"});
        }
        if (std::abs(pts.back().detuning - lo) > slack) {
            report.findings.push_back({WaveformIssue::EndpointNotIdle, pts.size() - 1, 0.0,
                                       "waveform does not end at -Ec/2"});
        }
    }

    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const double de = std::abs(pts[k + 1].detuning - pts[k].detuning);
        if (de == 0.0) continue;
        const double dt = pts[k + 1].time - pts[k].time;
        const double full_sweep = dt * params.charging_energy / de;
        if (full_sweep < report.window.min_duration) {
            std::ostringstream os;
            os << "segment " << k << " violates adiabaticity with respect to Tc: full-sweep time "
               << full_sweep << " ns < " << report.window.min_duration << " ns";
            report.findings.push_back({WaveformIssue::TooFast, k, full_sweep, os.str()});
        } else if (full_sweep > report.window.max_duration) {
            std::ostringstream os;
            os << "segment " << k << " is slow relative to nuclear mixing: full-sweep time "
               << full_sweep << " ns > " << report.window.max_duration << " ns";
            report.findings.push_back({WaveformIssue::TooSlow, k, full_sweep, os.str()});
        }
    }
    return report;
}

} // namespace ddmol

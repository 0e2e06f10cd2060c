#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ddmol/physics.hpp"

namespace ddmol {

struct Breakpoint {
    double time = 0.0;     // ns
    double detuning = 0.0; // µeV
};

/// Piecewise-linear detuning control epsilon(t).
///
/// Times are strictly increasing. A waveform normally starts and ends at the
/// idle point -Ec/2; `measurement_hold` lifts that requirement for waveforms
/// that park a molecule in (0,2) between other operations.
class DetuningWaveform {
public:
    DetuningWaveform() = default;
    /// Throws PhysicsError on fewer than one breakpoint, non-finite values or
    /// non-increasing times.
    explicit DetuningWaveform(std::vector<Breakpoint> points, bool measurement_hold = false);

    static DetuningWaveform constant(double detuning, double duration, bool measurement_hold = false);
    /// Idle -> +Ec/2 in `ramp`, hold, back to idle in `ramp`.
    static DetuningWaveform trapezoid(const MoleculeParams& params, double ramp, double hold);

    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    bool measurement_hold() const { return hold_; }
    bool empty() const { return points_.empty(); }

    double start_time() const;
    double end_time() const;
    double duration() const { return end_time() - start_time(); }

    /// Value at t, clamped to the first/last breakpoint outside the support.
    double at(double t) const;

    std::size_t segment_count() const { return points_.size() < 2 ? 0 : points_.size() - 1; }

private:
    std::vector<Breakpoint> points_;
    bool hold_ = false;
};

enum class WaveformIssue {
    OutOfRange,      // a breakpoint outside [-Ec/2, +Ec/2]
    EndpointNotIdle, // starts/ends away from -Ec/2 without the hold flag
    TooFast,         // violates adiabaticity with respect to Tc
    TooSlow,         // slower than the nuclear mixing bound allows
    EmptyWindow,     // the parameters admit no valid sweep speed at all
};

std::string to_string(WaveformIssue issue);

struct WaveformFinding {
    WaveformIssue issue;
    std::size_t segment = 0; // breakpoint index for range/endpoint findings
    double equivalent_sweep_time = 0.0;
    std::string message;
};

struct WaveformReport {
    SweepWindow window;
    std::vector<WaveformFinding> findings;

    bool ok() const { return findings.empty(); }
    bool has(WaveformIssue issue) const;
};

/// Checks range, endpoints and the local sweep rate of every linear segment.
/// A segment's rate is converted to the time a full -Ec/2 -> +Ec/2 sweep would
/// take at that rate and compared with `sweep_rate_window`. Holds are exempt.
WaveformReport validate_waveform(const DetuningWaveform& waveform, const MoleculeParams& params,
                                 double safety_factor = default_safety_factor);

} // namespace ddmol

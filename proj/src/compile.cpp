#include "ddmol/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ddmol/errors.hpp"
#include "ddmol/phase.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

double planned_ramp(const MoleculeParams& params, const CompileOptions& options) {
    const auto window = sweep_rate_window(params, options.safety_factor);
    if (window.empty()) {
        std::ostringstream os;
        os << "no valid sweep window: min " << window.min_duration << " ns >= max " << window.max_duration << " ns";
        throw PhysicsError(os.str());
    }
    if (options.ramp) {
        const double r = *options.ramp;
        if (!(r >= window.min_duration && r <= window.max_duration)) {
            std::ostringstream os;
            os << "ramp " << r << " ns outside the sweep window [" << window.min_duration << ", "
               << window.max_duration << "] ns";
            throw PhysicsError(os.str());
        }
        return r;
    }
    if (!window.bounded()) return window.min_duration;
    return std::clamp(std::sqrt(window.min_duration * window.max_duration), window.min_duration,
                      window.max_duration);
}

SweepPlan plan_interaction_sweep(const LayoutGeometry& g, const MoleculeParams& params,
                                 const CompileOptions& options) {
    if (options.extra_periods < 0) throw PhysicsError("extra_periods must be >= 0");
    SweepPlan plan;
    plan.ramp = planned_ramp(params, options);
    plan.ramp_phase = phase_from_waveform(DetuningWaveform::trapezoid(params, plan.ramp, 0.0), g, params);
    // smallest odd multiple of pi not below the ramp contribution
    int m = static_cast<int>(std::ceil(plan.ramp_phase / units::pi - 1e-12));
    if (m < 1) m = 1;
    if (m % 2 == 0) ++m;
    m += 2 * options.extra_periods;
    plan.phase_multiple = m;
    plan.hold = std::max(0.0, hold_time_for_phase(m * units::pi - plan.ramp_phase, g, params));
    return plan;
}

std::vector<std::size_t> greedy_coloring(const Topology& topology) {
    const std::size_t n = topology.size();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> taken;
        for (auto j : topology.neighbors(i)) {
            if (j < i) taken.insert(color[j]);
        }
        std::size_t c = 0;
        while (taken.count(c)) ++c;
        color[i] = c;
    }
    return color;
}

ScheduleProgram init_schedule(const Topology& topology, double ramp) {
    const auto color = greedy_coloring(topology);
    const std::size_t classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    ScheduleProgram p;
    for (std::size_t c = 0; c < classes; ++c) {
        Action a;
        a.kind = ActionKind::Init;
        a.ramp = ramp;
        a.duration = ramp;
        for (std::size_t i = 0; i < color.size(); ++i) {
            if (color[i] == c) a.molecules.push_back(i);
        }
        p.steps.push_back({ramp, {std::move(a)}});
    }
    return p;
}

namespace {

// A unit of scheduling: actions that must run in consecutive steps, each
// depending on the previous through `chain`.
struct Pending {
    Action action;
    std::vector<std::size_t> depends_on; // molecules that order this action
    bool exclusive = false;
};

bool fits(const Step& step, const Pending& p, const Topology& topology) {
    if (p.exclusive) return false;
    for (const auto& other : step.actions) {
        if (other.kind == ActionKind::ReadSingle || other.kind == ActionKind::ReadPair) return false;
        for (auto m : p.action.molecules) {
            if (std::find(other.molecules.begin(), other.molecules.end(), m) != other.molecules.end()) return false;
        }
        if (p.action.occupies_02() && other.occupies_02()) {
            for (auto m : p.action.molecules) {
                for (auto o : other.molecules) {
                    if (topology.adjacent(m, o)) return false;
                }
            }
        }
    }
    return true;
}

void require_pair(const Gate& gate, const Topology& topology) {
    const auto i = gate.molecules.at(0);
    const auto j = gate.molecules.at(1);
    if (!topology.adjacent(i, j)) {
        std::ostringstream os;
        os << to_string(gate.kind) << " " << i << " " << j;
        if (gate.line) os << " (line " << gate.line << ")";
        os << ": non-adjacent pair";
        if (!topology.contains(i) || !topology.contains(j)) os << " (molecule outside the " << topology.size() << "-molecule topology)";
        os << "; routing is not supported";
        throw PhysicsError(os.str());
    }
}

Action rotate(std::size_t m, const Rotation& r) {
    Action a;
    a.kind = ActionKind::Rotate;
    a.molecules = {m};
    a.rotation = r;
    a.duration = r.duration;
    return a;
}

} // namespace

ScheduleProgram compile(const std::vector<Gate>& circuit, const LayoutGeometry& g,
                        const MoleculeParams& params, const CompileOptions& options) {
    params.validate();
    g.validate();
    const Topology& topology = g.topology;
    ScheduleProgram program;
    std::vector<long> last(topology.size(), -1);

    std::optional<SweepPlan> sweep;
    const auto interaction = [&](std::size_t i, std::size_t j) {
        if (!sweep) sweep = plan_interaction_sweep(g, params, options);
        Action a;
        a.kind = ActionKind::SweepPair;
        a.molecules = {i, j};
        a.ramp = sweep->ramp;
        a.hold = sweep->hold;
        a.phase_multiple = sweep->phase_multiple;
        a.duration = sweep->total();
        return a;
    };

    if (options.include_init) {
        const double ramp = planned_ramp(params, options);
        program = init_schedule(topology, ramp);
        std::fill(last.begin(), last.end(), static_cast<long>(program.steps.size()) - 1);
    }

    const auto place = [&](const Pending& p) {
        long earliest = -1;
        for (auto m : p.depends_on) earliest = std::max(earliest, last[m]);
        std::size_t s = static_cast<std::size_t>(earliest + 1);
        while (s < program.steps.size() && !fits(program.steps[s], p, topology)) ++s;
        if (s == program.steps.size()) program.steps.push_back({});
        auto& step = program.steps[s];
        step.actions.push_back(p.action);
        step.duration = std::max(step.duration, p.action.duration);
        for (auto m : p.depends_on) last[m] = static_cast<long>(s);
    };

    for (const auto& gate : circuit) {
        for (auto m : gate.molecules) {
            if (!topology.contains(m) && gate.molecules.size() == 1) {
                std::ostringstream os;
                os << to_string(gate.kind) << " " << m;
                if (gate.line) os << " (line " << gate.line << ")";
                os << ": molecule outside the " << topology.size() << "-molecule topology";
                throw PhysicsError(os.str());
            }
        }
        switch (gate.kind) {
        case GateKind::H: place({rotate(gate.molecules[0], Rotation::hadamard()), gate.molecules}); break;
        case GateKind::Z: place({rotate(gate.molecules[0], Rotation::z(gate.angle)), gate.molecules}); break;
        case GateKind::XZ:
            place({rotate(gate.molecules[0], Rotation::xz(gate.axis_angle, gate.angle)), gate.molecules});
            break;
        case GateKind::CZ:
            require_pair(gate, topology);
            place({interaction(gate.molecules[0], gate.molecules[1]), gate.molecules});
            break;
        case GateKind::CNOT: {
            require_pair(gate, topology);
            const auto t = gate.molecules[1];
            place({rotate(t, Rotation::hadamard()), {t}});
            place({interaction(gate.molecules[0], t), gate.molecules});
            place({rotate(t, Rotation::hadamard()), {t}});
            break;
        }
        case GateKind::Measure: {
            Action a;
            a.kind = ActionKind::ReadSingle;
            a.molecules = gate.molecules;
            a.ramp = planned_ramp(params, options);
            a.hold = options.measurement.read_duration;
            a.duration = 2.0 * a.ramp + a.hold;
            place({a, gate.molecules, true});
            break;
        }
        case GateKind::Bell: {
            require_pair(gate, topology);
            const auto i = gate.molecules[0];
            const auto j = gate.molecules[1];
            const auto sweep_wave = measurement_sweep(params, options.measurement);
            const double ramp = sweep_wave.breakpoints()[1].time;
            Action read;
            read.kind = ActionKind::ReadPair;
            read.molecules = {i, j};
            read.ramp = ramp;
            read.hold = options.measurement.read_duration;
            read.duration = sweep_wave.duration();
            place({read, gate.molecules, true});

            const auto cond = std::make_pair(i, j);
            Action hi = rotate(i, Rotation::hadamard());
            hi.condition = cond;
            Action hj = rotate(j, Rotation::hadamard());
            hj.condition = cond;
            place({hi, gate.molecules});
            place({hj, gate.molecules});
            Action again = read;
            again.round = 2;
            again.condition = cond;
            place({again, gate.molecules, true});
            break;
        }
        }
    }
    return program;
}

} // namespace ddmol

#include "ddmol/schedule.hpp"

#include <map>

#include "ddmol/errors.hpp"
#include "ddmol/phase.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

ExecutionResult execute(const ScheduleProgram& program, const LayoutGeometry& g,
                        const MoleculeParams& params, EncodedRegisterState state, RngStream& rng,
                        const MeasurementSettings& settings) {
    const Topology& topology = g.topology;
    if (state.molecules() != topology.size()) {
        throw PhysicsError("execute: register size does not match the topology");
    }
    ExecutionResult result{std::move(state), {}};
    auto& reg = result.final_state;
    std::map<std::pair<std::size_t, std::size_t>, bool> round1_mid;

    for (std::size_t s = 0; s < program.steps.size(); ++s) {
        for (const auto& a : program.steps[s].actions) {
            if (a.condition) {
                auto it = round1_mid.find(*a.condition);
                if (it == round1_mid.end() || !it->second) continue;
            }
            switch (a.kind) {
            case ActionKind::Idle: break;
            case ActionKind::Init:
                for (auto m : a.molecules) {
                    // load |S'> and sweep back: project, then rotate T -> S
                    const auto r = qpc_read_single(reg, topology, m, rng, settings.currents);
                    reg = r.post_state;
                    if (r.outcome == SpinOutcome::T) apply_rotation(reg, m, Rotation::euler_x(units::pi));
                }
                break;
            case ActionKind::Rotate:
                if (!a.rotation) throw PhysicsError("rotate action without a rotation");
                apply_rotation(reg, a.molecules.at(0), *a.rotation);
                break;
            case ActionKind::SweepPair: {
                const auto w = DetuningWaveform::trapezoid(params, a.ramp, a.hold);
                ising_phase(reg, topology, a.molecules.at(0), a.molecules.at(1),
                            phase_from_waveform(w, w, g, params));
                break;
            }
            case ActionKind::ReadSingle: {
                const auto m = a.molecules.at(0);
                auto r = qpc_read_single(reg, topology, m, rng, settings.currents);
                reg = std::move(r.post_state);
                result.measurements.push_back(
                    {s, a.kind, a.molecules, r.outcome == SpinOutcome::S ? "S" : "T", 1, 0.0});
                break;
            }
            case ActionKind::ReadPair: {
                const auto i = a.molecules.at(0);
                const auto j = a.molecules.at(1);
                const auto w = DetuningWaveform::trapezoid(params, a.ramp, a.hold);
                const double phi = phase_from_waveform(w, w, g, params);
                reg.set_charge(i, ChargeSector::Shifted);
                reg.set_charge(j, ChargeSector::Shifted);
                ising_phase(reg, topology, i, j, phi);
                auto r = qpc_read_pair(reg, topology, i, j, rng, phi, settings.currents);
                reg = std::move(r.post_state);
                reg.set_charge(i, ChargeSector::Balanced);
                reg.set_charge(j, ChargeSector::Balanced);
                if (a.round == 1) round1_mid[{i, j}] = r.level == CurrentLevel::Mid;
                result.measurements.push_back({s, a.kind, a.molecules, to_string(r.level), a.round, phi});
                break;
            }
            }
        }
    }
    return result;
}

} // namespace ddmol

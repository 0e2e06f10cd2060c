#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "ddmol/circuit.hpp"
#include "ddmol/errors.hpp"
#include "ddmol/phase.hpp"
#include "ddmol/schedule.hpp"
#include "ddmol/serialization.hpp"
#include "ddmol/units.hpp"
#include "support/helpers.hpp"

using namespace ddmol;
using Catch::Approx;

namespace {

LayoutGeometry geometry(Topology t) {
    LayoutGeometry g;
    g.topology = t;
    return g;
}

std::size_t colors(const std::vector<std::size_t>& c) { return *std::max_element(c.begin(), c.end()) + 1; }

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
    return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.rule == rule; });
}

Action act(ActionKind k, std::vector<std::size_t> m, double d = 1.0) {
    Action a;
    a.kind = k;
    a.molecules = std::move(m);
    a.duration = d;
    a.ramp = 0.75;
    return a;
}

ScheduleProgram one_step(std::vector<Action> actions) {
    ScheduleProgram p;
    Step s;
    for (auto& a : actions) s.duration = std::max(s.duration, a.duration);
    s.actions = std::move(actions);
    p.steps.push_back(std::move(s));
    return p;
}

std::vector<Gate> random_circuit(std::mt19937_64& gen, const Topology& t, int count) {
    std::vector<Gate> c;
    const std::size_t n = t.size();
    while (static_cast<int>(c.size()) < count) {
        const std::size_t i = gen() % n;
        switch (gen() % 5) {
        case 0: c.push_back(Gate::h(i)); break;
        case 1: c.push_back(Gate::z(i, 0.3)); break;
        case 2: c.push_back(Gate::xz(i, 0.7, 1.1)); break;
        default: {
            const auto nb = t.neighbors(i);
            if (nb.empty()) break;
            const auto j = nb[gen() % nb.size()];
            c.push_back(gen() % 2 ? Gate::cnot(i, j) : Gate::cz(i, j));
        }
        }
    }
    return c;
}

} // namespace

TEST_CASE("initialisation colouring") {
    CHECK(colors(greedy_coloring(Topology::line(7))) == 2);
    CHECK(colors(greedy_coloring(Topology::grid(4, 5, true))) == 4);
    CHECK(colors(greedy_coloring(Topology::grid(4, 5, false))) == 2);
    CHECK(colors(greedy_coloring(Topology::line(1))) == 1);

    for (auto t : {Topology::line(6), Topology::grid(3, 3, true), Topology::grid(3, 4, false)}) {
        const auto c = greedy_coloring(t);
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (auto j : t.neighbors(i)) REQUIRE(c[i] != c[j]);
        }
        const auto p = init_schedule(t, 0.66);
        CHECK(p.steps.size() == colors(c));
        CHECK(validate(p, t).empty());
    }
}

TEST_CASE("grid adjacency") {
    const auto g = Topology::grid(3, 3, true);
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.neighbors(4).size() == 8);
    CHECK_FALSE(Topology::grid(3, 3, false).adjacent(0, 4));
}

TEST_CASE("validator flags injected faults") {
    const auto t = Topology::line(4);
    CHECK(has_rule(validate(one_step({act(ActionKind::ReadSingle, {0}), act(ActionKind::ReadSingle, {1})}), t),
                   "adjacent-read"));
    CHECK(has_rule(validate(one_step({act(ActionKind::Init, {1, 2})}), t), "adjacent-init"));
    CHECK(has_rule(validate(one_step({act(ActionKind::SweepPair, {0, 1}), act(ActionKind::SweepPair, {2, 3})}), t),
                   "unintended-02-adjacency"));
    CHECK(has_rule(validate(one_step({act(ActionKind::SweepPair, {0, 2})}), t), "non-adjacent-pair"));
    CHECK(has_rule(validate(one_step({act(ActionKind::Rotate, {0}), act(ActionKind::ReadSingle, {0})}), t),
                   "duplicate-molecule"));
    CHECK(has_rule(validate(one_step({act(ActionKind::Rotate, {9})}), t), "index-out-of-range"));

    // the legal counterparts
    CHECK(validate(one_step({act(ActionKind::SweepPair, {0, 1})}), t).empty());
    CHECK(validate(one_step({act(ActionKind::Init, {0, 2}), act(ActionKind::Rotate, {1})}), t).empty());
    CHECK(validate(one_step({act(ActionKind::ReadSingle, {0}), act(ActionKind::ReadSingle, {3})}), t).empty());
}

TEST_CASE("compiled programs validate cleanly") {
    std::mt19937_64 gen(17);
    for (auto t : {Topology::line(2), Topology::line(5), Topology::grid(2, 3, true), Topology::grid(3, 3, false)}) {
        const auto g = geometry(t);
        for (int k = 0; k < 10; ++k) {
            auto c = random_circuit(gen, t, 12);
            c.push_back(Gate::measure(gen() % t.size()));
            CompileOptions opts;
            opts.include_init = k % 2 == 0;
            const auto p = compile(c, g, MoleculeParams{}, opts);
            REQUIRE(validate(p, t).empty());
            REQUIRE(std::abs(p.total_duration() - p.step_boundaries().back()) < 1e-12);
        }
    }
}

TEST_CASE("independent gates share a step, neighbours do not") {
    const auto g = geometry(Topology::line(6));
    const MoleculeParams p;
    const auto far = compile({Gate::cz(0, 1), Gate::cz(3, 4)}, g, p);
    CHECK(far.steps.size() == 1);
    const auto near = compile({Gate::cz(0, 1), Gate::cz(2, 3)}, g, p);
    CHECK(near.steps.size() == 2);
    const auto chain = compile({Gate::cz(0, 1), Gate::cz(1, 2)}, g, p);
    CHECK(chain.steps.size() == 2);
}

TEST_CASE("reads take their own step") {
    const auto g = geometry(Topology::line(6));
    const auto prog = compile({Gate::h(0), Gate::measure(3), Gate::h(5)}, g, MoleculeParams{});
    for (const auto& s : prog.steps) {
        const bool read = std::any_of(s.actions.begin(), s.actions.end(),
                                      [](const auto& a) { return a.kind == ActionKind::ReadSingle; });
        if (read) CHECK(s.actions.size() == 1);
    }
}

TEST_CASE("compile rejects non-adjacent pairs") {
    const auto g = geometry(Topology::line(4));
    try {
        compile(parse_circuit("CNOT 0 5"), g, MoleculeParams{});
        FAIL("expected an error");
    } catch (const PhysicsError& e) {
        CHECK(std::string(e.what()).find("non-adjacent pair") != std::string::npos);
    }
    CHECK_THROWS_AS(compile({Gate::cz(0, 2)}, g, MoleculeParams{}), PhysicsError);
    CHECK(compile({}, g, MoleculeParams{}).empty());
}

TEST_CASE("ramp override must lie in the sweep window") {
    const auto g = geometry(Topology::line(2));
    CompileOptions o;
    o.ramp = 0.1;
    CHECK_THROWS_AS(compile({Gate::cz(0, 1)}, g, MoleculeParams{}, o), PhysicsError);
    o.ramp = 0.7;
    const auto p = compile({Gate::cz(0, 1)}, g, MoleculeParams{}, o);
    CHECK(p.steps[0].actions[0].ramp == 0.7);
}

TEST_CASE("execution matches the direct register calculation") {
    std::mt19937_64 gen(23);
    const auto t = Topology::line(4);
    const auto g = geometry(t);
    const MoleculeParams params;
    for (int k = 0; k < 5; ++k) {
        const auto c = random_circuit(gen, t, 15);
        const auto prog = compile(c, g, params);
        RngStream rng(0);
        const auto got = execute(prog, g, params, EncodedRegisterState(4), rng);

        EncodedRegisterState want(4);
        for (const auto& gate : c) {
            const auto m = gate.molecules[0];
            switch (gate.kind) {
            case GateKind::H: apply_rotation(want, m, Rotation::hadamard()); break;
            case GateKind::Z: apply_rotation(want, m, Rotation::z(gate.angle)); break;
            case GateKind::XZ: apply_rotation(want, m, Rotation::xz(gate.axis_angle, gate.angle)); break;
            case GateKind::CNOT: cnot(want, t, m, gate.molecules[1]); break;
            case GateKind::CZ: ising_phase(want, t, m, gate.molecules[1], units::pi); break;
            default: break;
            }
        }
        REQUIRE(distance_up_to_phase(got.final_state.amplitudes(), want.amplitudes()) < 1e-9);
    }
}

TEST_CASE("init leaves molecules in S") {
    const auto t = Topology::line(3);
    const auto g = geometry(t);
    CompileOptions o;
    o.include_init = true;
    const auto prog = compile({}, g, MoleculeParams{}, o);
    CHECK(prog.steps.size() == 2);
    RngStream rng(4);
    const auto r = execute(prog, g, MoleculeParams{}, EncodedRegisterState(3), rng);
    CHECK(std::norm(r.final_state[7]) == Approx(1.0));
}

TEST_CASE("time budget") {
    const auto g = geometry(Topology::line(2));
    const MoleculeParams p;
    const auto cz = compile({Gate::cz(0, 1)}, g, p);
    const auto ok = time_budget(cz, 2, p, false);
    CHECK(ok.ok());
    CHECK(ok.elapsed[0] < p.coherence_time);

    const auto bell = compile({Gate::bell(0, 1)}, g, p);
    const auto warn = time_budget(bell, 2, p, true);
    CHECK_FALSE(warn.ok());
    CHECK(has_rule(warn.violations, "read-budget"));
    CHECK(warn.violations.back().message.find(one_read_per_window_message) != std::string::npos);

    const auto many = compile({Gate::cz(0, 1), Gate::cz(0, 1), Gate::cz(0, 1), Gate::cz(0, 1), Gate::cz(0, 1),
                               Gate::cz(0, 1)},
                              g, p);
    CHECK(has_rule(time_budget(many, 2, p, false).violations, "coherence-exceeded"));
    CHECK(time_budget(many, 2, p, true).ok());
}

TEST_CASE("bell program structure") {
    const auto g = geometry(Topology::line(2));
    const auto prog = compile({Gate::bell(0, 1)}, g, MoleculeParams{});
    REQUIRE(prog.steps.size() == 4);
    CHECK(prog.steps[0].actions[0].kind == ActionKind::ReadPair);
    CHECK_FALSE(prog.steps[0].actions[0].condition);
    CHECK(prog.steps[3].actions[0].round == 2);
    CHECK(prog.steps[3].actions[0].condition);

    for (auto label : {BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus}) {
        RngStream rng(3);
        const auto r = execute(prog, g, MoleculeParams{}, bell_state(label), rng);
        const bool psi = label != BellLabel::PhiPlus;
        CHECK(r.measurements.size() == (psi ? 2u : 1u));
        if (label == BellLabel::PsiMinus) CHECK(r.measurements.back().outcome == "I_mid");
        if (label == BellLabel::PsiPlus) CHECK(r.measurements.back().outcome != "I_mid");
    }
}

TEST_CASE("schedule JSON round trip") {
    std::mt19937_64 gen(31);
    const auto t = Topology::grid(2, 2, true);
    const auto g = geometry(t);
    const MoleculeParams p;
    auto c = random_circuit(gen, t, 20);
    c.push_back(Gate::bell(0, 1));
    CompileOptions o;
    o.include_init = true;
    const auto prog = compile(c, g, p, o);
    const auto text = to_json(prog).dump();
    const auto back = program_from_json(Json::parse(text));
    CHECK(validate(back, t).empty());
    CHECK(to_json(back).dump() == text);

    RngStream r1(8), r2(8);
    const auto a = execute(prog, g, p, EncodedRegisterState(4), r1);
    const auto b = execute(back, g, p, EncodedRegisterState(4), r2);
    for (std::size_t k = 0; k < 16; ++k) REQUIRE(std::abs(a.final_state[k] - b.final_state[k]) < 1e-10);
    CHECK(a.measurements.size() == b.measurements.size());
}

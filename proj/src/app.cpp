#include "ddmol/app.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ddmol/circuit.hpp"
#include "ddmol/electrostatics.hpp"
#include "ddmol/errors.hpp"
#include "ddmol/phase.hpp"
#include "ddmol/units.hpp"

namespace ddmol {

std::string to_string(Scenario s) {
    switch (s) {
    case Scenario::Simulate: return "simulate";
    case Scenario::Compile: return "compile";
    case Scenario::Bell: return "bell";
    case Scenario::Sweep: return "sweep";
    }
    return "compile";
}

namespace {

Scenario scenario_from_string(const std::string& s) {
    for (auto k : {Scenario::Simulate, Scenario::Compile, Scenario::Bell, Scenario::Sweep}) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown scenario '" + s + "' (simulate, compile, bell, sweep)");
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw ConfigError("unknown output format '" + s + "' (json or csv)");
}

template <class T>
T get(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("config field '") + key + "': " + e.what());
    }
}

std::string number(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string error_record(const char* kind, const std::string& message, std::optional<std::size_t> line = {}) {
    Json j = {{"error", kind}, {"message", message}};
    if (line) j["line"] = *line;
    return j.dump() + "\n";
}

std::string warning_record(const std::string& kind, const Json& detail) {
    Json j = {{"warning", kind}};
    for (auto it = detail.begin(); it != detail.end(); ++it) j[it.key()] = it.value();
    return j.dump() + "\n";
}

std::vector<Gate> load_circuit(const RunConfig& c) {
    if (c.circuit_text) return parse_circuit(*c.circuit_text);
    if (c.circuit_path) return parse_circuit_file(*c.circuit_path);
    throw ConfigError(to_string(c.scenario) + " scenario needs 'circuit' or 'circuit_text'");
}

EncodedRegisterState initial_state(const RunConfig& c) {
    const std::size_t n = c.geometry.topology.size();
    if (!c.initial_state) return EncodedRegisterState(n);
    const Json& j = *c.initial_state;
    EncodedRegisterState s(1);
    if (j.is_string()) {
        std::vector<Logical> labels;
        for (char ch : j.get<std::string>()) {
            if (ch == 'T' || ch == '0') labels.push_back(Logical::T);
            else if (ch == 'S' || ch == '1') labels.push_back(Logical::S);
            else throw ConfigError("initial_state labels must be T/S or 0/1");
        }
        s = EncodedRegisterState::product(labels);
    } else {
        s = state_from_json(j);
    }
    if (s.molecules() != n) throw ConfigError("initial_state size does not match the topology");
    return s;
}

// Budget warnings go to stderr; true when any were found.
bool report_budget(const BudgetReport& b, std::string& err) {
    for (const auto& v : b.violations) err += warning_record("budget", to_json(v));
    return !b.ok();
}

ScheduleProgram without_conditional(const ScheduleProgram& p) {
    ScheduleProgram out;
    for (const auto& s : p.steps) {
        Step kept{0.0, {}};
        for (const auto& a : s.actions) {
            if (a.condition) continue;
            kept.actions.push_back(a);
            kept.duration = std::max(kept.duration, a.duration);
        }
        if (!kept.actions.empty()) out.steps.push_back(std::move(kept));
    }
    return out;
}

int run_compile(const RunConfig& c, RunOutput& o) {
    const auto program = compile(load_circuit(c), c.geometry, c.params, c.compile);
    const auto violations = validate(program, c.geometry.topology);
    if (!violations.empty()) {
        for (const auto& v : violations) o.err += error_record("physics", v.message);
        return ExitPhysics;
    }
    if (c.format == OutputFormat::Json) {
        o.out = to_json(program).dump() + "\n";
    } else {
        o.out = "step,start_ns,duration_ns,kind,molecules\n";
        const auto t = program.step_boundaries();
        for (std::size_t s = 0; s < program.steps.size(); ++s) {
            for (const auto& a : program.steps[s].actions) {
                std::string mols;
                for (std::size_t k = 0; k < a.molecules.size(); ++k) {
                    mols += (k ? " " : "") + std::to_string(a.molecules[k]);
                }
                o.out += std::to_string(s) + "," + number(t[s]) + "," + number(a.duration) + "," +
                         to_string(a.kind) + "," + mols + "\n";
            }
        }
    }
    const auto budget = time_budget(program, c.geometry.topology.size(), c.params, c.echo);
    return report_budget(budget, o.err) ? ExitBudget : ExitOk;
}

int run_simulate(const RunConfig& c, RunOutput& o) {
    const auto program = compile(load_circuit(c), c.geometry, c.params, c.compile);
    auto rng = RngStream::derive(c.seed, "simulate", 0);
    const auto result = execute(program, c.geometry, c.params, initial_state(c), rng, c.compile.measurement);
    if (c.format == OutputFormat::Json) {
        Json m = Json::array();
        for (const auto& r : result.measurements) m.push_back(to_json(r));
        Json doc = {{"scenario", "simulate"},
                    {"seed", c.seed},
                    {"duration_ns", program.total_duration()},
                    {"measurements", std::move(m)},
                    {"final_state", to_json(result.final_state)}};
        o.out = doc.dump() + "\n";
    } else {
        o.out = "step,kind,molecules,round,outcome\n";
        for (const auto& r : result.measurements) {
            std::string mols;
            for (std::size_t k = 0; k < r.molecules.size(); ++k) {
                mols += (k ? " " : "") + std::to_string(r.molecules[k]);
            }
            o.out += std::to_string(r.step) + "," + to_string(r.kind) + "," + mols + "," +
                     std::to_string(r.round) + "," + r.outcome + "\n";
        }
    }
    const auto budget = time_budget(program, c.geometry.topology.size(), c.params, c.echo);
    return report_budget(budget, o.err) ? ExitBudget : ExitOk;
}

int run_bell(const RunConfig& c, RunOutput& o) {
    if (c.trials < 1) throw ConfigError("trials must be at least 1");
    if (c.geometry.topology.size() != 2) throw ConfigError("bell scenario needs a two-molecule topology");
    const auto input = bell_state(c.bell_input);
    const std::string label = to_string(c.bell_input);

    std::vector<std::string> lines(c.trials);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> reached_round2{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto worker = [&] {
        for (std::size_t t = next++; t < c.trials; t = next++) {
            try {
                auto rng = RngStream::derive(c.seed, "bell", t);
                const auto r = bell_measure(input, c.geometry.topology, 0, 1, c.geometry, c.params, rng,
                                            c.compile.measurement);
                if (r.round2) reached_round2 = true;
                const std::string r2 = r.round2 ? to_string(r.round2->level) : "";
                if (c.format == OutputFormat::Json) {
                    Json j = {{"trial", t},
                              {"input", label},
                              {"seed", rng.seed()},
                              {"round1", to_string(r.round1.level)},
                              {"round2", r.round2 ? Json(r2) : Json(nullptr)},
                              {"classification", to_string(r.classification)},
                              {"phi", r.round1.accumulated_phase}};
                    lines[t] = j.dump() + "\n";
                } else {
                    lines[t] = std::to_string(t) + "," + label + "," + to_string(r.round1.level) + "," + r2 +
                               "," + to_string(r.classification) + "\n";
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = c.trials;
            }
        }
    };

    unsigned n_threads = c.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.threads;
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, c.trials));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n_threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    if (c.format == OutputFormat::Csv) o.out = "trial,input,round1,round2,classification\n";
    for (auto& l : lines) o.out += l;

    // Budget of the path actually taken; round 2 only counts if some trial needed it.
    auto program = compile({Gate::bell(0, 1)}, c.geometry, c.params, c.compile);
    if (!reached_round2) program = without_conditional(program);
    const auto budget = time_budget(program, 2, c.params, c.echo);
    return report_budget(budget, o.err) ? ExitBudget : ExitOk;
}

using Observable = std::function<double(const LayoutGeometry&, const MoleculeParams&, double eps)>;

const std::map<std::string, Observable>& observables() {
    static const std::map<std::string, Observable> table = {
        {"theta", [](const auto&, const auto& p, double e) { return adiabatic_angle(e, p.tunnel_coupling); }},
        {"sin2theta", [](const auto&, const auto& p, double e) { return singlet_02_weight(e, p.tunnel_coupling); }},
        {"h_cc", [](const auto& g, const auto& p, double e) { return singlet_02_weight(e, p.tunnel_coupling) * h_cc_max(g); }},
        {"ising_energy", [](const auto& g, const auto& p, double e) { return ising_energy(e, g, p); }},
        {"energy_ground", [](const auto&, const auto& p, double e) { return charge_branch_energies(e, p.tunnel_coupling)[0]; }},
        {"energy_excited", [](const auto&, const auto& p, double e) { return charge_branch_energies(e, p.tunnel_coupling)[1]; }},
        {"h_int0", [](const auto& g, const auto&, double) { return background_interaction(g); }},
        {"h_ss", [](const auto& g, const auto&, double) { return doubly_occupied_interaction(g); }},
        {"h_cc_max", [](const auto& g, const auto&, double) { return h_cc_max(g); }},
        {"gate_time", [](const auto& g, const auto&, double) { return units::pi * units::hbar / h_cc_max(g); }},
        {"nnn_ratio", [](const auto& g, const auto&, double) { return nnn_coupling_ratio(g); }},
        {"inline_E", [](const auto& g, const auto&, double) {
             auto q = g;
             q.layout = Layout::InLine;
             return inline_shifts(q).single;
         }},
        {"inline_E2", [](const auto& g, const auto&, double) {
             auto q = g;
             q.layout = Layout::InLine;
             return inline_shifts(q).both;
         }},
    };
    return table;
}

int run_sweep(const RunConfig& c, RunOutput& o) {
    const auto& s = c.sweep;
    if (!std::isfinite(s.start) || !std::isfinite(s.stop)) throw ConfigError("sweep range bounds must be finite");
    if (s.points < 1) throw ConfigError("sweep needs at least one point");
    if (s.observables.empty()) throw ConfigError("sweep needs at least one observable");
    for (const auto& name : s.observables) {
        if (!observables().count(name)) throw ConfigError("unknown observable '" + name + "'");
    }
    static const std::vector<std::string> parameters = {"epsilon", "a", "b", "epsilon_r", "tunnel_coupling"};
    if (std::find(parameters.begin(), parameters.end(), s.parameter) == parameters.end()) {
        throw ConfigError("unknown sweep parameter '" + s.parameter + "'");
    }

    if (c.format == OutputFormat::Csv) {
        o.out = s.parameter;
        for (const auto& name : s.observables) o.out += "," + name;
        o.out += "\n";
    }
    for (std::size_t k = 0; k < s.points; ++k) {
        const double x = s.points == 1 ? s.start
                                       : s.start + (s.stop - s.start) * static_cast<double>(k) /
                                                       static_cast<double>(s.points - 1);
        LayoutGeometry g = c.geometry;
        MoleculeParams p = c.params;
        double eps = s.detuning.value_or(p.hold_detuning());
        if (s.parameter == "epsilon") eps = x;
        else if (s.parameter == "a") g.intra_dot_distance = x;
        else if (s.parameter == "b") g.inter_molecule_distance = x;
        else if (s.parameter == "epsilon_r") g.relative_permittivity = x;
        else p.tunnel_coupling = x;
        g.validate();
        p.validate();

        if (c.format == OutputFormat::Csv) {
            o.out += number(x);
            for (const auto& name : s.observables) o.out += "," + number(observables().at(name)(g, p, eps));
            o.out += "\n";
        } else {
            Json j = {{s.parameter, x}};
            for (const auto& name : s.observables) j[name] = observables().at(name)(g, p, eps);
            o.out += j.dump() + "\n";
        }
    }
    return ExitOk;
}

} // namespace

RunConfig config_from_json(const Json& j, const std::string& base_dir) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    static const std::vector<std::string> known = {"geometry", "params", "scenario", "seed", "output", "echo",
                                                   "threads", "include_init", "compile"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
            throw ConfigError("unknown config key '" + it.key() + "'");
        }
    }
    RunConfig c;
    if (j.contains("geometry")) c.geometry = geometry_from_json(j.at("geometry"));
    if (j.contains("params")) c.params = params_from_json(j.at("params"));
    c.seed = get<std::uint64_t>(j, "seed", 0);
    c.format = format_from_string(get<std::string>(j, "output", "json"));
    c.echo = get(j, "echo", false);
    c.threads = get(j, "threads", 1u);
    c.compile.include_init = get(j, "include_init", false);

    if (j.contains("compile")) {
        const auto& jc = j.at("compile");
        if (!jc.is_object()) throw ConfigError("'compile' must be an object");
        c.compile.safety_factor = get(jc, "safety_factor", c.compile.safety_factor);
        c.compile.measurement.safety_factor = c.compile.safety_factor;
        if (jc.contains("ramp_ns")) c.compile.ramp = get(jc, "ramp_ns", 0.0);
        c.compile.extra_periods = get(jc, "extra_periods", 0);
        c.compile.measurement.read_duration = get(jc, "read_ns", c.compile.measurement.read_duration);
        c.compile.measurement.ramp = get(jc, "measurement_ramp_ns", c.compile.measurement.ramp);
    }

    if (!j.contains("scenario")) throw ConfigError("config needs a 'scenario'");
    const auto& js = j.at("scenario");
    if (js.is_string()) {
        c.scenario = scenario_from_string(js.get<std::string>());
    } else if (js.is_object()) {
        c.scenario = scenario_from_string(get<std::string>(js, "type", ""));
        if (js.contains("circuit")) {
            std::filesystem::path p = get<std::string>(js, "circuit", "");
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            c.circuit_path = p.string();
        }
        if (js.contains("circuit_text")) c.circuit_text = get<std::string>(js, "circuit_text", "");
        if (js.contains("initial_state")) c.initial_state = js.at("initial_state");
        if (js.contains("input")) c.bell_input = bell_label_from_string(get<std::string>(js, "input", ""));
        if (js.contains("trials")) {
            const auto t = get<long long>(js, "trials", 1);
            if (t < 1) throw ConfigError("trials must be at least 1");
            c.trials = static_cast<std::size_t>(t);
        }
        c.sweep.parameter = get(js, "parameter", c.sweep.parameter);
        c.sweep.start = get(js, "start", c.sweep.start);
        c.sweep.stop = get(js, "stop", c.sweep.stop);
        c.sweep.points = get(js, "points", c.sweep.points);
        if (js.contains("observable")) {
            const auto& ob = js.at("observable");
            c.sweep.observables = ob.is_array() ? ob.get<std::vector<std::string>>()
                                                : std::vector<std::string>{ob.get<std::string>()};
        }
        if (js.contains("detuning")) c.sweep.detuning = get(js, "detuning", 0.0);
    } else {
        throw ConfigError("'scenario' must be a name or an object");
    }
    if (c.circuit_path && !std::filesystem::exists(*c.circuit_path)) {
        throw ConfigError("circuit file not found: " + *c.circuit_path);
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("config ") + path + ": " + e.what());
    }
    auto dir = std::filesystem::path(path).parent_path();
    return config_from_json(j, dir.empty() ? "." : dir.string());
}

RunOutput run(const RunConfig& config) {
    RunOutput o;
    try {
        for (const auto& w : config.geometry.validate()) o.err += warning_record("geometry", {{"message", w}});
        config.params.validate();
        switch (config.scenario) {
        case Scenario::Compile: o.exit_code = run_compile(config, o); break;
        case Scenario::Simulate: o.exit_code = run_simulate(config, o); break;
        case Scenario::Bell: o.exit_code = run_bell(config, o); break;
        case Scenario::Sweep: o.exit_code = run_sweep(config, o); break;
        }
    } catch (const ParseError& e) {
        o.out.clear();
        o.err += error_record("config", e.what(), e.line());
        o.exit_code = ExitConfig;
    } catch (const ConfigError& e) {
        o.out.clear();
        o.err += error_record("config", e.what());
        o.exit_code = ExitConfig;
    } catch (const PhysicsError& e) {
        o.out.clear();
        o.err += error_record("physics", e.what());
        o.exit_code = ExitPhysics;
    }
    return o;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"double-dot molecule register simulator"};
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
    std::optional<std::string> format;
    bool echo = false;
    std::optional<unsigned> threads;
    app.add_option("--config", config_path, "JSON configuration")->required();
    app.add_option("--seed", seed, "root seed");
    app.add_option("--out", out_path, "write results here instead of stdout");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--echo", echo, "budget against the echo coherence time");
    app.add_option("--threads", threads, "worker threads for bell trials (0 = all cores)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << error_record("usage", e.what());
        return ExitConfig;
    }

    RunConfig config;
    try {
        config = load_config(config_path);
        if (seed) config.seed = *seed;
        if (format) config.format = format_from_string(*format);
        if (echo) config.echo = true;
        if (threads) config.threads = *threads;
    } catch (const ConfigError& e) {
        err << error_record("config", e.what());
        return ExitConfig;
    }

    const auto result = run(config);
    err << result.err;
    if (out_path) {
        std::ofstream f(*out_path, std::ios::binary);
        if (!f) {
            err << error_record("config", "cannot write " + *out_path);
            return ExitConfig;
        }
        f << result.out;
    } else {
        out << result.out;
    }
    return result.exit_code;
}

} // namespace ddmol

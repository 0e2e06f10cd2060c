#include "ddmol/serialization.hpp"

#include "ddmol/errors.hpp"

namespace ddmol {

namespace {

std::string rotation_kind_name(Rotation::Kind k) {
    switch (k) {
    case Rotation::Kind::Z: return "z";
    case Rotation::Kind::XZ: return "xz";
    case Rotation::Kind::Hadamard: return "hadamard";
    case Rotation::Kind::EulerX: return "euler_x";
    }
    return "hadamard";
}

Rotation::Kind rotation_kind_from(const std::string& s) {
    if (s == "z") return Rotation::Kind::Z;
    if (s == "xz") return Rotation::Kind::XZ;
    if (s == "hadamard") return Rotation::Kind::Hadamard;
    if (s == "euler_x") return Rotation::Kind::EulerX;
    throw ConfigError("unknown rotation type '" + s + "'");
}

template <class T>
T field(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("field '") + key + "': " + e.what());
    }
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const char* where) {
    if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (auto k : keys) known = known || it.key() == k;
        if (!known) throw ConfigError(std::string("unknown key '") + it.key() + "' in " + where);
    }
}

} // namespace

Json to_json(const Rotation& r) {
    return {{"type", rotation_kind_name(r.kind)},
            {"angle", r.angle},
            {"axis_angle", r.axis_angle},
            {"duration_ns", r.duration}};
}

Rotation rotation_from_json(const Json& j) {
    Rotation r;
    r.kind = rotation_kind_from(field<std::string>(j, "type", "hadamard"));
    r.angle = field(j, "angle", 0.0);
    r.axis_angle = field(j, "axis_angle", 0.0);
    r.duration = field(j, "duration_ns", 0.0);
    return r;
}

Json to_json(const ScheduleProgram& program) {
    Json steps = Json::array();
    for (const auto& s : program.steps) {
        Json actions = Json::array();
        for (const auto& a : s.actions) {
            Json ja = {{"kind", to_string(a.kind)},
                       {"molecules", a.molecules},
                       {"duration_ns", a.duration},
                       {"ramp_ns", a.ramp},
                       {"hold_ns", a.hold},
                       {"phase_multiple", a.phase_multiple},
                       {"round", a.round}};
            if (a.rotation) ja["rotation"] = to_json(*a.rotation);
            if (a.condition) ja["condition"] = {a.condition->first, a.condition->second};
            actions.push_back(std::move(ja));
        }
        steps.push_back({{"duration_ns", s.duration}, {"actions", std::move(actions)}});
    }
    return {{"steps", std::move(steps)}};
}

ScheduleProgram program_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array()) {
        throw ConfigError("schedule JSON needs a 'steps' array");
    }
    ScheduleProgram p;
    for (const auto& js : j.at("steps")) {
        Step s;
        s.duration = field(js, "duration_ns", 0.0);
        if (js.contains("actions")) {
            for (const auto& ja : js.at("actions")) {
                Action a;
                a.kind = action_kind_from_string(field<std::string>(ja, "kind", ""));
                a.molecules = field(ja, "molecules", std::vector<std::size_t>{});
                a.duration = field(ja, "duration_ns", 0.0);
                a.ramp = field(ja, "ramp_ns", 0.0);
                a.hold = field(ja, "hold_ns", 0.0);
                a.phase_multiple = field(ja, "phase_multiple", 1);
                a.round = field(ja, "round", 1);
                if (ja.contains("rotation")) a.rotation = rotation_from_json(ja.at("rotation"));
                if (ja.contains("condition")) {
                    auto c = ja.at("condition").get<std::vector<std::size_t>>();
                    if (c.size() != 2) throw ConfigError("condition must name two molecules");
                    a.condition = std::pair{c[0], c[1]};
                }
                s.actions.push_back(std::move(a));
            }
        }
        p.steps.push_back(std::move(s));
    }
    return p;
}

Json to_json(const EncodedRegisterState& state) {
    Json out = Json::array();
    for (const auto& c : state.amplitudes()) out.push_back({c.real(), c.imag()});
    return out;
}

EncodedRegisterState state_from_json(const Json& j) {
    if (!j.is_array()) throw ConfigError("state must be an array of [re, im] pairs");
    std::vector<Complex> amps;
    for (const auto& e : j) {
        if (e.is_number()) {
            amps.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2) {
            amps.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw ConfigError("state entries must be numbers or [re, im] pairs");
        }
    }
    try {
        return EncodedRegisterState::from_amplitudes(amps);
    } catch (const PhysicsError& e) {
        throw ConfigError(e.what());
    }
}

Json to_json(const Violation& v) {
    return {{"step", v.step}, {"rule", v.rule}, {"molecules", v.molecules}, {"message", v.message}};
}

Json to_json(const MeasurementRecord& m) {
    return {{"step", m.step},    {"kind", to_string(m.kind)}, {"molecules", m.molecules},
            {"outcome", m.outcome}, {"round", m.round},       {"phase", m.phase}};
}

Json to_json(const LayoutGeometry& g) {
    Json topo;
    if (g.topology.kind() == Topology::Kind::Line) {
        topo = {{"kind", "line"}, {"n", g.topology.size()}};
    } else {
        topo = {{"kind", "grid"},
                {"rows", g.topology.rows()},
                {"cols", g.topology.cols()},
                {"diagonal", g.topology.diagonal()}};
    }
    return {{"a", g.intra_dot_distance},
            {"b", g.inter_molecule_distance},
            {"layout", to_string(g.layout)},
            {"topology", topo},
            {"epsilon_r", g.relative_permittivity},
            {"inline_gap_offset", g.inline_gap_offset}};
}

LayoutGeometry geometry_from_json(const Json& j) {
    reject_unknown(j, {"a", "b", "layout", "topology", "epsilon_r", "inline_gap_offset"}, "geometry");
    LayoutGeometry g;
    g.intra_dot_distance = field(j, "a", g.intra_dot_distance);
    g.inter_molecule_distance = field(j, "b", g.inter_molecule_distance);
    g.relative_permittivity = field(j, "epsilon_r", g.relative_permittivity);
    g.inline_gap_offset = field(j, "inline_gap_offset", g.inline_gap_offset);
    if (j.contains("layout")) {
        try {
            g.layout = layout_from_string(j.at("layout").get<std::string>());
        } catch (const Json::exception& e) {
            throw ConfigError(std::string("geometry.layout: ") + e.what());
        }
    }
    if (j.contains("topology")) {
        const auto& t = j.at("topology");
        reject_unknown(t, {"kind", "n", "rows", "cols", "diagonal"}, "geometry.topology");
        const auto kind = field<std::string>(t, "kind", "line");
        if (kind == "line") {
            const auto n = field<std::size_t>(t, "n", 2);
            if (n < 1) throw ConfigError("topology.n must be at least 1");
            g.topology = Topology::line(n);
        } else if (kind == "grid") {
            const auto rows = field<std::size_t>(t, "rows", 2);
            const auto cols = field<std::size_t>(t, "cols", 2);
            if (rows < 1 || cols < 1) throw ConfigError("grid rows and cols must be at least 1");
            g.topology = Topology::grid(rows, cols, field(t, "diagonal", true));
        } else {
            throw ConfigError("unknown topology kind '" + kind + "'");
        }
    }
    return g;
}

Json to_json(const MoleculeParams& p) {
    return {{"tunnel_coupling", p.tunnel_coupling},       {"charging_energy", p.charging_energy},
            {"g_factor", p.g_factor},                     {"nuclear_field", p.nuclear_field},
            {"coherence_time", p.coherence_time},         {"echo_coherence_time", p.echo_coherence_time}};
}

MoleculeParams params_from_json(const Json& j) {
    reject_unknown(j,
                   {"tunnel_coupling", "charging_energy", "g_factor", "nuclear_field", "coherence_time",
                    "echo_coherence_time"},
                   "params");
    MoleculeParams p;
    p.tunnel_coupling = field(j, "tunnel_coupling", p.tunnel_coupling);
    p.charging_energy = field(j, "charging_energy", p.charging_energy);
    p.g_factor = field(j, "g_factor", p.g_factor);
    p.nuclear_field = field(j, "nuclear_field", p.nuclear_field);
    p.coherence_time = field(j, "coherence_time", p.coherence_time);
    p.echo_coherence_time = field(j, "echo_coherence_time", p.echo_coherence_time);
    return p;
}

} // namespace ddmol

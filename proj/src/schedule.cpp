#include "ddmol/schedule.hpp"

#include "ddmol/errors.hpp"

namespace ddmol {

std::string to_string(ActionKind kind) {
    switch (kind) {
    case ActionKind::Init: return "init";
    case ActionKind::SweepPair: return "sweep_pair";
    case ActionKind::Rotate: return "rotate";
    case ActionKind::ReadSingle: return "read_single";
    case ActionKind::ReadPair: return "read_pair";
    case ActionKind::Idle: return "idle";
    }
    return "?";
}

ActionKind action_kind_from_string(const std::string& s) {
    for (auto k : {ActionKind::Init, ActionKind::SweepPair, ActionKind::Rotate, ActionKind::ReadSingle,
                   ActionKind::ReadPair, ActionKind::Idle}) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown action kind '" + s + "'");
}

bool Action::occupies_02() const {
    switch (kind) {
    case ActionKind::Init:
    case ActionKind::SweepPair:
    case ActionKind::ReadSingle:
    case ActionKind::ReadPair: return true;
    case ActionKind::Rotate:
    case ActionKind::Idle: return false;
    }
    return false;
}

double ScheduleProgram::total_duration() const {
    double t = 0.0;
    for (const auto& s : steps) t += s.duration;
    return t;
}

std::vector<double> ScheduleProgram::step_boundaries() const {
    std::vector<double> b{0.0};
    for (const auto& s : steps) b.push_back(b.back() + s.duration);
    return b;
}

} // namespace ddmol

#include "ddmol/schedule.hpp"

#include <map>
#include <sstream>

namespace ddmol {

namespace {

std::string pair_text(std::size_t a, std::size_t b) {
    return std::to_string(a) + " and " + std::to_string(b);
}

} // namespace

std::vector<Violation> validate(const ScheduleProgram& program, const Topology& topology) {
    std::vector<Violation> out;
    for (std::size_t s = 0; s < program.steps.size(); ++s) {
        const auto& actions = program.steps[s].actions;

        // molecule -> (action index) for duplicates; (0,2) occupants separately
        std::map<std::size_t, std::size_t> owner;
        struct Occupant {
            std::size_t molecule;
            std::size_t action;
            ActionKind kind;
        };
        std::vector<Occupant> shifted;

        for (std::size_t a = 0; a < actions.size(); ++a) {
            const auto& act = actions[a];
            bool in_range = true;
            for (auto m : act.molecules) {
                if (!topology.contains(m)) {
                    out.push_back({s, "index-out-of-range", {m},
                                   "molecule " + std::to_string(m) + " is outside the topology"});
                    in_range = false;
                    continue;
                }
                if (auto [it, fresh] = owner.emplace(m, a); !fresh && it->second != a) {
                    out.push_back({s, "duplicate-molecule", {m},
                                   "molecule " + std::to_string(m) + " appears in two actions of one step"});
                }
            }
            if (!in_range) continue;
            const bool pair_action = act.kind == ActionKind::SweepPair || act.kind == ActionKind::ReadPair;
            if (pair_action) {
                if (act.molecules.size() != 2 || !topology.adjacent(act.molecules[0], act.molecules[1])) {
                    out.push_back({s, "non-adjacent-pair", act.molecules,
                                   to_string(act.kind) + " needs two adjacent molecules"});
                }
            }
            if (act.occupies_02()) {
                for (auto m : act.molecules) shifted.push_back({m, a, act.kind});
            }
        }

        for (std::size_t x = 0; x < shifted.size(); ++x) {
            for (std::size_t y = x + 1; y < shifted.size(); ++y) {
                const auto& p = shifted[x];
                const auto& q = shifted[y];
                if (!topology.adjacent(p.molecule, q.molecule)) continue;
                const bool same_action = p.action == q.action;
                if (same_action && (p.kind == ActionKind::SweepPair || p.kind == ActionKind::ReadPair)) continue;
                Violation v{s, "", {p.molecule, q.molecule}, ""};
                if (p.kind == ActionKind::ReadSingle && q.kind == ActionKind::ReadSingle) {
                    v.rule = "adjacent-read";
                    v.message = "single-molecule reads on neighbours " + pair_text(p.molecule, q.molecule);
                } else if (p.kind == ActionKind::Init && q.kind == ActionKind::Init) {
                    v.rule = "adjacent-init";
                    v.message = "neighbours " + pair_text(p.molecule, q.molecule) + " initialised together";
                } else {
                    v.rule = "unintended-02-adjacency";
                    v.message = "neighbours " + pair_text(p.molecule, q.molecule) +
                                " are both in (0,2) without forming one gate or read pair";
                }
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

} // namespace ddmol

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddmol/circuit.hpp"
#include "ddmol/geometry.hpp"
#include "ddmol/measurement.hpp"
#include "ddmol/physics.hpp"
#include "ddmol/register.hpp"

namespace ddmol {

enum class ActionKind { Init, SweepPair, Rotate, ReadSingle, ReadPair, Idle };

std::string to_string(ActionKind kind);
ActionKind action_kind_from_string(const std::string& s);

/// One hardware action inside a step.
///
/// SweepPair and ReadPair move both molecules to +Ec/2 with trapezoidal
/// ramps; ReadSingle and Init pass one or more molecules through (0,2).
/// A `condition` makes the action run only when the named pair's last
/// round-1 pair read returned I_mid (round 2 of the Bell protocol).
struct Action {
    ActionKind kind = ActionKind::Idle;
    std::vector<std::size_t> molecules;
    double duration = 0.0; // ns

    double ramp = 0.0; // SweepPair, ReadPair, Init
    double hold = 0.0; // SweepPair: time at +Ec/2; ReadPair: read time
    int phase_multiple = 1; // SweepPair: target phase = multiple * pi
    std::optional<Rotation> rotation;
    int round = 1; // ReadPair
    std::optional<std::pair<std::size_t, std::size_t>> condition;

    /// True when the action parks its molecules in (0,2) at some point.
    bool occupies_02() const;
};

struct Step {
    double duration = 0.0;
    std::vector<Action> actions;
};

struct ScheduleProgram {
    std::vector<Step> steps;

    bool empty() const { return steps.empty(); }
    double total_duration() const;
    /// Start time of every step, plus the end time as the last entry.
    std::vector<double> step_boundaries() const;
};

// --- compilation -----------------------------------------------------------

struct CompileOptions {
    double safety_factor = default_safety_factor;
    /// Ramp override; by default the geometric mean of the sweep window.
    std::optional<double> ramp;
    /// Extra 2 pi periods added to every interaction hold.
    int extra_periods = 0;
    /// Prepend the initialisation steps from `init_schedule`.
    bool include_init = false;
    MeasurementSettings measurement;
};

/// Timing of one two-qubit sweep: ramps, hold and the phase they produce.
struct SweepPlan {
    double ramp = 0.0;
    double hold = 0.0;
    int phase_multiple = 1;
    double ramp_phase = 0.0; // accumulated during the two ramps
    double total() const { return 2.0 * ramp + hold; }
};

/// Ramp duration chosen for the given parameters and options.
double planned_ramp(const MoleculeParams& params, const CompileOptions& options);

/// Chooses the hold so that ramps plus hold accumulate an odd multiple of pi.
SweepPlan plan_interaction_sweep(const LayoutGeometry& g, const MoleculeParams& params,
                                 const CompileOptions& options = {});

/// Greedy colouring in index order; color[i] is the init step of molecule i.
std::vector<std::size_t> greedy_coloring(const Topology& topology);

/// One init step per colour class.
ScheduleProgram init_schedule(const Topology& topology, double ramp = 0.0);

/// Compiles a gate list into timed steps. Gates on disjoint, non-adjacent
/// molecules are packed into shared steps; reads take a step of their own.
/// Throws PhysicsError for gates on non-adjacent pairs (no routing).
ScheduleProgram compile(const std::vector<Gate>& circuit, const LayoutGeometry& g,
                        const MoleculeParams& params, const CompileOptions& options = {});

// --- validation ------------------------------------------------------------

struct Violation {
    std::size_t step = 0;
    std::string rule;
    std::vector<std::size_t> molecules;
    std::string message;
};

/// Every step breaking a program invariant. Never throws on content.
///
/// Rules: adjacent-read, adjacent-init, unintended-02-adjacency,
/// non-adjacent-pair, duplicate-molecule, index-out-of-range.
std::vector<Violation> validate(const ScheduleProgram& program, const Topology& topology);

// --- time budget -----------------------------------------------------------

struct BudgetReport {
    std::vector<double> elapsed;            // per molecule, ns
    std::vector<std::size_t> read_count;    // per molecule, since its last init
    double coherence_limit = 0.0;
    double total_duration = 0.0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

inline constexpr const char* one_read_per_window_message = "only one QPC read per coherence window";

/// Per-molecule time between its (last) init and its last action, against
/// T2 (echo off) or the echo coherence time. Conditional reads count.
BudgetReport time_budget(const ScheduleProgram& program, std::size_t molecule_count,
                         const MoleculeParams& params, bool echo);

// --- execution -------------------------------------------------------------

struct MeasurementRecord {
    std::size_t step = 0;
    ActionKind kind = ActionKind::ReadSingle;
    std::vector<std::size_t> molecules;
    std::string outcome; // "S"/"T" or a current level
    int round = 1;
    double phase = 0.0;
};

struct ExecutionResult {
    EncodedRegisterState final_state;
    std::vector<MeasurementRecord> measurements;
};

/// Runs a program on an encoded register. Init leaves a molecule in |S>.
ExecutionResult execute(const ScheduleProgram& program, const LayoutGeometry& g,
                        const MoleculeParams& params, EncodedRegisterState state, RngStream& rng,
                        const MeasurementSettings& settings = {});

} // namespace ddmol

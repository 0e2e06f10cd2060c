#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ddmol/geometry.hpp"
#include "ddmol/measurement.hpp"
#include "ddmol/physics.hpp"
#include "ddmol/schedule.hpp"
#include "ddmol/serialization.hpp"

namespace ddmol {

enum class Scenario { Simulate, Compile, Bell, Sweep };

std::string to_string(Scenario s);

enum class OutputFormat { Json, Csv };

struct SweepSpec {
    std::string parameter = "epsilon";
    double start = -2500.0;
    double stop = 2500.0;
    std::size_t points = 101;
    std::vector<std::string> observables{"h_cc"};
    /// Detuning used for detuning-dependent observables when sweeping
    /// something else; defaults to +Ec/2.
    std::optional<double> detuning;
};

struct RunConfig {
    LayoutGeometry geometry;
    MoleculeParams params;
    Scenario scenario = Scenario::Compile;

    // simulate / compile
    std::optional<std::string> circuit_path;
    std::optional<std::string> circuit_text;
    std::optional<Json> initial_state; // label string ("TS") or amplitude array

    // bell
    BellLabel bell_input = BellLabel::PhiPlus;
    std::size_t trials = 1;

    SweepSpec sweep;

    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;
    bool echo = false;
    unsigned threads = 1;
    CompileOptions compile;
};

/// Reads a config document. Relative circuit paths resolve against
/// `base_dir`. Throws ConfigError.
RunConfig config_from_json(const Json& j, const std::string& base_dir = ".");
RunConfig load_config(const std::string& path);

/// Exit status 0 ok, 1 config error, 2 physics precondition, 3 budget warnings.
enum ExitCode : int { ExitOk = 0, ExitConfig = 1, ExitPhysics = 2, ExitBudget = 3 };

struct RunOutput {
    int exit_code = ExitOk;
    std::string out; // results
    std::string err; // JSON error and warning records, one per line
};

/// Runs the scenario. Config and physics errors become exit codes.
RunOutput run(const RunConfig& config);

/// Command-line entry: --config PATH [--seed N] [--out PATH]
/// [--format json|csv] [--echo] [--threads N].
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ddmol

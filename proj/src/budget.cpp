#include "ddmol/schedule.hpp"

#include <sstream>

namespace ddmol {

BudgetReport time_budget(const ScheduleProgram& program, std::size_t molecule_count,
                         const MoleculeParams& params, bool echo) {
    BudgetReport report;
    report.coherence_limit = params.coherence_limit(echo);
    report.total_duration = program.total_duration();
    report.elapsed.assign(molecule_count, 0.0);
    report.read_count.assign(molecule_count, 0);

    std::vector<double> origin(molecule_count, 0.0);
    std::vector<double> last_end(molecule_count, 0.0);
    std::vector<bool> touched(molecule_count, false);
    std::vector<std::size_t> over_step(molecule_count, 0);
    std::vector<std::size_t> reads_step(molecule_count, 0);

    const auto bounds = program.step_boundaries();
    for (std::size_t s = 0; s < program.steps.size(); ++s) {
        const double start = bounds[s];
        for (const auto& a : program.steps[s].actions) {
            for (auto m : a.molecules) {
                if (m >= molecule_count) continue;
                if (a.kind == ActionKind::Init) {
                    origin[m] = start;
                    report.read_count[m] = 0;
                }
                touched[m] = true;
                last_end[m] = start + a.duration;
                const double elapsed = last_end[m] - origin[m];
                if (elapsed > report.elapsed[m]) {
                    report.elapsed[m] = elapsed;
                    if (elapsed > report.coherence_limit && over_step[m] == 0) over_step[m] = s + 1;
                }
                if (a.kind == ActionKind::ReadSingle || a.kind == ActionKind::ReadPair) {
                    if (++report.read_count[m] == 2) reads_step[m] = s + 1;
                }
            }
        }
    }

    for (std::size_t m = 0; m < molecule_count; ++m) {
        if (!touched[m]) continue;
        if (over_step[m] != 0) {
            std::ostringstream os;
            os << "molecule " << m << " needs " << report.elapsed[m] << " ns between init and its last action; coherence limit "
               << report.coherence_limit << " ns" << (echo ? " (echo)" : "");
            report.violations.push_back({over_step[m] - 1, "coherence-exceeded", {m}, os.str()});
        }
        if (reads_step[m] != 0) {
            std::ostringstream os;
            os << one_read_per_window_message << ": molecule " << m << " is read " << report.read_count[m]
               << " times";
            report.violations.push_back({reads_step[m] - 1, "read-budget", {m}, os.str()});
        }
    }
    return report;
}

} // namespace ddmol

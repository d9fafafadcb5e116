// Batch verification harness: parses a JSON suite description, runs each job
// (evaluations, transformations, limit schedules, identity and inequality
// sweeps, asymptotic probes), writes one CSV per job plus a summary file, and
// reports an overall verdict.
#ifndef EHG_HARNESS_HPP
#define EHG_HARNESS_HPP

#include <string>
#include <vector>

namespace ehg {

struct JobOutcome {
    std::string id;
    std::string kind;
    bool passed = false;
    int rows = 0;
    int failed_rows = 0;
    double seconds = 0;
    std::string detail; // one-line explanation of the verdict
};

struct SuiteOutcome {
    std::vector<JobOutcome> jobs;
    bool all_passed = true;
    bool config_ok = true;
    std::string config_error;
};

// Runs the suite described by the JSON text.  Writes <job id>.csv for every
// job and summary.txt under out_dir (created if missing).  parallelism > 0
// fixes the OpenMP thread count; only restricts the run to the listed job
// ids when nonempty.  The CSV contents depend only on the configuration and
// the working precision, not on the thread count.
SuiteOutcome run_suite(const std::string& config_json, const std::string& out_dir,
                       int parallelism, const std::vector<std::string>& only = {});

// 0: all jobs passed.  1: at least one job failed.  2: unusable config.
int suite_exit_code(const SuiteOutcome& s);

} // namespace ehg

#endif

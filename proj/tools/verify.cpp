#include "ehg/harness.hpp"
#include "ehg/real.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

int main(int argc, char** argv)
{
    CLI::App app{"Batch verification of the gamma-hierarchy integral catalog"};
    std::string config, out_dir;
    int precision_bits = 0, parallelism = 0;
    std::vector<std::string> only;
    app.add_option("--config", config, "JSON suite description")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out-dir", out_dir, "directory for per-job CSVs and summary.txt")
        ->required();
    app.add_option("--precision-bits", precision_bits,
                   "working significand bits (default 128; env PRECISION_BITS)");
    app.add_option("--parallelism", parallelism,
                   "OpenMP thread count (default: OpenMP's choice; env PARALLELISM)");
    app.add_option("--only", only, "comma-separated job ids to run")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    if (precision_bits <= 0)
        if (const char* e = std::getenv("PRECISION_BITS")) precision_bits = std::atoi(e);
    if (precision_bits <= 0) precision_bits = 128;
    if (parallelism <= 0)
        if (const char* e = std::getenv("PARALLELISM")) parallelism = std::atoi(e);

    ehg::set_working_precision_bits(unsigned(precision_bits));

    std::ifstream in(config);
    std::stringstream ss;
    ss << in.rdbuf();
    auto outcome = ehg::run_suite(ss.str(), out_dir, parallelism, only);
    if (!outcome.config_ok)
        std::fprintf(stderr, "config error: %s\n", outcome.config_error.c_str());
    return ehg::suite_exit_code(outcome);
}

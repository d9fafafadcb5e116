// Times the parallel block-summed grid evaluation against the serial
// reference accumulation on a representative integrand, and reports the
// agreement between the two routes.
#include "ehg/integrals.hpp"
#include "ehg/quad.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ehg;

namespace {

double time_one(const IntegrandInfo& info, int N, bool parallel, LogC& value)
{
    set_quad_parallel(parallel);
    auto t0 = std::chrono::steady_clock::now();
    value = torus_quad(info.f, info.dim, N, info.radius).value;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parallel vs. serial quadrature benchmark"};
    int n = 2, grid = 64, bits = 128, threads = 0;
    app.add_option("--n", n, "integral dimension (1..3)");
    app.add_option("--grid", grid, "points per dimension");
    app.add_option("--precision-bits", bits, "working significand bits");
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
    CLI11_PARSE(app, argc, argv);

    set_working_precision_bits(unsigned(bits));
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    auto spec = seed_spec(SpecKind::ELL_I, n, 0, 1);
    auto info = build_integrand(spec);
    double points = 1;
    for (int i = 0; i < info.dim; ++i) points *= grid;

    LogC serial_val, parallel_val;
    // Warm both caches so the comparison times the summation, not the first
    // gamma evaluations.
    time_one(info, grid, true, parallel_val);

    double ts = time_one(info, grid, false, serial_val);
    double tp = time_one(info, grid, true, parallel_val);
    set_quad_parallel(true);

    std::printf("dim %d, %d^%d grid, %d bits\n", info.dim, grid, info.dim, bits);
    std::printf("serial   %8.3fs  %10.0f points/s\n", ts, points / ts);
    std::printf("parallel %8.3fs  %10.0f points/s  speedup %.2fx\n", tp,
                points / tp, ts / tp);
    std::printf("route agreement: rel %.3e\n",
                (double)rel_diff(parallel_val, serial_val));
    return 0;
}

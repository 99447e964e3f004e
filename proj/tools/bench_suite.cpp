// Wall-clock comparison of the serial and the OpenMP suite runners on the
// same seeded corpus, with a report-equality check: the parallel runner must
// reproduce the serial reference bit for bit.

#include "pcone/harness.hpp"

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pcone;

namespace {

double run_ms(const GenConfig& cfg, int trials, RunPolicy policy, std::string& text) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport report = run_duality_suite(cfg, trials, policy);
    const auto t1 = std::chrono::steady_clock::now();
    text = report.to_text();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    GenConfig cfg;
    cfg.dim = 3;
    cfg.num_vertices = 4;
    cfg.num_extra_rays = 2;
    cfg.coordinate_bound = 8;
    cfg.seed = 20240801;
    int trials = 100;
    if (argc > 1) trials = std::atoi(argv[1]);
    if (argc > 2) cfg.dim = std::atoi(argv[2]);
    if (argc > 3) cfg.seed = static_cast<std::uint64_t>(std::atoll(argv[3]));

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "dim=" << cfg.dim << " trials=" << trials << " seed=" << cfg.seed << "\n";

    std::string serial_text, parallel_text;
    const double serial_ms = run_ms(cfg, trials, RunPolicy::Serial, serial_text);
    std::cout << "serial:   " << serial_ms << " ms\n";
    const double parallel_ms = run_ms(cfg, trials, RunPolicy::Parallel, parallel_text);
    std::cout << "parallel: " << parallel_ms << " ms\n";
    std::cout << "speedup:  " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";

    if (serial_text != parallel_text) {
        std::cout << "MISMATCH between serial and parallel reports\n";
        std::cout << "--- serial ---\n" << serial_text;
        std::cout << "--- parallel ---\n" << parallel_text;
        return 1;
    }
    std::cout << "reports identical\n" << serial_text;
    return 0;
}

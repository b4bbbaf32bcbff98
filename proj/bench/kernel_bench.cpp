// Compares the serial and OpenMP pair-loop kernels on Cayley sum graphs.
// Usage: polarity_bench [q ...]   (default: 16 32 64 — constructible prime powers)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "polarity/builders.hpp"
#include "polarity/kernels.hpp"
#include "polarity/report.hpp"

using namespace polarity;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> qs = {16, 32, 64};
  if (argc > 1) {
    qs.clear();
    for (int i = 1; i < argc; ++i) qs.push_back(std::atoi(argv[i]));
  }

  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%6s %8s %14s %14s %8s %14s %14s %8s\n", "q", "n", "c4 serial", "c4 parallel",
              "speedup", "sat serial", "sat parallel", "speedup");

  for (int q : qs) {
    QContext qc;
    try {
      // benchmark sizes go past the desk caps on purpose
      qc = make_q_context(q, std::nullopt, std::nullopt, /*max_q=*/4096, /*max_m=*/12);
    } catch (const Error& e) {
      std::fprintf(stderr, "skipping q=%d: %s\n", q, e.what());
      continue;
    }
    const Graph g = cayley_sum_graph(qc.sidon).graph;

    kernels::C4Scan s1, s2;
    kernels::ClosureScan c1, c2;
    const double c4_serial = run_ms([&] { s1 = kernels::c4_scan_serial(g); });
    const double c4_parallel = run_ms([&] { s2 = kernels::c4_scan_parallel(g); });
    const double sat_serial = run_ms([&] { c1 = kernels::closure_scan_serial(g); });
    const double sat_parallel = run_ms([&] { c2 = kernels::closure_scan_parallel(g); });

    if (s1.c4_free != s2.c4_free || c1.min_count != c2.min_count) {
      std::fprintf(stderr, "q=%d: serial and parallel kernels disagree\n", q);
      return 1;
    }

    std::printf("%6d %8d %12.2fms %12.2fms %7.2fx %12.2fms %12.2fms %7.2fx\n", q, g.size(),
                c4_serial, c4_parallel, c4_serial / c4_parallel, sat_serial, sat_parallel,
                sat_serial / sat_parallel);
  }
  return 0;
}

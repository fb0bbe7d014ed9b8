// Serial reference loops versus OpenMP kernels for the data-parallel stages.
// Usage: pathgraph_bench [n_min] [n_max]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "pathgraph/pathgraph.hpp"
#include "pathgraph/reconstruct.hpp"

using namespace pathgraph;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* kernel, int n, double serial, double parallel) {
  std::printf("%-16s %3d %12.3f %12.3f %8.2fx\n", kernel, n, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int n_min = argc > 1 ? std::atoi(argv[1]) : 8;
  const int n_max = argc > 2 ? std::atoi(argv[2]) : 14;
  std::printf("threads=%d\n", omp_get_max_threads());
  std::printf("%-16s %3s %12s %12s %9s\n", "kernel", "n", "serial_ms", "parallel_ms", "speedup");

  for (int n = n_min; n <= n_max; ++n) {
    PathGraph pg;
    const double build_serial = time_ms([&] { pg = PathGraph::build(n, Policy::Serial); });
    const double build_parallel = time_ms([&] { pg = PathGraph::build(n, Policy::Parallel); });
    row("build", n, build_serial, build_parallel);

    const auto anon = anonymize(pg.graph(), 1);
    ReconOptions serial_options;
    serial_options.policy = Policy::Serial;
    ReconOptions parallel_options;
    parallel_options.policy = Policy::Parallel;
    row("reconstruct", n, time_ms([&] { (void)reconstruct_all(anon.graph, serial_options); }),
        time_ms([&] { (void)reconstruct_all(anon.graph, parallel_options); }));

    if (pg.vertex_count() <= 20000) {
      row("diameter", n, time_ms([&] { (void)diameter(pg.graph(), Policy::Serial); }),
          time_ms([&] { (void)diameter(pg.graph(), Policy::Parallel); }));
    }
  }
  return 0;
}

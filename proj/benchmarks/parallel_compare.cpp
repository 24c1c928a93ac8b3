// Compares the OpenMP kernels against their serial references: all-pairs
// distances on a large coupling map, and the experiment harness with one
// worker versus all of them. Results must match exactly; only the wall time
// may differ.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "swapnet/bench.hpp"
#include "swapnet/topology.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
  const swapnet::CouplingMap big = swapnet::build_grid(48);  // 2304 qubits

  auto t0 = Clock::now();
  const auto ref = swapnet::distances_serial(big);
  const double serial_ms = ms_since(t0);

  t0 = Clock::now();
  const auto par = swapnet::distances(big);
  const double parallel_ms = ms_since(t0);

  if (par != ref) {
    std::fprintf(stderr, "distances() disagrees with distances_serial()\n");
    return 1;
  }

  swapnet::RunConfig cfg;
  cfg.family = "er";
  cfg.sizes = {14, 18, 22};
  cfg.topology = "grid";
  cfg.router = "sabre";
  cfg.instances = 12;
  cfg.base_seed = 7;

  cfg.workers = 1;
  t0 = Clock::now();
  const auto rows_serial = swapnet::bench_run(cfg);
  const double bench_serial_ms = ms_since(t0);

  cfg.workers = 0;  // hardware concurrency
  t0 = Clock::now();
  const auto rows_parallel = swapnet::bench_run(cfg);
  const double bench_parallel_ms = ms_since(t0);

  if (swapnet::to_csv(rows_serial) != swapnet::to_csv(rows_parallel)) {
    std::fprintf(stderr, "bench_run() rows depend on the worker count\n");
    return 1;
  }

  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");
  std::printf("%-28s %12.1f %12.1f %7.2fx\n", "distances (48x48 grid)", serial_ms, parallel_ms,
              serial_ms / parallel_ms);
  std::printf("%-28s %12.1f %12.1f %7.2fx\n", "bench_run (36 instances)", bench_serial_ms,
              bench_parallel_ms, bench_serial_ms / bench_parallel_ms);
  std::printf("results identical across worker counts\n");
  return 0;
}

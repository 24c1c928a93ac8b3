#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swapnet/circuit.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/route.hpp"
#include "swapnet/sabre.hpp"
#include "swapnet/schedule.hpp"
#include "swapnet/strategy.hpp"
#include "swapnet/topology.hpp"

namespace swapnet {

// One experiment sweep: a graph family swept over sizes, compiled onto a
// topology with one router, `instances` seeded instances per size.
// Instance seeds are base_seed + instance index.
struct RunConfig {
  std::string family;        // er | regular | ws | ba | sk
  std::vector<int> sizes;
  std::string topology;      // line | grid | heavy_hex | sycamore | aspen |
                             // layered | busnnn | complete
  std::string router = "shuffle";  // shuffle | sabre | none (baseline)
  int instances = 100;
  std::uint64_t base_seed = 0;

  int er_edges = -1;         // -1: half of the possible pairs for that size
  int regular_degree = 3;
  int topo_a = 0, topo_b = 0;  // explicit builder arguments; 0 = fit to size
  double gamma = 0.4, beta = 0.7;
  bool optimize = true;      // peephole pass on/off (ablation)
  GateDurations durations;
  SabreParams sabre;         // per-instance tie-break seed is base_seed+instance
  int workers = 0;           // 0: SWAPNET_WORKERS env var, then hardware
  bool timing = false;       // fill router_ms (wall time; breaks byte-for-byte
                             // reproducibility of the CSV, hence off by default)
};

struct BenchRow {
  std::string family;
  int size = 0;
  std::string topology;
  std::string router;
  int instance = 0;
  int two_q_count = 0;
  int two_q_depth = 0;
  long long scaled_time = 0;
  double router_ms = 0;
};

// Topology instantiated for one problem size (auto-fit unless explicit
// parameters were given).
struct TopoInstance {
  std::string kind;
  int a = 0, b = 0;  // builder arguments actually used
  CouplingMap map;
};

// Everything produced for one instance; tests inspect the intermediate
// circuits and mappings.
struct InstanceArtifacts {
  ProblemGraph graph;
  TopoInstance topo;
  Circuit routed;         // router output, pre-optimization
  Circuit compiled;       // optimized + lowered
  Mapping initial;
  Mapping final_mapping;
  BenchRow row;
};

// Throws std::invalid_argument describing the first infeasibility (unknown
// names, sizes that do not fit the topology, shuffle on a topology without a
// strategy) before any instance runs.
void validate_config(const RunConfig& cfg);

TopoInstance topology_for(const RunConfig& cfg, int graph_qubits);
SwapStrategy strategy_for(const TopoInstance& topo);

InstanceArtifacts run_instance(const RunConfig& cfg, int size, int instance);

// Runs every (size, instance) cell, in parallel when workers allow, and
// returns rows sorted by (size position, instance) regardless of worker
// count or scheduling.
std::vector<BenchRow> bench_run(const RunConfig& cfg);

// Header "family,size,topology,router,instance,two_q_count,two_q_depth,
// scaled_time,router_ms"; router_ms printed with three decimals.
std::string to_csv(const std::vector<BenchRow>& rows);

struct Aggregate {
  double mean = 0;
  double stddev = 0;  // population standard deviation
};
Aggregate aggregate(const std::vector<double>& xs);

// Per-size "mean  stddev" table over two_q_count, two_q_depth, scaled_time.
std::string summary_table(const std::vector<BenchRow>& rows);

// JSON object mirroring RunConfig; unknown keys rejected.
RunConfig parse_config(const std::string& json_text);

}  // namespace swapnet

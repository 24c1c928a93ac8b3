#include "swapnet/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "swapnet/optimize.hpp"
#include "swapnet/qaoa.hpp"

namespace swapnet {

namespace {

// Actual vertex count a family produces for a requested size (the
// preferential-attachment construction can overshoot by one).
int family_qubits(const RunConfig& cfg, int size) {
  if (cfg.family == "ba") return (size + 7) / 4 + (3 * size - 1) / 4;
  return size;
}

ProblemGraph make_graph(const RunConfig& cfg, int size, std::uint64_t seed) {
  if (cfg.family == "er") {
    const int max_m = size * (size - 1) / 2;
    return gen_er(size, cfg.er_edges >= 0 ? cfg.er_edges : max_m / 2, seed);
  }
  if (cfg.family == "regular") return gen_regular(size, cfg.regular_degree, seed);
  if (cfg.family == "ws") return gen_ws(size, seed);
  if (cfg.family == "ba") return gen_ba(size, seed);
  if (cfg.family == "sk") return gen_sk(size);
  throw std::invalid_argument("unknown graph family '" + cfg.family + "'");
}

int env_workers() {
  if (const char* env = std::getenv("SWAPNET_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

TopoInstance topology_for(const RunConfig& cfg, int graph_qubits) {
  const int n = graph_qubits;
  TopoInstance t{cfg.topology, cfg.topo_a, cfg.topo_b, {}};
  const bool fit = cfg.topo_a <= 0;
  if (t.kind == "line") {
    t.a = fit ? n : cfg.topo_a;
    t.map = build_line(t.a);
  } else if (t.kind == "grid") {
    t.a = fit ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) : cfg.topo_a;
    t.map = build_grid(t.a);
  } else if (t.kind == "heavy_hex") {
    if (fit) {
      t.a = 0;
      for (int r = 1; r <= 8 && t.a == 0; ++r)
        for (int c = 1; c <= 8 && t.a == 0; ++c)
          if (build_heavy_hex(r, c).n >= n) {
            t.a = r;
            t.b = c;
          }
      if (t.a == 0) throw std::invalid_argument("no heavy_hex preset fits the instance");
    }
    t.map = build_heavy_hex(t.a, t.b);
  } else if (t.kind == "sycamore") {
    if (fit) {
      t.a = 0;
      for (int size : {18, 23, 36, 54, 72})
        if (size >= n) {
          t.a = size;
          break;
        }
      if (t.a == 0) throw std::invalid_argument("no sycamore preset fits the instance");
    }
    t.map = build_sycamore(t.a);
  } else if (t.kind == "aspen") {
    if (fit) {
      // Octagon count is all that matters: (r,c) and (1,rc) build the same map.
      t.a = 1;
      t.b = (n + 7) / 8;
    }
    t.map = build_aspen(t.a, t.b);
  } else if (t.kind == "layered") {
    t.map = build_layered_sycamore();
  } else if (t.kind == "busnnn") {
    const int bus_size = t.b > 0 ? t.b : 8;
    t.b = bus_size;
    if (fit) t.a = (n + bus_size - 1) / bus_size;
    t.map = build_busnnn(t.a, t.b);
  } else if (t.kind == "complete") {
    t.a = fit ? n : cfg.topo_a;
    t.map = build_complete(t.a);
  } else {
    throw std::invalid_argument("unknown topology '" + t.kind + "'");
  }
  if (t.map.n < n)
    throw std::invalid_argument("topology " + t.kind + " holds " + std::to_string(t.map.n) +
                                " qubits but the instance needs " + std::to_string(n));
  return t;
}

SwapStrategy strategy_for(const TopoInstance& topo) {
  if (topo.kind == "line") return strategy_line(topo.a);
  if (topo.kind == "grid") return strategy_grid(topo.a);
  if (topo.kind == "busnnn") return strategy_busnnn(topo.a, topo.b);
  throw std::invalid_argument("no full-shuffle strategy for topology '" + topo.kind + "'");
}

void validate_config(const RunConfig& cfg) {
  if (cfg.sizes.empty()) throw std::invalid_argument("config: sizes must be nonempty");
  if (cfg.instances < 1) throw std::invalid_argument("config: instances must be positive");
  if (cfg.router != "shuffle" && cfg.router != "sabre" && cfg.router != "none")
    throw std::invalid_argument("config: unknown router '" + cfg.router + "'");
  if (cfg.router == "shuffle" && cfg.topology != "line" && cfg.topology != "grid" &&
      cfg.topology != "busnnn")
    throw std::invalid_argument("config: shuffle requires line, grid or busnnn");
  for (int size : cfg.sizes) {
    const int n = family_qubits(cfg, size);
    if (cfg.family == "er") {
      const int max_m = size * (size - 1) / 2;
      if (cfg.er_edges > max_m)
        throw std::invalid_argument("config: er_edges exceeds possible pairs");
    } else if (cfg.family == "regular") {
      if (cfg.regular_degree >= size || (size * cfg.regular_degree) % 2 != 0)
        throw std::invalid_argument("config: infeasible regular degree for size " +
                                    std::to_string(size));
    } else if (cfg.family == "ws") {
      if (size <= 4) throw std::invalid_argument("config: ws needs size > 4");
    } else if (cfg.family == "ba") {
      if (size < 4) throw std::invalid_argument("config: ba needs size >= 4");
    } else if (cfg.family != "sk") {
      throw std::invalid_argument("config: unknown family '" + cfg.family + "'");
    }
    if (cfg.router != "none") topology_for(cfg, n);  // throws when nothing fits
  }
}

InstanceArtifacts run_instance(const RunConfig& cfg, int size, int instance) {
  const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(instance);
  InstanceArtifacts art;
  art.graph = make_graph(cfg, size, seed);
  const Circuit circuit = build_qaoa(art.graph, {cfg.gamma, cfg.beta});

  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.router == "none") {
    art.topo = TopoInstance{"complete", art.graph.n, 0, build_complete(art.graph.n)};
    art.routed = circuit;
    art.initial = Mapping::identity(art.graph.n);
    art.final_mapping = art.initial;
  } else if (cfg.router == "shuffle") {
    art.topo = topology_for(cfg, art.graph.n);
    const SwapStrategy strategy = strategy_for(art.topo);
    RouteResult r = route_shuffle(circuit, strategy);
    art.routed = std::move(r.circuit);
    art.initial = std::move(r.initial);
    art.final_mapping = std::move(r.final);
  } else {
    art.topo = topology_for(cfg, art.graph.n);
    SabreParams params = cfg.sabre;
    params.seed = seed;
    const Mapping start = sabre_initial_mapping(circuit, art.topo.map, params);
    RouteResult r = route_sabre(circuit, art.topo.map, params, start);
    art.routed = std::move(r.circuit);
    art.initial = std::move(r.initial);
    art.final_mapping = std::move(r.final);
  }
  const auto t1 = std::chrono::steady_clock::now();

  Circuit staged = cfg.optimize ? peephole(art.routed) : art.routed;
  staged = lower(staged);
  art.compiled = cfg.optimize ? peephole(staged) : staged;
  const ScheduleResult sched = schedule(art.compiled, art.topo.map, cfg.durations);

  art.row.family = cfg.family;
  art.row.size = size;
  art.row.topology = cfg.router == "none" ? "complete" : cfg.topology;
  art.row.router = cfg.router;
  art.row.instance = instance;
  art.row.two_q_count = sched.two_q_count;
  art.row.two_q_depth = sched.two_q_depth;
  art.row.scaled_time = sched.makespan;
  art.row.router_ms =
      cfg.timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
  return art;
}

std::vector<BenchRow> bench_run(const RunConfig& cfg) {
  validate_config(cfg);
  const int workers = cfg.workers > 0 ? cfg.workers : env_workers();
  const int cells = static_cast<int>(cfg.sizes.size()) * cfg.instances;
  std::vector<BenchRow> rows(cells);
  std::vector<std::string> errors(cells);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (int cell = 0; cell < cells; ++cell) {
    const int size = cfg.sizes[cell / cfg.instances];
    const int instance = cell % cfg.instances;
    try {
      rows[cell] = run_instance(cfg, size, instance).row;
    } catch (const std::exception& e) {
      errors[cell] = e.what();
    }
  }
  for (const auto& err : errors)
    if (!err.empty()) throw std::runtime_error("bench instance failed: " + err);
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,size,topology,router,instance,two_q_count,two_q_depth,scaled_time,router_ms\n";
  char ms[32];
  for (const BenchRow& r : rows) {
    std::snprintf(ms, sizeof(ms), "%.3f", r.router_ms);
    out << r.family << ',' << r.size << ',' << r.topology << ',' << r.router << ','
        << r.instance << ',' << r.two_q_count << ',' << r.two_q_depth << ',' << r.scaled_time
        << ',' << ms << '\n';
  }
  return out.str();
}

Aggregate aggregate(const std::vector<double>& xs) {
  Aggregate a;
  if (xs.empty()) return a;
  for (double x : xs) a.mean += x;
  a.mean /= static_cast<double>(xs.size());
  double var = 0;
  for (double x : xs) var += (x - a.mean) * (x - a.mean);
  a.stddev = std::sqrt(var / static_cast<double>(xs.size()));
  return a;
}

std::string summary_table(const std::vector<BenchRow>& rows) {
  std::map<std::tuple<std::string, int, std::string, std::string>,
           std::array<std::vector<double>, 3>>
      groups;
  for (const BenchRow& r : rows) {
    auto& g = groups[{r.family, r.size, r.topology, r.router}];
    g[0].push_back(r.two_q_count);
    g[1].push_back(r.two_q_depth);
    g[2].push_back(static_cast<double>(r.scaled_time));
  }
  std::ostringstream out;
  out << "family size topology router instances two_q_count two_q_depth scaled_time\n";
  char buf[160];
  for (const auto& [key, vals] : groups) {
    const auto& [family, size, topo, router] = key;
    const Aggregate c = aggregate(vals[0]), d = aggregate(vals[1]), t = aggregate(vals[2]);
    std::snprintf(buf, sizeof(buf), "%s %d %s %s %zu %.1f±%.1f %.1f±%.1f %.1f±%.1f\n",
                  family.c_str(), size, topo.c_str(), router.c_str(), vals[0].size(), c.mean,
                  c.stddev, d.mean, d.stddev, t.mean, t.stddev);
    out << buf;
  }
  return out.str();
}

RunConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  static const std::vector<std::string> known = {
      "family", "sizes",   "topology", "router",   "instances", "seed",
      "er_edges", "regular_degree", "topology_a", "topology_b", "gamma", "beta",
      "optimize", "durations", "sabre", "workers", "timing"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("config: unknown key '" + key + "'");
  RunConfig cfg;
  try {
    cfg.family = j.at("family").get<std::string>();
    cfg.sizes = j.at("sizes").get<std::vector<int>>();
    cfg.topology = j.at("topology").get<std::string>();
    cfg.router = j.value("router", cfg.router);
    cfg.instances = j.value("instances", cfg.instances);
    cfg.base_seed = j.value("seed", cfg.base_seed);
    cfg.er_edges = j.value("er_edges", cfg.er_edges);
    cfg.regular_degree = j.value("regular_degree", cfg.regular_degree);
    cfg.topo_a = j.value("topology_a", cfg.topo_a);
    cfg.topo_b = j.value("topology_b", cfg.topo_b);
    cfg.gamma = j.value("gamma", cfg.gamma);
    cfg.beta = j.value("beta", cfg.beta);
    cfg.optimize = j.value("optimize", cfg.optimize);
    cfg.workers = j.value("workers", cfg.workers);
    cfg.timing = j.value("timing", cfg.timing);
    if (j.contains("durations")) {
      cfg.durations.t_1q = j["durations"].value("t_1q", cfg.durations.t_1q);
      cfg.durations.t_2q = j["durations"].value("t_2q", cfg.durations.t_2q);
    }
    if (j.contains("sabre")) {
      const auto& s = j["sabre"];
      cfg.sabre.lookahead_size = s.value("lookahead_size", cfg.sabre.lookahead_size);
      cfg.sabre.lookahead_weight = s.value("lookahead_weight", cfg.sabre.lookahead_weight);
      cfg.sabre.decay_increment = s.value("decay_increment", cfg.sabre.decay_increment);
      cfg.sabre.decay_reset_interval =
          s.value("decay_reset_interval", cfg.sabre.decay_reset_interval);
      cfg.sabre.seed = s.value("seed", cfg.sabre.seed);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return cfg;
}

}  // namespace swapnet

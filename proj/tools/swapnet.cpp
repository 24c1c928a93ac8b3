#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swapnet/bench.hpp"
#include "swapnet/optimize.hpp"
#include "swapnet/qaoa.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swap-network compiler experiments"};
  app.require_subcommand(1);

  // bench run
  auto* bench = app.add_subcommand("bench", "experiment harness");
  bench->require_subcommand(1);
  auto* bench_run_cmd = bench->add_subcommand("run", "run a config and write CSV");
  std::string config_path, out_path;
  bool timing = false, no_optimize = false;
  int workers = 0;
  bench_run_cmd->add_option("--config", config_path, "JSON config file")->required();
  bench_run_cmd->add_option("--out", out_path, "output CSV path")->required();
  bench_run_cmd->add_flag("--timing", timing, "record router wall time (non-reproducible)");
  bench_run_cmd->add_flag("--no-optimize", no_optimize, "disable the peephole pass");
  bench_run_cmd->add_option("--workers", workers, "worker cap (overrides SWAPNET_WORKERS)");

  // topo dump
  auto* topo = app.add_subcommand("topo", "coupling maps");
  auto* topo_dump = topo->add_subcommand("dump", "print a coupling map");
  std::string topo_name;
  int topo_a = 0, topo_b = 0;
  topo_dump->add_option("--name", topo_name, "line|grid|heavy_hex|sycamore|aspen|layered|busnnn|complete")->required();
  topo_dump->add_option("-a", topo_a, "first builder argument (size/side/rows/buses)");
  topo_dump->add_option("-b", topo_b, "second builder argument (cols/bus size)");

  // strategy dump
  auto* strat = app.add_subcommand("strategy", "full-shuffle swap strategies");
  auto* strat_dump = strat->add_subcommand("dump", "print numbered swap layers");
  std::string strat_name;
  int strat_a = 0, strat_b = 0;
  strat_dump->add_option("--name", strat_name, "line|grid|busnnn")->required();
  strat_dump->add_option("-a", strat_a, "line length / grid side / bus count")->required();
  strat_dump->add_option("-b", strat_b, "bus size (busnnn)");

  // compile
  auto* compile = app.add_subcommand("compile", "compile one problem graph");
  std::string graph_path, compile_topo = "line", router = "shuffle";
  int ca = 0, cb = 0;
  std::uint64_t seed = 0;
  double gamma = 0.4, beta = 0.7;
  bool compile_no_opt = false, dump_sched = false;
  compile->add_option("--graph", graph_path, "edge-list file ('n m' header)")->required();
  compile->add_option("--topo", compile_topo, "target topology kind");
  compile->add_option("-a", ca, "first topology argument (0 = fit to graph)");
  compile->add_option("-b", cb, "second topology argument");
  compile->add_option("--router", router, "shuffle|sabre|none");
  compile->add_option("--seed", seed, "router tie-break seed");
  compile->add_option("--gamma", gamma, "interaction angle parameter");
  compile->add_option("--beta", beta, "mixer angle parameter");
  compile->add_flag("--no-optimize", compile_no_opt, "disable the peephole pass");
  compile->add_flag("--dump-schedule", dump_sched, "print the schedule to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench_run_cmd->parsed()) {
      swapnet::RunConfig cfg = swapnet::parse_config(slurp(config_path));
      if (timing) cfg.timing = true;
      if (no_optimize) cfg.optimize = false;
      if (workers > 0) cfg.workers = workers;
      const auto rows = swapnet::bench_run(cfg);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      out << swapnet::to_csv(rows);
      std::cout << swapnet::summary_table(rows);
      return 0;
    }
    if (topo_dump->parsed()) {
      swapnet::RunConfig cfg;
      cfg.topology = topo_name;
      cfg.topo_a = topo_a;
      cfg.topo_b = topo_b;
      // With explicit arguments the size below is only a floor; 1 disables it.
      std::cout << swapnet::to_text(swapnet::topology_for(cfg, 1).map);
      return 0;
    }
    if (strat_dump->parsed()) {
      swapnet::SwapStrategy s;
      if (strat_name == "line") s = swapnet::strategy_line(strat_a);
      else if (strat_name == "grid") s = swapnet::strategy_grid(strat_a);
      else if (strat_name == "busnnn") s = swapnet::strategy_busnnn(strat_a, strat_b > 0 ? strat_b : 8);
      else throw std::runtime_error("no strategy for '" + strat_name + "'");
      std::cout << swapnet::dump_strategy(s);
      return 0;
    }
    if (compile->parsed()) {
      const swapnet::ProblemGraph g = swapnet::parse_edge_list(slurp(graph_path));
      const swapnet::Circuit circuit = swapnet::build_qaoa(g, {gamma, beta});
      swapnet::RunConfig cfg;
      cfg.topology = compile_topo;
      cfg.topo_a = ca;
      cfg.topo_b = cb;
      swapnet::TopoInstance topo_inst;
      swapnet::RouteResult routed;
      if (router == "none") {
        topo_inst = {"complete", g.n, 0, swapnet::build_complete(g.n)};
        routed.circuit = circuit;
        routed.initial = swapnet::Mapping::identity(g.n);
        routed.final = routed.initial;
      } else if (router == "shuffle") {
        topo_inst = swapnet::topology_for(cfg, g.n);
        routed = swapnet::route_shuffle(circuit, swapnet::strategy_for(topo_inst));
      } else if (router == "sabre") {
        topo_inst = swapnet::topology_for(cfg, g.n);
        swapnet::SabreParams params;
        params.seed = seed;
        const swapnet::Mapping start =
            swapnet::sabre_initial_mapping(circuit, topo_inst.map, params);
        routed = swapnet::route_sabre(circuit, topo_inst.map, params, start);
      } else {
        throw std::runtime_error("unknown router '" + router + "'");
      }
      swapnet::Circuit staged = compile_no_opt ? routed.circuit : swapnet::peephole(routed.circuit);
      staged = swapnet::lower(staged);
      if (!compile_no_opt) staged = swapnet::peephole(staged);
      const auto sched = swapnet::schedule(staged, topo_inst.map);
      std::cout << swapnet::serialize(staged);
      std::cerr << "two_q_count " << sched.two_q_count << "\ntwo_q_depth " << sched.two_q_depth
                << "\nscaled_time " << sched.makespan << '\n';
      if (dump_sched) std::cerr << swapnet::dump_schedule(staged, topo_inst.map, sched);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

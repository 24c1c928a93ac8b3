#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "soundness.hpp"
#include "swapnet/bench.hpp"
#include "swapnet/qaoa.hpp"

using namespace swapnet;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.family = "er";
  cfg.sizes = {6, 9};
  cfg.topology = "grid";
  cfg.router = "sabre";
  cfg.instances = 4;
  cfg.base_seed = 11;
  return cfg;
}

}  // namespace

TEST_CASE("parse_config fills every field and applies defaults") {
  const std::string text = R"({
    "family": "regular", "sizes": [8, 12], "topology": "busnnn",
    "router": "shuffle", "instances": 7, "seed": 99,
    "regular_degree": 3, "topology_a": 2, "topology_b": 8,
    "gamma": 0.25, "beta": 0.5, "optimize": false,
    "durations": {"t_1q": 2, "t_2q": 20},
    "sabre": {"lookahead_size": 10, "lookahead_weight": 0.25},
    "workers": 3, "timing": true
  })";
  const RunConfig cfg = parse_config(text);
  CHECK(cfg.family == "regular");
  CHECK(cfg.sizes == std::vector<int>{8, 12});
  CHECK(cfg.topology == "busnnn");
  CHECK(cfg.router == "shuffle");
  CHECK(cfg.instances == 7);
  CHECK(cfg.base_seed == 99);
  CHECK(cfg.regular_degree == 3);
  CHECK(cfg.topo_a == 2);
  CHECK(cfg.topo_b == 8);
  CHECK(cfg.gamma == doctest::Approx(0.25));
  CHECK(cfg.beta == doctest::Approx(0.5));
  CHECK_FALSE(cfg.optimize);
  CHECK(cfg.durations.t_1q == 2);
  CHECK(cfg.durations.t_2q == 20);
  CHECK(cfg.sabre.lookahead_size == 10);
  CHECK(cfg.sabre.lookahead_weight == doctest::Approx(0.25));
  CHECK(cfg.sabre.decay_increment == doctest::Approx(0.001));  // default kept
  CHECK(cfg.workers == 3);
  CHECK(cfg.timing);

  const RunConfig min = parse_config(R"({"family":"er","sizes":[6],"topology":"line"})");
  CHECK(min.router == "shuffle");
  CHECK(min.instances == 100);
  CHECK(min.er_edges == -1);
  CHECK(min.optimize);
  CHECK_FALSE(min.timing);
}

TEST_CASE("parse_config rejects unknown keys, bad JSON and missing fields") {
  CHECK_THROWS_AS(parse_config(R"({"family":"er","sizes":[6],"topology":"line","routr":"x"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"sizes":[6],"topology":"line"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"family":"er","sizes":"6","topology":"line"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config("[1,2]"), std::invalid_argument);
}

TEST_CASE("validate_config rejects infeasible sweeps up front") {
  RunConfig cfg = small_config();
  CHECK_NOTHROW(validate_config(cfg));

  cfg.router = "shuffle";
  cfg.topology = "sycamore";  // no full-shuffle strategy there
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.family = "nope";
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.router = "fastest";
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.sizes = {};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.family = "regular";
  cfg.sizes = {7};  // 7 * 3 is odd
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.er_edges = 100;  // more than C(6,2)
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);

  cfg = small_config();
  cfg.family = "ws";
  cfg.sizes = {4};
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("topology_for fits the smallest preset holding the instance") {
  RunConfig cfg = small_config();
  auto fit = [&](const std::string& kind, int n) {
    cfg.topology = kind;
    cfg.topo_a = 0;
    cfg.topo_b = 0;
    return topology_for(cfg, n);
  };
  CHECK(fit("line", 20).map.n == 20);
  CHECK(fit("grid", 20).a == 5);
  CHECK(fit("grid", 16).a == 4);
  const TopoInstance hh = fit("heavy_hex", 20);
  CHECK(hh.a == 1);
  CHECK(hh.b == 2);
  CHECK(hh.map.n == 21);
  CHECK(fit("sycamore", 20).map.n == 23);
  CHECK(fit("sycamore", 24).map.n == 36);
  const TopoInstance aspen = fit("aspen", 20);
  CHECK(aspen.a == 1);
  CHECK(aspen.b == 3);
  CHECK(aspen.map.n == 24);
  const TopoInstance bus = fit("busnnn", 20);
  CHECK(bus.a == 3);
  CHECK(bus.b == 8);
  CHECK(bus.map.n == 24);
  CHECK(fit("layered", 100).map.n == 144);
  CHECK(fit("complete", 13).map.n == 13);

  cfg.topology = "heavy_hex";
  cfg.topo_a = 1;
  cfg.topo_b = 1;  // 12 qubits, too small for 20
  CHECK_THROWS_AS(topology_for(cfg, 20), std::invalid_argument);
  cfg.topology = "waffle";
  CHECK_THROWS_AS(topology_for(cfg, 4), std::invalid_argument);
}

TEST_CASE("baseline router compiles onto an instance-sized complete map") {
  RunConfig cfg;
  cfg.family = "sk";
  cfg.sizes = {5};
  cfg.topology = "line";  // ignored by the baseline
  cfg.router = "none";
  cfg.instances = 1;
  const InstanceArtifacts art = run_instance(cfg, 5, 0);
  CHECK(art.topo.map.n == 5);
  CHECK(art.row.topology == "complete");
  CHECK(art.row.router == "none");
  CHECK(art.row.two_q_count == 5 * 4);  // two CNOTs per interaction term
  CHECK(art.row.router_ms == 0.0);
  CHECK(art.compiled.level == Level::lowered);
}

TEST_CASE("run_instance artifacts pass the routing soundness check") {
  RunConfig cfg = small_config();
  for (const char* router : {"shuffle", "sabre"}) {
    cfg.router = router;
    cfg.topology = std::string(router) == "shuffle" ? "line" : "grid";
    const InstanceArtifacts art = run_instance(cfg, 6, 2);
    const Circuit original = build_qaoa(art.graph, {cfg.gamma, cfg.beta});
    RouteResult rr{art.routed, art.initial, art.final_mapping};
    CHECK(soundness::check_routing(original, rr, art.topo.map).empty());
    CHECK(art.row.two_q_depth >= 1);
    CHECK(art.row.scaled_time >= 10 * art.row.two_q_depth);
  }
}

TEST_CASE("instances reproduce: same cell, same row") {
  const RunConfig cfg = small_config();
  const BenchRow a = run_instance(cfg, 9, 3).row;
  const BenchRow b = run_instance(cfg, 9, 3).row;
  CHECK(a.two_q_count == b.two_q_count);
  CHECK(a.two_q_depth == b.two_q_depth);
  CHECK(a.scaled_time == b.scaled_time);
}

TEST_CASE("bench_run emits rows in cell order whatever the worker count") {
  RunConfig cfg = small_config();
  cfg.workers = 1;
  const std::string csv1 = to_csv(bench_run(cfg));
  cfg.workers = 4;
  const std::string csv4 = to_csv(bench_run(cfg));
  CHECK(csv1 == csv4);
  CHECK(csv1 == to_csv(bench_run(cfg)));  // and across repeat runs

  // 2 sizes x 4 instances, header line first.
  CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 9);
}

TEST_CASE("timing flag fills router_ms and breaks nothing else") {
  RunConfig cfg = small_config();
  cfg.instances = 1;
  cfg.sizes = {6};
  cfg.timing = true;
  const auto rows = bench_run(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].router_ms > 0.0);
}

TEST_CASE("to_csv prints the documented header and fixed-point router_ms") {
  BenchRow r;
  r.family = "er";
  r.size = 6;
  r.topology = "grid";
  r.router = "sabre";
  r.instance = 2;
  r.two_q_count = 31;
  r.two_q_depth = 14;
  r.scaled_time = 170;
  r.router_ms = 1.23456;
  CHECK(to_csv({r}) ==
        "family,size,topology,router,instance,two_q_count,two_q_depth,scaled_time,router_ms\n"
        "er,6,grid,sabre,2,31,14,170,1.235\n");
  CHECK(to_csv({}) ==
        "family,size,topology,router,instance,two_q_count,two_q_depth,scaled_time,router_ms\n");
}

TEST_CASE("aggregate reports mean and population standard deviation") {
  const Aggregate a = aggregate({10.0, 20.0});
  CHECK(a.mean == doctest::Approx(15.0));
  CHECK(a.stddev == doctest::Approx(5.0));
  const Aggregate single = aggregate({3.0});
  CHECK(single.mean == doctest::Approx(3.0));
  CHECK(single.stddev == doctest::Approx(0.0));
  const Aggregate empty = aggregate({});
  CHECK(empty.mean == 0.0);
  CHECK(empty.stddev == 0.0);
}

TEST_CASE("summary_table groups by sweep cell") {
  RunConfig cfg = small_config();
  cfg.instances = 2;
  const std::string table = summary_table(bench_run(cfg));
  CHECK(table.find("family size topology router instances") == 0);
  // One line per size group plus the header.
  CHECK(std::count(table.begin(), table.end(), '\n') == 3);
  CHECK(table.find("er 6 grid sabre 2 ") != std::string::npos);
}

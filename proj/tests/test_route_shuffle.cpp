#include <doctest.h>

#include <vector>

#include "sim.hpp"
#include "soundness.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/qaoa.hpp"
#include "swapnet/route.hpp"
#include "swapnet/strategy.hpp"

using namespace swapnet;

namespace {

SwapStrategy complete_strategy(int n) {
  SwapStrategy s;
  s.map = build_complete(n);
  return s;  // already fully connected; no layers needed
}

ProblemGraph five_block_instance() {
  ProblemGraph g;
  g.n = 5;
  g.edges = {{0, 1}, {0, 3}, {1, 4}, {1, 2}, {3, 4}};
  return g;
}

}  // namespace

TEST_CASE("commuting terms pack to depth 3 on a complete map; in order they cost 5") {
  const ProblemGraph g = five_block_instance();
  Circuit c{5, Level::abstract, {}};
  for (auto [a, b] : g.edges) c.gates.push_back(Gate::zz(0.8, a, b));
  CHECK(count_2q(c) == 5);  // sequential reading: one slot per term

  const RouteResult rr = route_shuffle(c, complete_strategy(5));
  CHECK(soundness::swap_count(rr.circuit) == 0);
  CHECK(depth_2q(rr.circuit) == 3);
  CHECK(soundness::check_routing(c, rr, complete_strategy(5).map).empty());
}

TEST_CASE("mapping bookkeeping: identity start, swaps tracked to the final") {
  Mapping m = Mapping::identity(4);
  CHECK(m.log_to_phys == std::vector<int>{0, 1, 2, 3});
  m.apply_swap(1, 3);
  CHECK(m.log_to_phys == std::vector<int>{0, 3, 2, 1});
  CHECK(m.phys_to_log == std::vector<int>{0, 3, 2, 1});
  m.apply_swap(0, 1);
  CHECK(m.phys_to_log == std::vector<int>{3, 0, 2, 1});
  CHECK(m.log_to_phys[3] == 0);
}

TEST_CASE("complete-graph ansatz on the line uses every scheduled swap") {
  const ProblemGraph g = gen_sk(6);
  const Circuit c = build_qaoa(g);
  const SwapStrategy s = strategy_line(6);
  const RouteResult rr = route_shuffle(c, s);
  CHECK(soundness::check_routing(c, rr, s.map).empty());
  CHECK(soundness::swap_count(rr.circuit) == l_swap(6));
  CHECK(count_2q(rr.circuit) == 15 + l_swap(6));
}

TEST_CASE("routed output keeps the ansatz shape around the swaps") {
  const Circuit c = build_qaoa(gen_sk(4));
  const SwapStrategy s = strategy_line(4);
  const RouteResult rr = route_shuffle(c, s);
  for (int q = 0; q < 4; ++q) CHECK(rr.circuit.gates[q] == Gate::h(q));
  for (int k = 1; k <= 4; ++k) {
    const Gate& g = rr.circuit.gates[rr.circuit.gates.size() - k];
    CHECK(g.kind == GateKind::RX);
  }
  CHECK(rr.initial == Mapping::identity(4));
}

TEST_CASE("swaps that only move padding are dropped") {
  ProblemGraph g;
  g.n = 3;
  g.edges = {{0, 2}};
  const Circuit c = build_qaoa(g);
  const SwapStrategy s = strategy_line(6);
  const RouteResult rr = route_shuffle(c, s);
  CHECK(soundness::check_routing(c, rr, s.map).empty());
  Mapping cur = rr.initial;
  for (const Gate& gate : rr.circuit.gates) {
    if (gate.kind != GateKind::SWAP) continue;
    CHECK((cur.phys_to_log[gate.q0] < 3 || cur.phys_to_log[gate.q1] < 3));
    cur.apply_swap(gate.q0, gate.q1);
  }
}

TEST_CASE("a single bus needs no swaps at all") {
  const Circuit c = build_qaoa(gen_er(8, 14, 3));
  const SwapStrategy s = strategy_busnnn(1, 8);
  const RouteResult rr = route_shuffle(c, s);
  CHECK(soundness::swap_count(rr.circuit) == 0);
  CHECK(soundness::check_routing(c, rr, s.map).empty());
}

TEST_CASE("routing preserves the statevector under the final mapping") {
  struct Case {
    ProblemGraph g;
    SwapStrategy s;
  };
  std::vector<Case> cases;
  cases.push_back({gen_er(5, 7, 11), strategy_line(5)});
  cases.push_back({gen_er(4, 5, 2), strategy_grid(2)});
  cases.push_back({gen_er(6, 9, 8), strategy_busnnn(2, 4)});
  cases.push_back({gen_sk(4), strategy_grid(2)});
  for (const auto& [g, s] : cases) {
    const Circuit c = build_qaoa(g);
    const RouteResult rr = route_shuffle(c, s);
    REQUIRE(soundness::check_routing(c, rr, s.map).empty());
    const auto want = simref::embed(simref::simulate(c), rr.final, g.n);
    CHECK(simref::equal_up_to_global_phase(want, simref::simulate(rr.circuit), 1e-9));
  }
}

TEST_CASE("non-ansatz circuits and oversized circuits are rejected") {
  const SwapStrategy s = strategy_line(4);
  Circuit c{2, Level::abstract, {Gate::cnot(0, 1)}};
  CHECK_THROWS_AS(route_shuffle(c, s), std::invalid_argument);
  c.gates = {Gate::zz(0.1, 0, 1), Gate::h(0)};
  CHECK_THROWS_AS(route_shuffle(c, s), std::invalid_argument);
  c.gates = {Gate::rx(0.1, 0), Gate::zz(0.1, 0, 1)};
  CHECK_THROWS_AS(route_shuffle(c, s), std::invalid_argument);
  Circuit wide{6, Level::abstract, {Gate::h(0)}};
  CHECK_THROWS_AS(route_shuffle(wide, s), std::invalid_argument);
}

TEST_CASE("a strategy that cannot couple the terms is reported") {
  SwapStrategy s;
  s.map = build_line(4);
  SwapLayer only;
  only.swaps = {{0, 1}};
  s.layers = {only};
  s.bound_layers = 2;
  ProblemGraph g;
  g.n = 4;
  g.edges = {{0, 3}};
  CHECK_THROWS_AS(route_shuffle(build_qaoa(g), s), std::runtime_error);
}

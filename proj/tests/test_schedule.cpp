#include <doctest.h>

#include <stdexcept>

#include "swapnet/circuit.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/qaoa.hpp"
#include "swapnet/schedule.hpp"
#include "swapnet/topology.hpp"

using namespace swapnet;

TEST_CASE("schedule requires a lowered circuit on coupled operands") {
  const CouplingMap line = build_line(3);
  Circuit abstract{2, Level::abstract, {Gate::zz(0.1, 0, 1)}};
  CHECK_THROWS_AS(schedule(abstract, line), std::invalid_argument);

  Circuit far{3, Level::lowered, {Gate::cnot(0, 2)}};
  CHECK_THROWS_AS(schedule(far, line), std::invalid_argument);

  Circuit wide{4, Level::lowered, {Gate::cnot(0, 1)}};
  CHECK_THROWS_AS(schedule(wide, line), std::invalid_argument);
}

TEST_CASE("two-vertex ansatz compiles to a 25-unit schedule") {
  const Circuit c = lower(build_qaoa(gen_sk(2)));
  const auto r = schedule(c, build_line(2));
  CHECK(r.makespan == 25);  // 3 + 10 + 1 + 10 + 1
  CHECK(r.two_q_count == 2);
  CHECK(r.two_q_depth == 2);
  CHECK(scaled_time(c, build_line(2)) == 25);
}

TEST_CASE("lowered H followed by CNOT takes 13 units") {
  const Circuit c = lower(Circuit{2, Level::abstract, {Gate::h(0), Gate::cnot(0, 1)}});
  CHECK(schedule(c, build_line(2)).makespan == 13);
}

TEST_CASE("disjoint pairs on one bus serialize; on edges they overlap") {
  for (int k : {1, 2, 3, 5}) {
    Circuit c{2 * k, Level::lowered, {}};
    for (int i = 0; i < k; ++i) c.gates.push_back(Gate::cnot(2 * i, 2 * i + 1));
    CHECK(schedule(c, build_busnnn(1, 2 * k)).makespan == 10 * k);
    CHECK(schedule(c, build_complete(2 * k)).makespan == 10);
  }
}

TEST_CASE("bridge edges between buses do not claim either bus") {
  const CouplingMap m = build_busnnn(2, 4);
  Circuit c{8, Level::lowered, {Gate::cnot(2, 4), Gate::cnot(3, 5)}};
  const auto r = schedule(c, m);
  CHECK(r.start[0] == 0);
  CHECK(r.start[1] == 0);
  CHECK(r.makespan == 10);
}

TEST_CASE("separate buses run in parallel") {
  const CouplingMap m = build_busnnn(2, 4);
  Circuit c{8, Level::lowered, {Gate::cnot(0, 1), Gate::cnot(4, 5)}};
  CHECK(schedule(c, m).makespan == 10);
}

TEST_CASE("a dependency chain costs the sum of its two-qubit gates") {
  Circuit c{4, Level::lowered,
            {Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(2, 3), Gate::cnot(3, 2)}};
  const auto r = schedule(c, build_line(4));
  CHECK(r.makespan == 40);
  CHECK(r.two_q_depth == 4);
  CHECK(r.start[1] == 10);
  CHECK(r.start[3] == 30);
}

TEST_CASE("single-qubit gates fill gaps without blocking other qubits") {
  Circuit c{2, Level::lowered, {Gate::rx(0.1, 0), Gate::rz(0.2, 1), Gate::cnot(0, 1)}};
  const auto r = schedule(c, build_line(2));
  CHECK(r.start[0] == 0);
  CHECK(r.start[1] == 0);
  CHECK(r.start[2] == 1);
  CHECK(r.makespan == 11);
}

TEST_CASE("custom durations scale the schedule") {
  Circuit c{2, Level::lowered, {Gate::rx(0.1, 0), Gate::cnot(0, 1)}};
  const auto r = schedule(c, build_line(2), GateDurations{2, 7});
  CHECK(r.start[1] == 2);
  CHECK(r.makespan == 9);
}

TEST_CASE("dump_schedule lists start, end and claimed resources") {
  const CouplingMap m = build_busnnn(1, 2);
  Circuit c{2, Level::lowered, {Gate::rx(0.5, 1), Gate::cnot(0, 1)}};
  const auto r = schedule(c, m);
  CHECK(dump_schedule(c, m, r) == "0 0 1 q1\n1 1 11 q0 q1 bus0\n");
}

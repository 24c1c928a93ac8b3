#include <doctest.h>

#include <algorithm>
#include <vector>

#include "swapnet/graph.hpp"
#include "swapnet/qaoa.hpp"

using namespace swapnet;

TEST_CASE("ansatz layout: H layer, one interaction per edge, mixer layer") {
  ProblemGraph g;
  g.n = 3;
  g.edges = {{0, 1}, {1, 2}};
  const Circuit c = build_qaoa(g, {0.4, 0.7});
  CHECK(c.width == 3);
  CHECK(c.level == Level::abstract);
  const std::vector<Gate> want{
      Gate::h(0),          Gate::h(1),          Gate::h(2),
      Gate::zz(0.8, 0, 1), Gate::zz(0.8, 1, 2),
      Gate::rx(1.4, 0),    Gate::rx(1.4, 1),    Gate::rx(1.4, 2),
  };
  CHECK(c.gates == want);
}

TEST_CASE("default parameters are gamma 0.4, beta 0.7") {
  ProblemGraph g;
  g.n = 2;
  g.edges = {{0, 1}};
  CHECK(build_qaoa(g) == build_qaoa(g, {0.4, 0.7}));
  const Circuit c = build_qaoa(g);
  CHECK(c.gates[2].theta == doctest::Approx(0.8));
  CHECK(c.gates[3].theta == doctest::Approx(1.4));
}

TEST_CASE("interaction terms follow the sorted edge order") {
  ProblemGraph g;
  g.n = 4;
  g.edges = {{0, 3}, {1, 2}, {0, 1}};  // unsorted on purpose
  std::sort(g.edges.begin(), g.edges.end());
  const Circuit c = build_qaoa(g);
  CHECK(c.gates[4] == Gate::zz(0.8, 0, 1));
  CHECK(c.gates[5] == Gate::zz(0.8, 0, 3));
  CHECK(c.gates[6] == Gate::zz(0.8, 1, 2));
  CHECK(count_2q(c) == 3);
}

TEST_CASE("isolated vertices still get both single-qubit layers") {
  ProblemGraph g;
  g.n = 3;
  g.edges = {{0, 1}};
  const Circuit c = build_qaoa(g);
  CHECK(c.gates.size() == 3 + 1 + 3);
  CHECK(c.gates[2] == Gate::h(2));
  CHECK(c.gates.back() == Gate::rx(1.4, 2));
}

#include "swapnet/qaoa.hpp"

#include <stdexcept>

namespace swapnet {

Circuit build_qaoa(const ProblemGraph& g, const QaoaParams& params) {
  if (g.n < 2) throw std::invalid_argument("build_qaoa: need at least 2 qubits");
  Circuit c{g.n, Level::abstract, {}};
  c.gates.reserve(2 * g.n + g.edges.size());
  for (int q = 0; q < g.n; ++q) c.gates.push_back(Gate::h(q));
  for (auto [a, b] : g.edges) c.gates.push_back(Gate::zz(2 * params.gamma, a, b));
  for (int q = 0; q < g.n; ++q) c.gates.push_back(Gate::rx(2 * params.beta, q));
  return c;
}

}  // namespace swapnet

#pragma once

#include "swapnet/circuit.hpp"
#include "swapnet/graph.hpp"

namespace swapnet {

// Single-layer ansatz parameters. Gamma weights the interaction layer, beta
// the mixer. Defaults are arbitrary nonzero values so no rotation optimizes
// away in benchmarks.
struct QaoaParams {
  double gamma = 0.4;
  double beta = 0.7;
};

// H on every qubit, ZZ(2*gamma) per edge in sorted edge order, RX(2*beta) on
// every qubit. Abstract level; width = g.n.
Circuit build_qaoa(const ProblemGraph& g, const QaoaParams& params = {});

}  // namespace swapnet

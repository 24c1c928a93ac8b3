#pragma once

#include <vector>

#include "swapnet/circuit.hpp"
#include "swapnet/strategy.hpp"
#include "swapnet/topology.hpp"

namespace swapnet {

// Bijection between logical circuit qubits and physical map qubits. Both
// directions kept in sync; size is the physical qubit count (logical indices
// at or above the circuit width are padding).
struct Mapping {
  std::vector<int> log_to_phys;
  std::vector<int> phys_to_log;

  static Mapping identity(int n);
  void apply_swap(int phys_a, int phys_b);  // swap the logicals at two sites
  bool operator==(const Mapping&) const = default;
};

struct RouteResult {
  Circuit circuit;  // physical-operand circuit, width = map size
  Mapping initial;
  Mapping final;
};

// Commutation-aware deterministic routing for single-layer ansatz circuits
// (an H layer, a bag of mutually commuting ZZ terms, an RX layer): emit every
// pending ZZ whose endpoints are currently coupled, then apply the next
// cyclic swap layer, stopping as soon as the bag empties. Starts from the
// identity mapping. Swap-layer entries whose endpoints both hold padding
// logicals are dropped. Throws std::invalid_argument when the circuit is not
// in ansatz form or wider than the map, std::runtime_error when terms remain
// past the strategy's full-connectivity horizon.
RouteResult route_shuffle(const Circuit& c, const SwapStrategy& s);

}  // namespace swapnet

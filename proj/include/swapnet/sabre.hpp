#pragma once

#include <cstdint>
#include <optional>

#include "swapnet/route.hpp"

namespace swapnet {

// Heuristic router settings. The cost of a candidate swap is
//   (sum of front-layer distances + lookahead_weight / |E| * sum over the
//    extended set E of up to lookahead_size upcoming two-qubit gates)
// scaled by the larger decay multiplier of the swapped qubits; decays grow by
// decay_increment per swap and reset on gate execution or every
// decay_reset_interval consecutive swaps. Ties break by seeded randomness.
struct SabreParams {
  int lookahead_size = 20;
  double lookahead_weight = 0.5;
  double decay_increment = 0.001;
  int decay_reset_interval = 5;
  std::uint64_t seed = 0;
};

// Routes gate by gate from `start` (identity when absent): executes every
// front-layer gate whose operands are coupled, otherwise inserts the
// cheapest candidate swap (a coupled pair touching a front-layer operand).
// Throws std::runtime_error when n^2 consecutive swaps execute no gate.
RouteResult route_sabre(const Circuit& c, const CouplingMap& m, const SabreParams& p,
                        const std::optional<Mapping>& start = std::nullopt);

// One forward pass from the identity mapping, then one pass over the
// reversed circuit starting from the first pass's final mapping; returns the
// second pass's final mapping for use as route_sabre's start.
Mapping sabre_initial_mapping(const Circuit& c, const CouplingMap& m, const SabreParams& p);

}  // namespace swapnet

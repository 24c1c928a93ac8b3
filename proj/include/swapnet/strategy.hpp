#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swapnet/topology.hpp"

namespace swapnet {

// One set of disjoint physical swaps executed simultaneously; every pair must
// be coupled in the strategy's map.
struct SwapLayer {
  std::vector<std::pair<int, int>> swaps;
};

// Deterministic full-shuffle schedule: the layer list is applied cyclically
// and guarantees every logical pair becomes coupled at some step.
// bound_layers is the closed-form layer bound used as a simulation horizon.
struct SwapStrategy {
  CouplingMap map;
  std::vector<SwapLayer> layers;
  long long bound_layers = 0;
};

// Two alternating layers over (i,i+1) edges split by parity of i; reaches
// full connectivity in exactly n-2 layers.
SwapStrategy strategy_line(int n);

// One macro-round applied cyclically: side-1 row layers alternating between
// the two row parities, then the two column layers. Reaches full
// connectivity within ceil((side-2)(side+1)/2) macro-rounds (during the
// first round when side = 2).
SwapStrategy strategy_grid(int side);

// Two alternating layers: all inter-bus point-to-point swaps, then half-column
// swaps within every bus except the last. Reaches full connectivity in
// exactly (4B-5)*ceil(B/(B+1)) layers.
SwapStrategy strategy_busnnn(int buses, int bus_size);

// Simulates the cyclic layers from the identity mapping and returns the first
// layer count after which every unordered logical pair has been coupled.
// Throws std::runtime_error when not reached within 4x the strategy bound.
int full_connectivity_layers(const SwapStrategy& s);

// Closed-form swap totals to full connectivity. l_swap takes the line length;
// g_swap takes the total grid qubit count (side = ceil(sqrt(total)));
// b_swap takes total qubit count and bus size. The grid and bus forms are
// upper bounds / baseline-design counts, not per-instance tallies.
long long l_swap(long long n);
long long g_swap(long long total_qubits);
long long b_swap(long long total_qubits, long long bus_size);

// Numbered layers, one per line: "k: (a,b) (c,d) ...".
std::string dump_strategy(const SwapStrategy& s);

}  // namespace swapnet

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace swapnet {

// Simple undirected graph: vertices 0..n-1, deduplicated edges stored with
// i < j, sorted lexicographically.
struct ProblemGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const ProblemGraph&) const = default;
};

// Uniform graph with exactly m edges drawn without replacement from all pairs.
ProblemGraph gen_er(int n, int m, std::uint64_t seed);

// d-regular simple connected graph via the pairing model; whole pairings with
// self-loops or multi-edges are rejected, disconnected results retried.
// Throws std::invalid_argument when n*d is odd or d >= n, std::runtime_error
// when the retry budget (1000 attempts) is exhausted.
ProblemGraph gen_regular(int n, int d, std::uint64_t seed);

// Small-world graph: ring lattice with k=4 (two neighbors per side), each
// original edge rewired once with probability 1/2, first endpoint kept, new
// target uniform over non-adjacent vertices; skipped when no target exists.
ProblemGraph gen_ws(int n, std::uint64_t seed);

// Preferential-attachment graph: star seed on ceil(n/4+1) vertices (center 0),
// then ceil(3n/4-1) new vertices each attaching ceil(n/4) distinct edges with
// probability proportional to current degree (weights frozen per new vertex).
// Resulting vertex count follows those formulas exactly, which overshoots the
// request by one when n mod 4 != 0.
ProblemGraph gen_ba(int n, std::uint64_t seed);

// Complete graph K_n.
ProblemGraph gen_sk(int n);

// 2M / (N(N-1)): fraction of present edges; 1.0 for complete graphs.
double density(const ProblemGraph& g);

// Text format: first line "n m", then m lines "i j" with i < j.
std::string to_edge_list(const ProblemGraph& g);
ProblemGraph parse_edge_list(const std::string& text);

}  // namespace swapnet

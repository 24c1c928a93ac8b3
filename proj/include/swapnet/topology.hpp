#pragma once

#include <string>
#include <utility>
#include <vector>

namespace swapnet {

// Hardware connectivity: point-to-point couplers plus optional buses. A bus
// couples every pair of its qubits through one shared resource that executes
// a single two-qubit gate at a time (enforced by the scheduler; for routing
// purposes a bus is a clique).
struct CouplingMap {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<std::vector<int>> buses;     // disjoint qubit sets

  bool edge_coupled(int a, int b) const;
  int bus_of(int q) const;  // index into buses, -1 when q is on none
  bool coupled(int a, int b) const;

  std::vector<int> bus_index;  // built by finalize_map
};

// Normalizes edges, checks invariants, fills bus_index. Builders call this;
// call it after hand-constructing a map.
void finalize_map(CouplingMap& m);

CouplingMap build_line(int n);
CouplingMap build_grid(int side);                       // side x side lattice, row-major
CouplingMap build_heavy_hex(int hex_rows, int hex_cols);
CouplingMap build_sycamore(int qubits);                 // 18, 23, 36, 54 or 72
CouplingMap build_aspen(int octagon_rows, int octagon_cols);
CouplingMap build_layered_sycamore();                   // two 72q layers + vertical links
CouplingMap build_busnnn(int buses, int bus_size);
CouplingMap build_complete(int n);                      // all-to-all point-to-point

// 2 * (#coupled pairs) / n, where coupled pairs include within-bus pairs.
double avg_connectivity(const CouplingMap& m);

bool map_connected(const CouplingMap& m);

// All-pairs shortest hop counts over edges plus bus cliques. distances() runs
// one BFS per source in parallel; distances_serial is the reference kept for
// equivalence testing.
std::vector<std::vector<int>> distances(const CouplingMap& m);
std::vector<std::vector<int>> distances_serial(const CouplingMap& m);

// Text format: "n <count>", then "edge i j" and "bus i1 i2 ... ik" lines.
std::string to_text(const CouplingMap& m);
CouplingMap parse_coupling_map(const std::string& text);

}  // namespace swapnet

#include "swapnet/topology.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace swapnet {

namespace {

std::pair<int, int> canon(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<std::vector<int>> adjacency(const CouplingMap& m) {
  std::vector<std::vector<int>> adj(m.n);
  for (auto [a, b] : m.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& bus : m.buses)
    for (std::size_t i = 0; i < bus.size(); ++i)
      for (std::size_t j = i + 1; j < bus.size(); ++j) {
        adj[bus[i]].push_back(bus[j]);
        adj[bus[j]].push_back(bus[i]);
      }
  return adj;
}

void bfs_row(const std::vector<std::vector<int>>& adj, int src, std::vector<int>& row) {
  std::fill(row.begin(), row.end(), -1);
  row[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (row[w] < 0) {
        row[w] = row[v] + 1;
        q.push(w);
      }
  }
}

}  // namespace

void finalize_map(CouplingMap& m) {
  for (auto& e : m.edges) e = canon(e.first, e.second);
  std::sort(m.edges.begin(), m.edges.end());
  m.edges.erase(std::unique(m.edges.begin(), m.edges.end()), m.edges.end());
  m.bus_index.assign(m.n, -1);
  for (std::size_t k = 0; k < m.buses.size(); ++k) {
    auto& bus = m.buses[k];
    std::sort(bus.begin(), bus.end());
    for (int q : bus) {
      if (q < 0 || q >= m.n) throw std::invalid_argument("bus qubit out of range");
      if (m.bus_index[q] != -1) throw std::invalid_argument("buses must be disjoint");
      m.bus_index[q] = static_cast<int>(k);
    }
  }
  for (auto [a, b] : m.edges) {
    if (a < 0 || b < 0 || a >= m.n || b >= m.n || a == b)
      throw std::invalid_argument("edge endpoint out of range");
    if (m.bus_index[a] != -1 && m.bus_index[a] == m.bus_index[b])
      throw std::invalid_argument("edge duplicates a within-bus coupling");
  }
}

bool CouplingMap::edge_coupled(int a, int b) const {
  return std::binary_search(edges.begin(), edges.end(), canon(a, b));
}

int CouplingMap::bus_of(int q) const { return bus_index.empty() ? -1 : bus_index[q]; }

bool CouplingMap::coupled(int a, int b) const {
  if (a == b) return false;
  const int ba = bus_of(a);
  if (ba != -1 && ba == bus_of(b)) return true;
  return edge_coupled(a, b);
}

CouplingMap build_line(int n) {
  if (n < 1) throw std::invalid_argument("build_line: need n >= 1");
  CouplingMap m{.n = n};
  for (int i = 0; i + 1 < n; ++i) m.edges.emplace_back(i, i + 1);
  finalize_map(m);
  return m;
}

CouplingMap build_grid(int side) {
  if (side < 1) throw std::invalid_argument("build_grid: need side >= 1");
  CouplingMap m{.n = side * side};
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      const int q = r * side + c;
      if (c + 1 < side) m.edges.emplace_back(q, q + 1);
      if (r + 1 < side) m.edges.emplace_back(q, q + side);
    }
  finalize_map(m);
  return m;
}

// Hexagon tiling with a qubit on every vertex and every edge midpoint: long
// qubit rows joined by bridge qubits. Row extents and bridge offsets follow
// the tiling boundary; (6,3) reproduces the 127-qubit device shape.
CouplingMap build_heavy_hex(int hex_rows, int hex_cols) {
  if (hex_rows < 1 || hex_cols < 1)
    throw std::invalid_argument("build_heavy_hex: need positive tile counts");
  const int R = hex_rows, C = hex_cols;
  // Column span [first, last] of each qubit row r in 0..R.
  auto row_span = [&](int r) -> std::pair<int, int> {
    if (R == 1) return {0, 4 * C};
    if (r == 0) return {0, 4 * C + 1};
    if (r == R) return ((R - 1) % 2 == 1) ? std::pair{1, 4 * C + 2} : std::pair{0, 4 * C + 1};
    return {0, 4 * C + 2};
  };
  CouplingMap m;
  std::vector<std::vector<int>> id(R + 1);  // id[r][col - first] = qubit index
  int next = 0;
  for (int r = 0; r <= R; ++r) {
    auto [lo, hi] = row_span(r);
    id[r].resize(hi - lo + 1);
    for (int c = lo; c <= hi; ++c) id[r][c - lo] = next++;
    for (int c = lo; c < hi; ++c)
      m.edges.emplace_back(id[r][c - lo], id[r][c - lo + 1]);
  }
  for (int gap = 0; gap < R; ++gap) {
    const int start = (R == 1 || gap % 2 == 0) ? 0 : 2;
    for (int pos = start; pos <= start + 4 * C; pos += 4) {
      auto [lo_a, hi_a] = row_span(gap);
      auto [lo_b, hi_b] = row_span(gap + 1);
      if (pos < lo_a || pos > hi_a || pos < lo_b || pos > hi_b) continue;
      const int bridge = next++;
      m.edges.emplace_back(id[gap][pos - lo_a], bridge);
      m.edges.emplace_back(bridge, id[gap + 1][pos - lo_b]);
    }
  }
  m.n = next;
  finalize_map(m);
  return m;
}

// Diagonal square lattice arranged in staggered columns. Even columns sit on
// integer vertical positions, odd columns half a step lower; each qubit links
// to the vertically nearest one or two qubits of the neighboring columns.
CouplingMap build_sycamore(int qubits) {
  std::vector<int> heights;
  if (qubits == 23) {
    for (int c = 0; c < 9; ++c) heights.push_back(c % 2 == 0 ? 3 : 2);
  } else if (qubits == 18 || qubits == 36 || qubits == 54 || qubits == 72) {
    heights.assign(qubits / 6, 6);
  } else {
    throw std::invalid_argument("build_sycamore: supported sizes are 18, 23, 36, 54, 72");
  }
  CouplingMap m;
  std::vector<int> col_base(heights.size() + 1, 0);
  for (std::size_t c = 0; c < heights.size(); ++c) col_base[c + 1] = col_base[c] + heights[c];
  m.n = col_base.back();
  for (std::size_t c = 0; c + 1 < heights.size(); ++c) {
    for (int i = 0; i < heights[c]; ++i) {
      // Next-column partners at vertical offsets -1/0 (even column) or 0/+1
      // (odd column) in next-column indexing.
      const int lo = (c % 2 == 0) ? i - 1 : i;
      for (int j = lo; j <= lo + 1; ++j)
        if (j >= 0 && j < heights[c + 1])
          m.edges.emplace_back(col_base[c] + i, col_base[c + 1] + j);
    }
  }
  finalize_map(m);
  return m;
}

// Octagon rings tiled on a grid. Couplers (two per adjacent pair) follow the
// boustrophedon order of the grid, closing into a ring of octagons when more
// than two tiles exist; every consecutive pair is grid-adjacent. The (2,5)
// instance hits 80 qubits with average degree exactly 2.5.
CouplingMap build_aspen(int octagon_rows, int octagon_cols) {
  if (octagon_rows < 1 || octagon_cols < 1)
    throw std::invalid_argument("build_aspen: need positive tile counts");
  const int k = octagon_rows * octagon_cols;
  CouplingMap m{.n = 8 * k};
  for (int o = 0; o < k; ++o)
    for (int i = 0; i < 8; ++i) m.edges.emplace_back(8 * o + i, 8 * o + (i + 1) % 8);
  auto couple = [&](int a, int b) {
    m.edges.emplace_back(8 * a + 1, 8 * b + 6);
    m.edges.emplace_back(8 * a + 2, 8 * b + 5);
  };
  for (int o = 0; o + 1 < k; ++o) couple(o, o + 1);
  if (k > 2) couple(k - 1, 0);
  finalize_map(m);
  return m;
}

CouplingMap build_layered_sycamore() {
  const CouplingMap layer = build_sycamore(72);
  CouplingMap m{.n = 144};
  m.edges = layer.edges;
  for (auto [a, b] : layer.edges) m.edges.emplace_back(a + 72, b + 72);
  for (int i = 0; i < 72; ++i) m.edges.emplace_back(i, i + 72);
  finalize_map(m);
  return m;
}

CouplingMap build_busnnn(int buses, int bus_size) {
  if (buses < 1 || bus_size < 2 || bus_size % 2 != 0)
    throw std::invalid_argument("build_busnnn: need buses >= 1 and even bus_size >= 2");
  CouplingMap m{.n = buses * bus_size};
  const int half = bus_size / 2;
  for (int k = 0; k < buses; ++k) {
    std::vector<int> bus(bus_size);
    for (int i = 0; i < bus_size; ++i) bus[i] = k * bus_size + i;
    m.buses.push_back(std::move(bus));
    if (k + 1 < buses)
      for (int j = 0; j < half; ++j)
        m.edges.emplace_back(k * bus_size + half + j, (k + 1) * bus_size + j);
  }
  finalize_map(m);
  return m;
}

CouplingMap build_complete(int n) {
  if (n < 1) throw std::invalid_argument("build_complete: need n >= 1");
  CouplingMap m{.n = n};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.edges.emplace_back(i, j);
  finalize_map(m);
  return m;
}

double avg_connectivity(const CouplingMap& m) {
  if (m.n == 0) return 0;
  std::size_t pairs = m.edges.size();
  for (const auto& bus : m.buses) pairs += bus.size() * (bus.size() - 1) / 2;
  return 2.0 * static_cast<double>(pairs) / m.n;
}

bool map_connected(const CouplingMap& m) {
  if (m.n == 0) return true;
  const auto adj = adjacency(m);
  std::vector<int> row(m.n);
  bfs_row(adj, 0, row);
  return std::none_of(row.begin(), row.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> distances_serial(const CouplingMap& m) {
  const auto adj = adjacency(m);
  std::vector<std::vector<int>> d(m.n, std::vector<int>(m.n));
  for (int src = 0; src < m.n; ++src) bfs_row(adj, src, d[src]);
  return d;
}

std::vector<std::vector<int>> distances(const CouplingMap& m) {
  const auto adj = adjacency(m);
  std::vector<std::vector<int>> d(m.n, std::vector<int>(m.n));
#pragma omp parallel for schedule(static)
  for (int src = 0; src < m.n; ++src) bfs_row(adj, src, d[src]);
  return d;
}

std::string to_text(const CouplingMap& m) {
  std::ostringstream out;
  out << "n " << m.n << '\n';
  for (auto [a, b] : m.edges) out << "edge " << a << ' ' << b << '\n';
  for (const auto& bus : m.buses) {
    out << "bus";
    for (int q : bus) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

CouplingMap parse_coupling_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CouplingMap m;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    auto fail = [&](const std::string& what) -> void {
      throw std::runtime_error("coupling map parse error at line " + std::to_string(lineno) +
                               ": " + what);
    };
    if (!have_header) {
      if (word != "n" || !(ls >> m.n) || m.n < 0) fail("expected 'n count'");
      have_header = true;
    } else if (word == "edge") {
      int a, b;
      if (!(ls >> a >> b)) fail("expected 'edge i j'");
      m.edges.emplace_back(a, b);
    } else if (word == "bus") {
      std::vector<int> bus;
      int q;
      while (ls >> q) bus.push_back(q);
      if (bus.size() < 2) fail("bus needs at least two qubits");
      m.buses.push_back(std::move(bus));
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (!have_header) throw std::runtime_error("coupling map parse error: missing header");
  finalize_map(m);
  return m;
}

}  // namespace swapnet

#include "swapnet/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "swapnet/prng.hpp"

namespace swapnet {

namespace {

std::pair<int, int> canon(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void finalize(ProblemGraph& g) {
  for (auto& e : g.edges) e = canon(e.first, e.second);
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

bool connected(const ProblemGraph& g) {
  if (g.n == 0) return true;
  std::vector<std::vector<int>> adj(g.n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n;
}

}  // namespace

ProblemGraph gen_er(int n, int m, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_er: negative n");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m) throw std::invalid_argument("gen_er: m out of range");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(max_m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Rng rng(seed);
  // Partial Fisher-Yates: the first m slots become the sample.
  for (int i = 0; i < m; ++i) {
    const std::size_t j = i + rng.below(pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
  }
  ProblemGraph g{n, {pairs.begin(), pairs.begin() + m}};
  finalize(g);
  return g;
}

ProblemGraph gen_regular(int n, int d, std::uint64_t seed) {
  if (d < 0 || d >= n) throw std::invalid_argument("gen_regular: need 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("gen_regular: n*d must be even");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    for (std::size_t i = 0; i + 1 < stubs.size(); ++i) {
      const std::size_t j = i + rng.below(stubs.size() - i);
      std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> used;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      const auto e = canon(stubs[i], stubs[i + 1]);
      if (e.first == e.second || !used.insert(e).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ProblemGraph g{n, {used.begin(), used.end()}};
    finalize(g);
    if (d == 0 ? n <= 1 : connected(g)) return g;
  }
  throw std::runtime_error("gen_regular: retry budget exhausted");
}

ProblemGraph gen_ws(int n, std::uint64_t seed) {
  if (n <= 4) throw std::invalid_argument("gen_ws: need n > 4");
  std::vector<std::pair<int, int>> ring;
  for (int off = 1; off <= 2; ++off)
    for (int i = 0; i < n; ++i) ring.push_back(canon(i, (i + off) % n));
  std::set<std::pair<int, int>> present(ring.begin(), ring.end());
  Rng rng(seed);
  for (auto edge : ring) {
    if (rng.unit() >= 0.5) continue;
    const int i = edge.first;
    std::vector<int> targets;
    for (int k = 0; k < n; ++k)
      if (k != i && !present.count(canon(i, k))) targets.push_back(k);
    if (targets.empty()) continue;
    const int k = targets[rng.below(targets.size())];
    present.erase(edge);
    present.insert(canon(i, k));
  }
  ProblemGraph g{n, {present.begin(), present.end()}};
  finalize(g);
  return g;
}

ProblemGraph gen_ba(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_ba: need n >= 4");
  const int star = (n + 4 + 3) / 4;          // ceil(n/4 + 1)
  const int added = (3 * n - 4 + 3) / 4;     // ceil(3n/4 - 1)
  const int m = (n + 3) / 4;                 // ceil(n/4)
  ProblemGraph g{star + added, {}};
  std::vector<int> repeated;  // vertex v appears deg(v) times
  for (int leaf = 1; leaf < star; ++leaf) {
    g.edges.emplace_back(0, leaf);
    repeated.push_back(0);
    repeated.push_back(leaf);
  }
  Rng rng(seed);
  for (int v = star; v < star + added; ++v) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m)
      targets.insert(repeated[rng.below(repeated.size())]);
    for (int t : targets) {
      g.edges.push_back(canon(v, t));
      repeated.push_back(v);
      repeated.push_back(t);
    }
  }
  finalize(g);
  return g;
}

ProblemGraph gen_sk(int n) {
  if (n < 2) throw std::invalid_argument("gen_sk: need n >= 2");
  ProblemGraph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

double density(const ProblemGraph& g) {
  if (g.n < 2) throw std::invalid_argument("density: need n >= 2");
  return 2.0 * static_cast<double>(g.edges.size()) /
         (static_cast<double>(g.n) * (g.n - 1));
}

std::string to_edge_list(const ProblemGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [a, b] : g.edges) out << a << ' ' << b << '\n';
  return out.str();
}

ProblemGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  ProblemGraph g;
  std::size_t m = 0;
  if (!(in >> g.n >> m)) throw std::runtime_error("edge list: bad header");
  g.edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    int a, b;
    if (!(in >> a >> b)) throw std::runtime_error("edge list: truncated");
    if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
      throw std::runtime_error("edge list: bad edge");
    g.edges.push_back(canon(a, b));
  }
  finalize(g);
  if (g.edges.size() != m) throw std::runtime_error("edge list: duplicate edge");
  return g;
}

}  // namespace swapnet

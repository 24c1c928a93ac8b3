#include "swapnet/optimize.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace swapnet {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double normalize_angle(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta > std::numbers::pi) theta -= kTwoPi;
  if (theta <= -std::numbers::pi) theta += kTwoPi;
  return theta;
}

bool same_pair(const Gate& a, const Gate& b) {
  return (a.q0 == b.q0 && a.q1 == b.q1) || (a.q0 == b.q1 && a.q1 == b.q0);
}

// One rewrite sweep. Returns true when anything changed.
bool sweep(std::vector<Gate>& gates, int width) {
  const int m = static_cast<int>(gates.size());
  std::vector<int> next_on(static_cast<std::size_t>(m) * 2, -1);
  std::vector<int> last(width, -1);
  std::vector<std::pair<int, int>> slot(m);  // (gate, operand slot) of last use
  auto chain = [&](int q, int v, int s) {
    if (last[q] >= 0) next_on[slot[q].first * 2 + slot[q].second] = v;
    last[q] = v;
    slot[q] = {v, s};
  };
  for (int v = 0; v < m; ++v) {
    chain(gates[v].q0, v, 0);
    if (gates[v].two_qubit()) chain(gates[v].q1, v, 1);
  }

  std::vector<char> dead(m, 0);
  bool changed = false;
  for (int v = 0; v < m; ++v) {
    if (dead[v]) continue;
    Gate& g = gates[v];
    if (g.kind == GateKind::RZ || g.kind == GateKind::RX) {
      const int w = next_on[v * 2];
      if (w >= 0 && !dead[w] && gates[w].kind == g.kind) {
        g.theta = normalize_angle(g.theta + gates[w].theta);
        dead[w] = 1;
        next_on[v * 2] = next_on[w * 2];
        if (std::abs(g.theta) < 1e-12) dead[v] = 1;
        changed = true;
      }
      continue;
    }
    if (!g.two_qubit()) continue;
    const int w0 = next_on[v * 2], w1 = next_on[v * 2 + 1];
    if (w0 < 0 || w0 != w1 || dead[w0]) continue;
    const Gate& h = gates[w0];
    if (g.kind == GateKind::CNOT && h.kind == GateKind::CNOT && g.q0 == h.q0 && g.q1 == h.q1) {
      dead[v] = dead[w0] = 1;
      changed = true;
    } else if (g.kind == GateKind::SWAP && h.kind == GateKind::SWAP && same_pair(g, h)) {
      dead[v] = dead[w0] = 1;
      changed = true;
    } else if (g.kind == GateKind::SWAP && h.kind == GateKind::CNOT && same_pair(g, h)) {
      // [swap, cnot(x,y)] = [cnot(x,y), cnot(y,x)]
      const Gate c = h;
      g = c;
      gates[w0] = Gate::cnot(c.q1, c.q0);
      changed = true;
    } else if (g.kind == GateKind::CNOT && h.kind == GateKind::SWAP && same_pair(g, h)) {
      // [cnot(x,y), swap] = [cnot(y,x), cnot(x,y)]
      const Gate c = g;
      g = Gate::cnot(c.q1, c.q0);
      gates[w0] = c;
      changed = true;
    }
  }
  if (changed) {
    std::vector<Gate> kept;
    kept.reserve(gates.size());
    for (int v = 0; v < m; ++v)
      if (!dead[v]) kept.push_back(gates[v]);
    gates.swap(kept);
  }
  return changed;
}

}  // namespace

Circuit peephole(const Circuit& c) {
  Circuit out = c;
  while (sweep(out.gates, out.width)) {
  }
  return out;
}

}  // namespace swapnet

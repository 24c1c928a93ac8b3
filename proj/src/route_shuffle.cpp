#include "swapnet/route.hpp"

#include <numeric>
#include <stdexcept>

namespace swapnet {

Mapping Mapping::identity(int n) {
  Mapping m;
  m.log_to_phys.resize(n);
  m.phys_to_log.resize(n);
  std::iota(m.log_to_phys.begin(), m.log_to_phys.end(), 0);
  std::iota(m.phys_to_log.begin(), m.phys_to_log.end(), 0);
  return m;
}

void Mapping::apply_swap(int phys_a, int phys_b) {
  std::swap(phys_to_log[phys_a], phys_to_log[phys_b]);
  log_to_phys[phys_to_log[phys_a]] = phys_a;
  log_to_phys[phys_to_log[phys_b]] = phys_b;
}

namespace {

// Splits an ansatz circuit into its H set, ZZ terms, and RX set, rejecting
// anything else.
struct AnsatzParts {
  std::vector<int> h;
  std::vector<Gate> zz;
  std::vector<Gate> rx;
};

AnsatzParts split_ansatz(const Circuit& c) {
  AnsatzParts parts;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        if (!parts.zz.empty() || !parts.rx.empty())
          throw std::invalid_argument("route_shuffle: H after interaction layer");
        parts.h.push_back(g.q0);
        break;
      case GateKind::ZZ:
        if (!parts.rx.empty())
          throw std::invalid_argument("route_shuffle: ZZ after mixer layer");
        parts.zz.push_back(g);
        break;
      case GateKind::RX:
        parts.rx.push_back(g);
        break;
      default:
        throw std::invalid_argument("route_shuffle: circuit is not in ansatz form");
    }
  }
  return parts;
}

}  // namespace

RouteResult route_shuffle(const Circuit& c, const SwapStrategy& s) {
  const CouplingMap& m = s.map;
  if (c.width > m.n) throw std::invalid_argument("route_shuffle: circuit wider than the map");
  validate(c);
  const AnsatzParts parts = split_ansatz(c);

  RouteResult res;
  res.circuit.width = m.n;
  res.initial = Mapping::identity(m.n);
  Mapping cur = res.initial;

  for (int q : parts.h) res.circuit.gates.push_back(Gate::h(cur.log_to_phys[q]));

  std::vector<char> done(parts.zz.size(), 0);
  std::size_t remaining = parts.zz.size();
  auto emit_ready = [&] {
    for (std::size_t i = 0; i < parts.zz.size(); ++i) {
      if (done[i]) continue;
      const Gate& g = parts.zz[i];
      const int a = cur.log_to_phys[g.q0], b = cur.log_to_phys[g.q1];
      if (m.coupled(a, b)) {
        res.circuit.gates.push_back(Gate::zz(g.theta, a, b));
        done[i] = 1;
        --remaining;
      }
    }
  };

  emit_ready();
  const long long horizon =
      remaining == 0 ? 0 : full_connectivity_layers(s);
  for (long long step = 0; remaining > 0; ++step) {
    if (step >= horizon)
      throw std::runtime_error("route_shuffle: terms remain past the full-connectivity horizon");
    for (auto [a, b] : s.layers[step % s.layers.size()].swaps) {
      // A swap moving only padding logicals does no work; skip it.
      if (cur.phys_to_log[a] >= c.width && cur.phys_to_log[b] >= c.width) continue;
      res.circuit.gates.push_back(Gate::swap(a, b));
      cur.apply_swap(a, b);
    }
    emit_ready();
  }

  for (const Gate& g : parts.rx)
    res.circuit.gates.push_back(Gate::rx(g.theta, cur.log_to_phys[g.q0]));
  res.final = cur;
  return res;
}

}  // namespace swapnet

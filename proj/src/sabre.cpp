#include "swapnet/sabre.hpp"

#include <algorithm>
#include <stdexcept>

#include "swapnet/prng.hpp"

namespace swapnet {

namespace {

// All physical pairs a swap may act on: point-to-point edges plus every
// within-bus pair.
std::vector<std::pair<int, int>> swappable_pairs(const CouplingMap& m) {
  auto pairs = m.edges;
  for (const auto& bus : m.buses)
    for (std::size_t i = 0; i < bus.size(); ++i)
      for (std::size_t j = i + 1; j < bus.size(); ++j) pairs.emplace_back(bus[i], bus[j]);
  return pairs;
}

struct Pass {
  const Circuit& c;
  const CouplingMap& m;
  const SabreParams& p;
  const std::vector<std::vector<int>>& dist;
  const std::vector<std::pair<int, int>>& pairs;
  Rng& rng;
  Circuit* out;  // nullptr for mapping-only passes

  Mapping run(const std::vector<int>& order, Mapping mapping) const {
    const DepDag dag = to_dag_ordered(order);
    const int ngates = static_cast<int>(order.size());
    std::vector<int> unmet(ngates, 0);
    std::vector<char> done(ngates, 0);
    std::vector<int> front;
    for (int v = 0; v < ngates; ++v) {
      unmet[v] = static_cast<int>(dag.pred[v].size());
      if (unmet[v] == 0) front.push_back(v);
    }
    std::vector<double> decay(m.n, 1.0);
    int swaps_since_reset = 0;
    long long stall = 0;
    const long long stall_limit = static_cast<long long>(m.n) * m.n;
    int executed = 0;
    while (executed < ngates) {
      bool progress = false;
      for (std::size_t i = 0; i < front.size();) {
        const int v = front[i];
        const Gate& g = c.gates[order[v]];
        const bool ready = !g.two_qubit() ||
                           m.coupled(mapping.log_to_phys[g.q0], mapping.log_to_phys[g.q1]);
        if (!ready) {
          ++i;
          continue;
        }
        emit(g, mapping);
        done[v] = 1;
        front[i] = front.back();
        front.pop_back();
        for (int w : dag.succ[v])
          if (--unmet[w] == 0) front.push_back(w);
        ++executed;
        progress = true;
      }
      if (progress) {
        std::fill(decay.begin(), decay.end(), 1.0);
        swaps_since_reset = 0;
        stall = 0;
        continue;
      }
      if (++stall > stall_limit)
        throw std::runtime_error("route_sabre: no progress (disconnected map?)");
      const auto swap_pair = pick_swap(front, order, done, mapping, decay);
      if (out) out->gates.push_back(Gate::swap(swap_pair.first, swap_pair.second));
      mapping.apply_swap(swap_pair.first, swap_pair.second);
      decay[swap_pair.first] += p.decay_increment;
      decay[swap_pair.second] += p.decay_increment;
      if (++swaps_since_reset >= p.decay_reset_interval) {
        std::fill(decay.begin(), decay.end(), 1.0);
        swaps_since_reset = 0;
      }
    }
    return mapping;
  }

 private:
  // DAG over positions in `order` (a forward or reversed view of the gates).
  DepDag to_dag_ordered(const std::vector<int>& order) const {
    Circuit view{c.width, Level::abstract, {}};
    view.gates.reserve(order.size());
    for (int idx : order) view.gates.push_back(c.gates[idx]);
    return to_dag(view);
  }

  void emit(const Gate& g, const Mapping& mapping) const {
    if (!out) return;
    Gate mapped = g;
    mapped.q0 = mapping.log_to_phys[g.q0];
    if (g.two_qubit()) mapped.q1 = mapping.log_to_phys[g.q1];
    out->gates.push_back(mapped);
  }

  std::pair<int, int> pick_swap(const std::vector<int>& front, const std::vector<int>& order,
                                const std::vector<char>& done, const Mapping& mapping,
                                const std::vector<double>& decay) const {
    std::vector<char> active(m.n, 0);
    std::vector<std::pair<int, int>> front_terms;
    int first_blocked = -1;
    for (int v : front) {
      const Gate& g = c.gates[order[v]];
      if (!g.two_qubit()) continue;
      front_terms.emplace_back(g.q0, g.q1);
      active[mapping.log_to_phys[g.q0]] = 1;
      active[mapping.log_to_phys[g.q1]] = 1;
      if (first_blocked < 0 || v < first_blocked) first_blocked = v;
    }
    // Extended set: the next two-qubit gates after the earliest blocked one,
    // front gates excluded.
    std::vector<char> in_front(order.size(), 0);
    for (int v : front) in_front[v] = 1;
    std::vector<std::pair<int, int>> extended;
    for (std::size_t v = first_blocked; v < order.size(); ++v) {
      if (static_cast<int>(extended.size()) >= p.lookahead_size) break;
      const Gate& g = c.gates[order[v]];
      if (!g.two_qubit() || in_front[v] || done[v]) continue;
      extended.emplace_back(g.q0, g.q1);
    }
    double best = 0;
    std::vector<std::pair<int, int>> best_pairs;
    for (auto [a, b] : pairs) {
      if (!active[a] && !active[b]) continue;
      Mapping trial = mapping;
      trial.apply_swap(a, b);
      double cost = 0;
      for (auto [la, lb] : front_terms)
        cost += dist[trial.log_to_phys[la]][trial.log_to_phys[lb]];
      if (!extended.empty()) {
        double ahead = 0;
        for (auto [la, lb] : extended)
          ahead += dist[trial.log_to_phys[la]][trial.log_to_phys[lb]];
        cost += p.lookahead_weight * ahead / static_cast<double>(extended.size());
      }
      cost *= std::max(decay[a], decay[b]);
      if (best_pairs.empty() || cost < best - 1e-12) {
        best = cost;
        best_pairs = {{a, b}};
      } else if (cost <= best + 1e-12) {
        best_pairs.emplace_back(a, b);
      }
    }
    if (best_pairs.empty())
      throw std::runtime_error("route_sabre: blocked front layer with no candidate swap");
    return best_pairs[rng.below(best_pairs.size())];
  }
};

std::vector<int> forward_order(std::size_t n) {
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  return order;
}

}  // namespace

RouteResult route_sabre(const Circuit& c, const CouplingMap& m, const SabreParams& p,
                        const std::optional<Mapping>& start) {
  if (c.width > m.n) throw std::invalid_argument("route_sabre: circuit wider than the map");
  validate(c);
  const auto dist = distances(m);
  const auto pairs = swappable_pairs(m);
  Rng rng(p.seed);
  RouteResult res;
  res.initial = start.value_or(Mapping::identity(m.n));
  if (static_cast<int>(res.initial.log_to_phys.size()) != m.n)
    throw std::invalid_argument("route_sabre: start mapping size mismatch");
  res.circuit.width = m.n;
  res.circuit.level = Level::abstract;  // inserted SWAPs are abstract-only
  Pass pass{c, m, p, dist, pairs, rng, &res.circuit};
  res.final = pass.run(forward_order(c.gates.size()), res.initial);
  return res;
}

Mapping sabre_initial_mapping(const Circuit& c, const CouplingMap& m, const SabreParams& p) {
  if (c.width > m.n)
    throw std::invalid_argument("sabre_initial_mapping: circuit wider than the map");
  validate(c);
  const auto dist = distances(m);
  const auto pairs = swappable_pairs(m);
  Rng rng(p.seed);
  Pass pass{c, m, p, dist, pairs, rng, nullptr};
  auto order = forward_order(c.gates.size());
  Mapping mapping = pass.run(order, Mapping::identity(m.n));
  std::reverse(order.begin(), order.end());
  return pass.run(order, mapping);
}

}  // namespace swapnet

#include "swapnet/strategy.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace swapnet {

SwapStrategy strategy_line(int n) {
  SwapStrategy s;
  s.map = build_line(n);
  SwapLayer even, odd;
  for (int i = 0; i + 1 < n; i += 2) even.swaps.emplace_back(i, i + 1);
  for (int i = 1; i + 1 < n; i += 2) odd.swaps.emplace_back(i, i + 1);
  s.layers = {even, odd};
  s.bound_layers = std::max(0, n - 2);
  return s;
}

SwapStrategy strategy_grid(int side) {
  if (side < 2) throw std::invalid_argument("strategy_grid: need side >= 2");
  const int N = side;
  SwapLayer row[2], col[2];
  for (int r = 0; r < N; ++r)
    for (int pos = 0; pos + 1 < N; ++pos) {
      const int q = r * N + pos;
      // Row parity staggers which layer an even/odd position lands in.
      row[(pos % 2) ^ (r % 2)].swaps.emplace_back(q, q + 1);
    }
  for (int r = 0; r + 1 < N; ++r)
    for (int c = 0; c < N; ++c) col[r % 2].swaps.emplace_back(r * N + c, (r + 1) * N + c);
  SwapStrategy s;
  s.map = build_grid(N);
  for (int k = 0; k < N - 1; ++k) s.layers.push_back(row[k % 2]);
  s.layers.push_back(col[0]);
  s.layers.push_back(col[1]);
  const long long rounds = std::max<long long>(1, ((N - 2) * (N + 1) + 1) / 2);
  s.bound_layers = rounds * static_cast<long long>(s.layers.size());
  return s;
}

SwapStrategy strategy_busnnn(int buses, int bus_size) {
  SwapStrategy s;
  s.map = build_busnnn(buses, bus_size);
  if (buses == 1) {
    s.bound_layers = 0;
    return s;  // a single bus is already fully connected
  }
  SwapLayer inter, within;
  inter.swaps = s.map.edges;  // all inter-bus point-to-point pairs
  const int half = bus_size / 2;
  for (int bus = 1; bus < buses; ++bus)
    for (int q = half * (2 * bus - 1); q < bus_size * bus; ++q)
      within.swaps.emplace_back(q - half, q);
  s.layers = {inter, within};
  s.bound_layers = 4LL * buses - 5;
  return s;
}

int full_connectivity_layers(const SwapStrategy& s) {
  const int n = s.map.n;
  const auto& m = s.map;
  std::vector<char> met(static_cast<std::size_t>(n) * n, 0);
  long long missing = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<int> logical(n);
  std::iota(logical.begin(), logical.end(), 0);  // physical -> logical
  auto record = [&] {
    for (auto [a, b] : m.edges) {
      const int la = logical[a], lb = logical[b];
      char& flag = met[static_cast<std::size_t>(std::min(la, lb)) * n + std::max(la, lb)];
      if (!flag) {
        flag = 1;
        --missing;
      }
    }
    for (const auto& bus : m.buses)
      for (std::size_t i = 0; i < bus.size(); ++i)
        for (std::size_t j = i + 1; j < bus.size(); ++j) {
          const int la = logical[bus[i]], lb = logical[bus[j]];
          char& flag = met[static_cast<std::size_t>(std::min(la, lb)) * n + std::max(la, lb)];
          if (!flag) {
            flag = 1;
            --missing;
          }
        }
  };
  record();
  if (missing == 0) return 0;
  if (s.layers.empty()) throw std::runtime_error("full_connectivity_layers: no layers to apply");
  const long long horizon = std::max<long long>(4 * s.bound_layers, 1);
  for (long long step = 1; step <= horizon; ++step) {
    for (auto [a, b] : s.layers[(step - 1) % s.layers.size()].swaps)
      std::swap(logical[a], logical[b]);
    record();
    if (missing == 0) return static_cast<int>(step);
  }
  throw std::runtime_error("full_connectivity_layers: horizon exceeded");
}

long long l_swap(long long n) { return (n - 1) * (n - 2) / 2; }

long long g_swap(long long total_qubits) {
  const auto side = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(total_qubits))));
  auto ceil_div = [](long long a, long long b) { return (a + b - 1) / b; };
  if (side % 2 == 1)
    return side * (side + 1) * ceil_div(side, 2) * ceil_div(2 * side - 3, 4);
  return (side / 2 * (side + 1) * (side + 1) + 2 * side * ceil_div(2 * side - 3, 4)) *
         ceil_div(side, 2);
}

long long b_swap(long long total_qubits, long long bus_size) {
  auto ceil_div = [](long long a, long long b) { return (a + b - 1) / b; };
  const long long x = bus_size / 2 * ceil_div(total_qubits - bus_size, bus_size);
  return x * (x - 1);
}

std::string dump_strategy(const SwapStrategy& s) {
  std::ostringstream out;
  for (std::size_t k = 0; k < s.layers.size(); ++k) {
    out << k << ':';
    for (auto [a, b] : s.layers[k].swaps) out << " (" << a << ',' << b << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace swapnet

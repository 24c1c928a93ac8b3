#include "swapnet/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace swapnet {

void validate(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (g.q0 < 0 || g.q0 >= c.width) throw std::invalid_argument("gate operand out of range");
    if (g.two_qubit()) {
      if (g.q1 < 0 || g.q1 >= c.width) throw std::invalid_argument("gate operand out of range");
      if (g.q0 == g.q1) throw std::invalid_argument("two-qubit operands must differ");
    } else if (g.q1 != -1) {
      throw std::invalid_argument("single-qubit gate with second operand");
    }
    if (c.level == Level::lowered &&
        (g.kind == GateKind::H || g.kind == GateKind::SWAP || g.kind == GateKind::ZZ))
      throw std::invalid_argument("lowered circuit contains a non-lowered gate");
  }
}

DepDag to_dag(const Circuit& c) {
  const int m = static_cast<int>(c.gates.size());
  DepDag dag;
  dag.succ.resize(m);
  dag.pred.resize(m);
  std::vector<int> last(c.width, -1);
  for (int v = 0; v < m; ++v) {
    const Gate& g = c.gates[v];
    int prev[2] = {last[g.q0], g.two_qubit() ? last[g.q1] : -1};
    if (prev[0] == prev[1]) prev[1] = -1;  // both operands written by the same gate
    for (int u : prev)
      if (u >= 0) {
        dag.succ[u].push_back(v);
        dag.pred[v].push_back(u);
      }
    last[g.q0] = v;
    if (g.two_qubit()) last[g.q1] = v;
  }
  return dag;
}

int depth_2q(const Circuit& c) {
  // Longest 2q-weighted path via per-qubit running depths; equivalent to DAG
  // DP because dependencies are per-qubit chains.
  std::vector<int> depth(c.width, 0);
  int best = 0;
  for (const Gate& g : c.gates) {
    if (g.two_qubit()) {
      const int d = std::max(depth[g.q0], depth[g.q1]) + 1;
      depth[g.q0] = depth[g.q1] = d;
      best = std::max(best, d);
    }
  }
  return best;
}

int count_2q(const Circuit& c) {
  return static_cast<int>(
      std::count_if(c.gates.begin(), c.gates.end(), [](const Gate& g) { return g.two_qubit(); }));
}

Circuit lower(const Circuit& c) {
  constexpr double half_pi = std::numbers::pi / 2;
  Circuit out{c.width, Level::lowered, {}};
  out.gates.reserve(c.gates.size() * 3);
  for (const Gate& g : c.gates) {
    const int lo = std::min(g.q0, g.q1), hi = std::max(g.q0, g.q1);
    switch (g.kind) {
      case GateKind::H:
        out.gates.push_back(Gate::rz(half_pi, g.q0));
        out.gates.push_back(Gate::rx(half_pi, g.q0));
        out.gates.push_back(Gate::rz(half_pi, g.q0));
        break;
      case GateKind::ZZ:
        out.gates.push_back(Gate::cnot(lo, hi));
        out.gates.push_back(Gate::rz(g.theta, hi));
        out.gates.push_back(Gate::cnot(lo, hi));
        break;
      case GateKind::SWAP:
        out.gates.push_back(Gate::cnot(lo, hi));
        out.gates.push_back(Gate::cnot(hi, lo));
        out.gates.push_back(Gate::cnot(lo, hi));
        break;
      default:
        out.gates.push_back(g);
    }
  }
  return out;
}

namespace {

std::string fmt_angle(double theta) {
  // 17 significant digits: enough for an exact double round trip.
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", theta);
  return buf;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::runtime_error("circuit parse error at line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.width << '\n';
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: out << "h " << g.q0; break;
      case GateKind::RX: out << "rx " << fmt_angle(g.theta) << ' ' << g.q0; break;
      case GateKind::RZ: out << "rz " << fmt_angle(g.theta) << ' ' << g.q0; break;
      case GateKind::CNOT: out << "cnot " << g.q0 << ' ' << g.q1; break;
      case GateKind::SWAP: out << "swap " << g.q0 << ' ' << g.q1; break;
      case GateKind::ZZ: out << "zz " << fmt_angle(g.theta) << ' ' << g.q0 << ' ' << g.q1; break;
    }
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Circuit c;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (!have_header) {
      int n;
      if (word != "qubits" || !(ls >> n) || n < 0) parse_fail(lineno, "expected 'qubits N'");
      c.width = n;
      have_header = true;
      continue;
    }
    Gate g;
    if (word == "h") {
      if (!(ls >> g.q0)) parse_fail(lineno, "expected 'h q'");
      g = Gate::h(g.q0);
    } else if (word == "rx" || word == "rz") {
      double theta;
      int q;
      if (!(ls >> theta >> q)) parse_fail(lineno, "expected '" + word + " theta q'");
      g = word == "rx" ? Gate::rx(theta, q) : Gate::rz(theta, q);
    } else if (word == "cnot" || word == "swap") {
      int a, b;
      if (!(ls >> a >> b)) parse_fail(lineno, "expected '" + word + " a b'");
      g = word == "cnot" ? Gate::cnot(a, b) : Gate::swap(a, b);
    } else if (word == "zz") {
      double theta;
      int a, b;
      if (!(ls >> theta >> a >> b)) parse_fail(lineno, "expected 'zz theta a b'");
      g = Gate::zz(theta, a, b);
    } else {
      parse_fail(lineno, "unknown mnemonic '" + word + "'");
    }
    std::string rest;
    if (ls >> rest) parse_fail(lineno, "trailing input");
    if (g.q0 < 0 || g.q0 >= c.width || (g.two_qubit() && (g.q1 < 0 || g.q1 >= c.width)))
      parse_fail(lineno, "operand out of range");
    if (g.two_qubit() && g.q0 == g.q1) parse_fail(lineno, "operands must differ");
    c.gates.push_back(g);
  }
  if (!have_header) parse_fail(lineno, "missing 'qubits N' header");
  const bool all_lowered =
      !c.gates.empty() &&
      std::none_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
        return g.kind == GateKind::H || g.kind == GateKind::SWAP || g.kind == GateKind::ZZ;
      });
  c.level = all_lowered ? Level::lowered : Level::abstract;
  return c;
}

}  // namespace swapnet

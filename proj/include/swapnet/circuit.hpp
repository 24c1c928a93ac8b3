#pragma once

#include <string>
#include <vector>

namespace swapnet {

enum class GateKind { H, RX, RZ, CNOT, SWAP, ZZ };

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;       // second operand, -1 for single-qubit gates
  double theta = 0;  // radians, RX/RZ/ZZ only

  static Gate h(int q) { return {GateKind::H, q, -1, 0}; }
  static Gate rx(double theta, int q) { return {GateKind::RX, q, -1, theta}; }
  static Gate rz(double theta, int q) { return {GateKind::RZ, q, -1, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, 0}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b, 0}; }
  static Gate zz(double theta, int a, int b) { return {GateKind::ZZ, a, b, theta}; }

  bool two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::SWAP || kind == GateKind::ZZ;
  }
  bool operator==(const Gate&) const = default;
};

// Abstract circuits may contain any gate kind; lowered circuits contain only
// CNOT/RX/RZ.
enum class Level { abstract, lowered };

struct Circuit {
  int width = 0;
  Level level = Level::abstract;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

// Throws std::invalid_argument on operand violations (index out of range,
// equal two-qubit operands, lowered circuit holding H/SWAP/ZZ).
void validate(const Circuit& c);

// Dependency DAG over gate indices: u -> v when the gates share a qubit and u
// is the latest earlier gate on that qubit (per-qubit last-writer chaining).
struct DepDag {
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
};

DepDag to_dag(const Circuit& c);

// Longest DAG path counting only two-qubit gates.
int depth_2q(const Circuit& c);

// Number of two-qubit gates as listed (a SWAP counts 1 here; lowering turns
// it into 3 CNOTs which then count individually).
int count_2q(const Circuit& c);

// ZZ(t,a,b) -> CNOT,RZ(t),CNOT; SWAP -> 3 alternating CNOTs; H -> RZ,RX,RZ of
// pi/2 (H up to global phase). Two-qubit decompositions are oriented
// (min,max) so adjacent blocks on the same pair cancel boundary CNOTs.
Circuit lower(const Circuit& c);

// Text format: header "qubits N", then one gate per line: "h q",
// "rx theta q", "rz theta q", "cnot a b", "swap a b", "zz theta a b".
// Angles print with 12 significant digits.
std::string serialize(const Circuit& c);

// Accepts exactly the emitted format. Throws std::runtime_error naming the
// offending line number. The format does not encode the level; a nonempty
// circuit made only of CNOT/RX/RZ parses as lowered, anything else abstract.
Circuit parse_circuit(const std::string& text);

}  // namespace swapnet

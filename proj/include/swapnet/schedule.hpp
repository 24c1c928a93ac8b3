#pragma once

#include <string>
#include <vector>

#include "swapnet/circuit.hpp"
#include "swapnet/topology.hpp"

namespace swapnet {

struct GateDurations {
  long long t_1q = 1;
  long long t_2q = 10;
};

struct ScheduleResult {
  std::vector<long long> start;  // per gate, aligned with the circuit
  long long makespan = 0;
  int two_q_count = 0;
  int two_q_depth = 0;
};

// Greedy list schedule in gate order: each gate starts once its qubits are
// free, plus its bus when the operand pair is coupled only through a bus
// (edge-coupled pairs never claim one). Requires a lowered circuit whose
// two-qubit gates all act on coupled pairs; violations throw
// std::invalid_argument.
ScheduleResult schedule(const Circuit& c, const CouplingMap& m, const GateDurations& d = {});

// schedule(...) makespan with unit single-qubit and 10-unit two-qubit gates.
long long scaled_time(const Circuit& c, const CouplingMap& m);

// One line per gate: "gate_index start end resources" where resources are the
// qubits and, when claimed, "bus<k>".
std::string dump_schedule(const Circuit& c, const CouplingMap& m, const ScheduleResult& r,
                          const GateDurations& d = {});

}  // namespace swapnet

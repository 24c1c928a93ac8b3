#pragma once

#include "swapnet/circuit.hpp"

namespace swapnet {

// Fixed-point local cleanup over per-qubit DAG adjacency:
//   - adjacent identical CNOT pairs cancel,
//   - adjacent same-axis rotations merge (angles mod 2*pi, zero dropped),
//   - a SWAP adjacent to a CNOT on the same pair merges into two CNOTs,
//   - adjacent SWAP pairs cancel.
// Never increases gate count or two-qubit count; preserves the statevector up
// to global phase. Adjacent ZZ/SWAP blocks need no rule here: lowering
// orients both decompositions (min,max), so their boundary CNOTs cancel by
// the first rule after lowering.
Circuit peephole(const Circuit& c);

}  // namespace swapnet

#pragma once

#include "qdc/circuit.hpp"

namespace qdc {

/// Repetition-code shape: each of k logical qubits is carried by a block of
/// 2t+1 physical qubits, and up to t dephasings per block are correctable.
/// The data qubit of block j sits at index j*(2t+1).
struct CodeSpec {
    int t = 1;
    int k = 1;

    int block_size() const { return 2 * t + 1; }
    int width() const { return k * block_size(); }
};

/// Classical 2t+1 repetition code. The encoder copies the data bit onto the
/// 2t ancillas; the decoder reverses the copies and then restores the data
/// bit from the ancilla pattern (a double-conditioned NOT for t = 1, a
/// majority-conditioned NOT for larger t).
CircuitPair classical_repetition(int t);

/// The dephasing-correcting counterpart: classical_repetition(t) passed
/// through quantize_for_dephasing.
CircuitPair quantum_dephasing_code(int t);

/// k independent block copies of quantum_dephasing_code(t) on disjoint index
/// ranges. No gate crosses a block boundary.
CircuitPair multi_block_encode(const CodeSpec& spec, int qubit_cap = kDefaultQubitCap);

}  // namespace qdc

#include "qdc/codes.hpp"

#include <stdexcept>
#include <string>

namespace qdc {

CircuitPair classical_repetition(int t) {
    if (t < 1) {
        throw std::invalid_argument("repetition code needs t >= 1");
    }
    const int width = 2 * t + 1;
    CircuitPair pair{Circuit(width), Circuit(width)};
    for (int q = 1; q < width; ++q) {
        pair.encode.append(CircuitOp::cnot(0, q));
        pair.decode.append(CircuitOp::cnot(0, q));
    }
    if (t == 1) {
        // Two controls make majority and double-conditioning coincide.
        pair.decode.append(CircuitOp::ccnot(1, 2, 0));
    } else {
        std::vector<int> ancillas;
        for (int q = 1; q < width; ++q) ancillas.push_back(q);
        pair.decode.append(CircuitOp::majnot(std::move(ancillas), 0));
    }
    return pair;
}

CircuitPair quantum_dephasing_code(int t) {
    CircuitPair classical = classical_repetition(t);
    return quantize_for_dephasing(classical.encode, classical.decode);
}

namespace {

// Copy of `op` with every operand shifted by `offset`.
CircuitOp shifted(const CircuitOp& op, int offset) {
    CircuitOp out = op;
    for (int& q : out.operands) q += offset;
    return out;
}

}  // namespace

CircuitPair multi_block_encode(const CodeSpec& spec, int qubit_cap) {
    if (spec.t < 1 || spec.k < 1) {
        throw std::invalid_argument("code spec needs t >= 1 and k >= 1");
    }
    if (spec.width() > qubit_cap) {
        throw CapacityError("code width " + std::to_string(spec.width()) +
                            " exceeds the cap of " + std::to_string(qubit_cap));
    }
    CircuitPair block = quantum_dephasing_code(spec.t);
    CircuitPair out{Circuit(spec.width()), Circuit(spec.width())};
    for (int j = 0; j < spec.k; ++j) {
        const int offset = j * spec.block_size();
        for (const CircuitOp& op : block.encode.ops) out.encode.append(shifted(op, offset));
        for (const CircuitOp& op : block.decode.ops) out.decode.append(shifted(op, offset));
    }
    return out;
}

}  // namespace qdc

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/gates.hpp"
#include "qdc/statevector.hpp"

namespace qdc {

/// One IR node: gate kind plus its qubit operands, controls first and target
/// last. Dephase carries (phi0, phi1); cphase carries its angle in phi0.
struct CircuitOp {
    GateKind kind = GateKind::X;
    std::vector<int> operands;
    double phi0 = 0.0;
    double phi1 = 0.0;

    static CircuitOp x(int target);
    static CircuitOp cnot(int control, int target);
    static CircuitOp ccnot(int control_a, int control_b, int target);
    static CircuitOp majnot(std::vector<int> controls, int target);
    static CircuitOp u(int target);
    static CircuitOp udag(int target);
    static CircuitOp dephase(int target, double phi0, double phi1);
    static CircuitOp cphase(int qubit_a, int qubit_b, double phi);

    int target() const { return operands.back(); }
    bool operator==(const CircuitOp&) const = default;
};

/// Distinct operands and an arity that matches the kind.
void validate_op(const CircuitOp& op, int n_qubits);

/// Ordered op list over a declared register width.
struct Circuit {
    int n_qubits = 0;
    std::vector<CircuitOp> ops;

    Circuit() = default;
    explicit Circuit(int width) : n_qubits(width) {}

    Circuit& append(CircuitOp op);
    bool classical_only() const;
    bool operator==(const Circuit&) const = default;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

class NotClassicalError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Line-oriented text format:
///   qubits <n>
///   x <t> | cnot <c> <t> | ccnot <c1> <c2> <t> | majnot <c1> ... <ck> -> <t>
///   u <t> | udag <t> | dephase <t> <phi0> <phi1> | cphase <a> <b> <phi>
/// '#' starts a comment, blank lines are ignored, phases are decimal radians.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

/// Fixed-width bit string, bit q of `bits` matching qubit q of a register.
struct BitString {
    int n_bits = 0;
    std::uint64_t bits = 0;

    bool bit(int i) const { return (bits >> i) & 1u; }
    void set(int i, bool v) {
        bits = v ? (bits | (std::uint64_t{1} << i)) : (bits & ~(std::uint64_t{1} << i));
    }
    void flip(int i) { bits ^= std::uint64_t{1} << i; }
    std::string to_string() const;  // qubit 0 first
    bool operator==(const BitString&) const = default;
};

/// Truth-table evaluation of a circuit containing only classical kinds
/// (x, cnot, ccnot, majnot).
BitString eval_classical(const Circuit& circuit, BitString input);

struct CircuitPair {
    Circuit encode;
    Circuit decode;
};

/// Turn a classical bit-flip corrector into a dephasing corrector: the encoder
/// gains a conversion rotation on every qubit after its classical ops, the
/// decoder reverses the rotations before its classical ops. The stored state
/// between the two halves is the rotated codeword.
CircuitPair quantize_for_dephasing(const Circuit& classical_encode,
                                   const Circuit& classical_decode);

/// Apply one op to a state wide enough to hold its operands.
void apply_op(QuantumState& state, const CircuitOp& op);

/// Apply every op in order. Circuit and state widths must match.
void run_quantum(const Circuit& circuit, QuantumState& state);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

}  // namespace qdc

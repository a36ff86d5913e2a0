#include "qdc/circuit.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace qdc {

CircuitOp CircuitOp::x(int target) { return {GateKind::X, {target}}; }
CircuitOp CircuitOp::cnot(int control, int target) {
    return {GateKind::Cnot, {control, target}};
}
CircuitOp CircuitOp::ccnot(int control_a, int control_b, int target) {
    return {GateKind::Ccnot, {control_a, control_b, target}};
}
CircuitOp CircuitOp::majnot(std::vector<int> controls, int target) {
    controls.push_back(target);
    return {GateKind::Majnot, std::move(controls)};
}
CircuitOp CircuitOp::u(int target) { return {GateKind::UConv, {target}}; }
CircuitOp CircuitOp::udag(int target) { return {GateKind::UConvDag, {target}}; }
CircuitOp CircuitOp::dephase(int target, double phi0, double phi1) {
    return {GateKind::Dephase, {target}, phi0, phi1};
}
CircuitOp CircuitOp::cphase(int qubit_a, int qubit_b, double phi) {
    return {GateKind::Cphase, {qubit_a, qubit_b}, phi};
}

void validate_op(const CircuitOp& op, int n_qubits) {
    const std::size_t arity = op.operands.size();
    bool arity_ok = false;
    switch (op.kind) {
        case GateKind::X:
        case GateKind::UConv:
        case GateKind::UConvDag:
        case GateKind::Dephase: arity_ok = arity == 1; break;
        case GateKind::Cnot:
        case GateKind::Cphase: arity_ok = arity == 2; break;
        case GateKind::Ccnot: arity_ok = arity == 3; break;
        case GateKind::Majnot: arity_ok = arity >= 2; break;
    }
    if (!arity_ok) {
        throw std::invalid_argument(std::string(gate_mnemonic(op.kind)) +
                                    " has wrong operand count " + std::to_string(arity));
    }
    std::unordered_set<int> seen;
    for (int q : op.operands) {
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range("operand " + std::to_string(q) +
                                    " out of range for width " + std::to_string(n_qubits));
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate operand " + std::to_string(q) + " in " +
                                        gate_mnemonic(op.kind));
        }
    }
    if (has_phase_params(op.kind) &&
        (!std::isfinite(op.phi0) || !std::isfinite(op.phi1))) {
        throw std::invalid_argument("phase parameters must be finite");
    }
}

Circuit& Circuit::append(CircuitOp op) {
    validate_op(op, n_qubits);
    ops.push_back(std::move(op));
    return *this;
}

bool Circuit::classical_only() const {
    return std::all_of(ops.begin(), ops.end(),
                       [](const CircuitOp& op) { return is_classical(op.kind); });
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_index(std::string_view token, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw ParseError(line_no, "expected a qubit index, got '" + std::string(token) + "'");
    }
    return value;
}

double parse_phase(std::string_view token, int line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(line_no, "expected a phase in radians, got '" + std::string(token) +
                                      "'");
    }
    return value;
}

GateKind mnemonic_to_kind(std::string_view word, int line_no) {
    for (GateKind k : {GateKind::X, GateKind::Cnot, GateKind::Ccnot, GateKind::Majnot,
                       GateKind::UConv, GateKind::UConvDag, GateKind::Dephase,
                       GateKind::Cphase}) {
        if (word == gate_mnemonic(k)) return k;
    }
    throw ParseError(line_no, "unknown mnemonic '" + std::string(word) + "'");
}

CircuitOp parse_op(GateKind kind, const std::vector<std::string_view>& tokens, int line_no) {
    const std::size_t n = tokens.size();  // includes the mnemonic
    switch (kind) {
        case GateKind::X:
            if (n != 2) throw ParseError(line_no, "x takes one operand");
            return CircuitOp::x(parse_index(tokens[1], line_no));
        case GateKind::Cnot:
            if (n != 3) throw ParseError(line_no, "cnot takes two operands");
            return CircuitOp::cnot(parse_index(tokens[1], line_no),
                                   parse_index(tokens[2], line_no));
        case GateKind::Ccnot:
            if (n != 4) throw ParseError(line_no, "ccnot takes three operands");
            return CircuitOp::ccnot(parse_index(tokens[1], line_no),
                                    parse_index(tokens[2], line_no),
                                    parse_index(tokens[3], line_no));
        case GateKind::Majnot: {
            // majnot <c1> ... <ck> -> <t>
            if (n < 4 || tokens[n - 2] != "->") {
                throw ParseError(line_no, "majnot needs controls, '->', then a target");
            }
            std::vector<int> controls;
            for (std::size_t i = 1; i + 2 < n; ++i) {
                controls.push_back(parse_index(tokens[i], line_no));
            }
            return CircuitOp::majnot(std::move(controls), parse_index(tokens[n - 1], line_no));
        }
        case GateKind::UConv:
            if (n != 2) throw ParseError(line_no, "u takes one operand");
            return CircuitOp::u(parse_index(tokens[1], line_no));
        case GateKind::UConvDag:
            if (n != 2) throw ParseError(line_no, "udag takes one operand");
            return CircuitOp::udag(parse_index(tokens[1], line_no));
        case GateKind::Dephase:
            if (n != 4) throw ParseError(line_no, "dephase takes a target and two phases");
            return CircuitOp::dephase(parse_index(tokens[1], line_no),
                                      parse_phase(tokens[2], line_no),
                                      parse_phase(tokens[3], line_no));
        case GateKind::Cphase:
            if (n != 4) throw ParseError(line_no, "cphase takes two operands and a phase");
            return CircuitOp::cphase(parse_index(tokens[1], line_no),
                                     parse_index(tokens[2], line_no),
                                     parse_phase(tokens[3], line_no));
    }
    throw ParseError(line_no, "unknown gate kind");
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool header_seen = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!header_seen) {
            if (tokens[0] != "qubits" || tokens.size() != 2) {
                throw ParseError(line_no, "expected 'qubits <n>' header");
            }
            int width = parse_index(tokens[1], line_no);
            if (width < 1) throw ParseError(line_no, "width must be at least 1");
            circuit.n_qubits = width;
            header_seen = true;
            continue;
        }
        GateKind kind = mnemonic_to_kind(tokens[0], line_no);
        CircuitOp op = parse_op(kind, tokens, line_no);
        try {
            circuit.append(std::move(op));
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!header_seen) throw ParseError(line_no, "missing 'qubits <n>' header");
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_qubits) + "\n";
    for (const CircuitOp& op : circuit.ops) {
        out += gate_mnemonic(op.kind);
        if (op.kind == GateKind::Majnot) {
            for (std::size_t i = 0; i + 1 < op.operands.size(); ++i) {
                out += " " + std::to_string(op.operands[i]);
            }
            out += " -> " + std::to_string(op.target());
        } else {
            for (int q : op.operands) out += " " + std::to_string(q);
        }
        if (op.kind == GateKind::Dephase) {
            out += " " + format_double(op.phi0) + " " + format_double(op.phi1);
        } else if (op.kind == GateKind::Cphase) {
            out += " " + format_double(op.phi0);
        }
        out += "\n";
    }
    return out;
}

std::string BitString::to_string() const {
    std::string s;
    for (int i = 0; i < n_bits; ++i) s += bit(i) ? '1' : '0';
    return s;
}

BitString eval_classical(const Circuit& circuit, BitString input) {
    if (input.n_bits != circuit.n_qubits) {
        throw std::invalid_argument("bit string width does not match the circuit");
    }
    for (const CircuitOp& op : circuit.ops) {
        if (!is_classical(op.kind)) {
            throw NotClassicalError(std::string("circuit contains non-classical op '") +
                                    gate_mnemonic(op.kind) + "'");
        }
        switch (op.kind) {
            case GateKind::X: input.flip(op.target()); break;
            case GateKind::Cnot:
                if (input.bit(op.operands[0])) input.flip(op.target());
                break;
            case GateKind::Ccnot:
                if (input.bit(op.operands[0]) && input.bit(op.operands[1])) {
                    input.flip(op.target());
                }
                break;
            case GateKind::Majnot: {
                const int n_controls = static_cast<int>(op.operands.size()) - 1;
                int ones = 0;
                for (int i = 0; i < n_controls; ++i) ones += input.bit(op.operands[i]);
                if (2 * ones > n_controls) input.flip(op.target());
                break;
            }
            default: break;
        }
    }
    return input;
}

CircuitPair quantize_for_dephasing(const Circuit& classical_encode,
                                   const Circuit& classical_decode) {
    if (classical_encode.n_qubits != classical_decode.n_qubits) {
        throw std::invalid_argument("encode and decode widths differ");
    }
    if (!classical_encode.classical_only() || !classical_decode.classical_only()) {
        throw std::invalid_argument("quantization expects classical-only circuits");
    }
    CircuitPair out{Circuit(classical_encode.n_qubits), Circuit(classical_decode.n_qubits)};
    out.encode.ops = classical_encode.ops;
    for (int q = 0; q < out.encode.n_qubits; ++q) {
        out.encode.append(CircuitOp::u(q));
    }
    for (int q = 0; q < out.decode.n_qubits; ++q) {
        out.decode.append(CircuitOp::udag(q));
    }
    out.decode.ops.insert(out.decode.ops.end(), classical_decode.ops.begin(),
                          classical_decode.ops.end());
    return out;
}

void apply_op(QuantumState& state, const CircuitOp& op) {
    switch (op.kind) {
        case GateKind::X:
            apply_controlled_not(state, {}, op.target());
            break;
        case GateKind::Cnot:
        case GateKind::Ccnot:
        case GateKind::Majnot: {
            std::span<const int> controls(op.operands.data(), op.operands.size() - 1);
            if (op.kind == GateKind::Majnot) {
                apply_majority_not(state, controls, op.target());
            } else {
                apply_controlled_not(state, controls, op.target());
            }
            break;
        }
        case GateKind::UConv:
            apply_single(state, conversion_rotation(), op.target());
            break;
        case GateKind::UConvDag:
            apply_single(state, conversion_rotation_adjoint(), op.target());
            break;
        case GateKind::Dephase:
            apply_single(state, dephase_gate(op.phi0, op.phi1), op.target());
            break;
        case GateKind::Cphase:
            apply_controlled_phase(state, op.operands[0], op.operands[1], op.phi0);
            break;
    }
}

void run_quantum(const Circuit& circuit, QuantumState& state) {
    if (circuit.n_qubits != state.n_qubits) {
        throw std::invalid_argument("circuit width " + std::to_string(circuit.n_qubits) +
                                    " does not match state width " +
                                    std::to_string(state.n_qubits));
    }
    for (const CircuitOp& op : circuit.ops) apply_op(state, op);
}

}  // namespace qdc

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qdc {

using cplx = std::complex<double>;

/// Default ceiling on register width: 2^24 amplitudes = 16 MiB at 16 bytes each.
inline constexpr int kDefaultQubitCap = 24;

/// Thrown when a requested register would exceed the qubit cap.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// 2x2 complex matrix, row-major. Used both for single-qubit gates and for
/// single-qubit reduced density matrices.
struct Mat2 {
    cplx m00, m01;
    cplx m10, m11;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }

    Mat2 operator*(cplx s) const { return {s * m00, s * m01, s * m10, s * m11}; }
    Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Mat2 operator-(const Mat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }

    bool is_unitary(double tol = 1e-12) const;
};

/// Largest singular value, computed from the closed-form eigenvalues of A^dag A.
double operator_norm(const Mat2& a);

/// Dense state vector over n qubits. Basis convention is little-endian:
/// in basis index b, qubit q holds bit (b >> q) & 1. Qubit 0 is the data qubit.
struct QuantumState {
    int n_qubits = 0;
    std::vector<cplx> amps;

    std::size_t dim() const { return amps.size(); }
    bool bit(std::size_t basis, int qubit) const { return (basis >> qubit) & 1u; }
};

/// (alpha|0> + beta|1>) on qubit 0, all other qubits |0>. The pair must be
/// normalized to within 1e-10.
QuantumState init_state(int n_qubits, cplx alpha, cplx beta, int qubit_cap = kDefaultQubitCap);

double squared_norm(const QuantumState& state);

/// Apply a single-qubit unitary to the target tensor slot.
void apply_single(QuantumState& state, const Mat2& u, int target);

/// Flip the target bit on every basis state whose control bits are all 1.
/// An empty control set is a plain NOT.
void apply_controlled_not(QuantumState& state, std::span<const int> controls, int target);

/// Flip the target bit where strictly more than half of the control bits are 1.
/// Ties (possible with an even control count) do not flip.
void apply_majority_not(QuantumState& state, std::span<const int> controls, int target);

/// Multiply amplitudes with both operand bits set by e^{i phi}.
void apply_controlled_phase(QuantumState& state, int qubit_a, int qubit_b, double phi);

/// Partial trace down to one qubit. Result is Hermitian with unit trace.
Mat2 reduced_density(const QuantumState& state, int keep);

/// Tr(rho^2) for a Hermitian 2x2 density matrix; 1 for pure states.
double purity(const Mat2& rho);

/// <ref| rho_Q |ref> where rho_Q is the reduced density on the listed qubits
/// and |ref> is a 2^|Q| reference vector. Computed without forming rho.
double logical_fidelity(const QuantumState& state, std::span<const int> qubits,
                        std::span<const cplx> reference);

/// Fidelity of the data qubit (qubit 0) against the pure state (alpha, beta).
double fidelity_with(const QuantumState& state, cplx alpha, cplx beta);
double fidelity_with(const Mat2& rho, cplx alpha, cplx beta);

}  // namespace qdc

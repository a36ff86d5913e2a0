#pragma once

#include <array>

#include "qdc/statevector.hpp"

namespace qdc {

/// Gate alphabet of the circuit IR.
enum class GateKind {
    X,         // unconditional NOT
    Cnot,      // NOT conditioned on one qubit
    Ccnot,     // NOT conditioned on two qubits
    Majnot,    // NOT conditioned on a strict majority of its controls
    UConv,     // conversion rotation exp(-i pi sigma_y / 4)
    UConvDag,  // its adjoint
    Dephase,   // diag(e^{i phi0}, e^{i phi1})
    Cphase,    // diag(1, 1, 1, e^{i phi}) on a qubit pair
};

const char* gate_mnemonic(GateKind kind);
bool is_classical(GateKind kind);  // representable as a boolean truth table
bool has_phase_params(GateKind kind);

/// The y-axis rotation by pi/2 that maps phase errors to bit-flip errors:
/// (1/sqrt2) [[1, -1], [1, 1]].
Mat2 conversion_rotation();
Mat2 conversion_rotation_adjoint();

/// diag(e^{i phi0}, e^{i phi1}); both phases must be finite.
Mat2 dephase_gate(double phi0, double phi1);

/// The dephase gate conjugated by the conversion rotation, computed as the
/// explicit matrix product U^dag D(phi0, phi1) U.
Mat2 conjugated_dephase(double phi0, double phi1);

/// Closed form of the same conjugation:
/// (1/2) [ (e^{i phi1} + e^{i phi0}) I + (e^{i phi1} - e^{i phi0}) X ].
/// Kept separate from conjugated_dephase so the two routes can be checked
/// against each other.
Mat2 conjugated_dephase_closed_form(double phi0, double phi1);

/// Diagonal of the two-qubit gate diag(1, 1, 1, e^{i phi}), indexed by
/// bit_a + 2*bit_b. The gate is symmetric in its operands.
std::array<cplx, 4> correlated_phase_gate(double phi);

Mat2 pauli_x();

}  // namespace qdc

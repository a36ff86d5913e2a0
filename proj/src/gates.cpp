#include "qdc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdc {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_finite(double phi, const char* name) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}
}  // namespace

const char* gate_mnemonic(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::Cnot: return "cnot";
        case GateKind::Ccnot: return "ccnot";
        case GateKind::Majnot: return "majnot";
        case GateKind::UConv: return "u";
        case GateKind::UConvDag: return "udag";
        case GateKind::Dephase: return "dephase";
        case GateKind::Cphase: return "cphase";
    }
    throw std::invalid_argument("unknown gate kind");
}

bool is_classical(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::Cnot:
        case GateKind::Ccnot:
        case GateKind::Majnot: return true;
        default: return false;
    }
}

bool has_phase_params(GateKind kind) {
    return kind == GateKind::Dephase || kind == GateKind::Cphase;
}

Mat2 conversion_rotation() {
    // exp(-i pi sigma_y / 4) = cos(pi/4) I - i sin(pi/4) sigma_y
    return {cplx{kInvSqrt2, 0.0}, cplx{-kInvSqrt2, 0.0},
            cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0}};
}

Mat2 conversion_rotation_adjoint() { return conversion_rotation().adjoint(); }

Mat2 dephase_gate(double phi0, double phi1) {
    check_finite(phi0, "phi0");
    check_finite(phi1, "phi1");
    return {std::polar(1.0, phi0), 0.0, 0.0, std::polar(1.0, phi1)};
}

Mat2 conjugated_dephase(double phi0, double phi1) {
    return conversion_rotation_adjoint() * dephase_gate(phi0, phi1) * conversion_rotation();
}

Mat2 conjugated_dephase_closed_form(double phi0, double phi1) {
    check_finite(phi0, "phi0");
    check_finite(phi1, "phi1");
    const cplx e0 = std::polar(1.0, phi0);
    const cplx e1 = std::polar(1.0, phi1);
    const cplx sum = 0.5 * (e1 + e0);
    const cplx diff = 0.5 * (e1 - e0);
    return {sum, diff, diff, sum};
}

std::array<cplx, 4> correlated_phase_gate(double phi) {
    check_finite(phi, "phi");
    return {cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 0.0}, std::polar(1.0, phi)};
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

}  // namespace qdc

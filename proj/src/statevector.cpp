#include "qdc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace qdc {

namespace {

void check_qubit(const QuantumState& state, int qubit, const char* what) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.n_qubits) +
                                " qubits");
    }
}

// Bit mask of the given qubits; rejects duplicates and target overlap.
std::uint64_t control_mask(const QuantumState& state, std::span<const int> controls,
                           int target) {
    std::uint64_t mask = 0;
    for (int c : controls) {
        check_qubit(state, c, "control");
        if (c == target) {
            throw std::invalid_argument("control " + std::to_string(c) +
                                        " overlaps the target");
        }
        std::uint64_t bit = std::uint64_t{1} << c;
        if (mask & bit) {
            throw std::invalid_argument("duplicate control " + std::to_string(c));
        }
        mask |= bit;
    }
    return mask;
}

}  // namespace

bool Mat2::is_unitary(double tol) const {
    Mat2 p = adjoint() * (*this);
    return operator_norm(p - Mat2::identity()) <= tol;
}

double operator_norm(const Mat2& a) {
    // Eigenvalues of the 2x2 Hermitian matrix A^dag A via trace/determinant.
    Mat2 h = a.adjoint() * a;
    double tr = h.m00.real() + h.m11.real();
    double det = std::norm(a.m00 * a.m11 - a.m01 * a.m10);
    double disc = std::max(tr * tr / 4.0 - det, 0.0);
    return std::sqrt(std::max(tr / 2.0 + std::sqrt(disc), 0.0));
}

QuantumState init_state(int n_qubits, cplx alpha, cplx beta, int qubit_cap) {
    if (n_qubits < 1) {
        throw std::invalid_argument("register needs at least one qubit");
    }
    if (n_qubits > qubit_cap) {
        throw CapacityError("register of " + std::to_string(n_qubits) +
                            " qubits exceeds the cap of " + std::to_string(qubit_cap));
    }
    double nrm = std::norm(alpha) + std::norm(beta);
    if (std::abs(nrm - 1.0) > 1e-10) {
        throw std::invalid_argument("data state (alpha, beta) is not normalized");
    }
    QuantumState state;
    state.n_qubits = n_qubits;
    state.amps.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    state.amps[0] = alpha;
    state.amps[1] = beta;
    return state;
}

double squared_norm(const QuantumState& state) {
    double s = 0.0;
    for (const cplx& a : state.amps) s += std::norm(a);
    return s;
}

void apply_single(QuantumState& state, const Mat2& u, int target) {
    check_qubit(state, target, "target");
    const std::size_t step = std::size_t{1} << target;
    const std::size_t n = state.dim();
    for (std::size_t base = 0; base < n; base += 2 * step) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const cplx a = state.amps[i0];
            const cplx b = state.amps[i1];
            state.amps[i0] = u.m00 * a + u.m01 * b;
            state.amps[i1] = u.m10 * a + u.m11 * b;
        }
    }
}

void apply_controlled_not(QuantumState& state, std::span<const int> controls, int target) {
    check_qubit(state, target, "target");
    const std::uint64_t cmask = control_mask(state, controls, target);
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t n = state.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & cmask) == cmask && !(i & tmask)) {
            std::swap(state.amps[i], state.amps[i | tmask]);
        }
    }
}

void apply_majority_not(QuantumState& state, std::span<const int> controls, int target) {
    if (controls.empty()) {
        throw std::invalid_argument("majority gate needs at least one control");
    }
    check_qubit(state, target, "target");
    const std::uint64_t cmask = control_mask(state, controls, target);
    const std::size_t tmask = std::size_t{1} << target;
    const int threshold = static_cast<int>(controls.size());  // 2*ones > threshold
    const std::size_t n = state.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (i & tmask) continue;
        int ones = std::popcount(i & cmask);
        if (2 * ones > threshold) {
            std::swap(state.amps[i], state.amps[i | tmask]);
        }
    }
}

void apply_controlled_phase(QuantumState& state, int qubit_a, int qubit_b, double phi) {
    check_qubit(state, qubit_a, "operand");
    check_qubit(state, qubit_b, "operand");
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("controlled phase needs two distinct qubits");
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("controlled phase angle must be finite");
    }
    const std::size_t mask = (std::size_t{1} << qubit_a) | (std::size_t{1} << qubit_b);
    const cplx factor = std::polar(1.0, phi);
    const std::size_t n = state.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & mask) == mask) state.amps[i] *= factor;
    }
}

Mat2 reduced_density(const QuantumState& state, int keep) {
    check_qubit(state, keep, "keep");
    const std::size_t kmask = std::size_t{1} << keep;
    double r00 = 0.0, r11 = 0.0;
    cplx r01{0.0, 0.0};
    const std::size_t n = state.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (i & kmask) continue;
        const cplx lo = state.amps[i];
        const cplx hi = state.amps[i | kmask];
        r00 += std::norm(lo);
        r11 += std::norm(hi);
        r01 += lo * std::conj(hi);
    }
    return {cplx{r00, 0.0}, r01, std::conj(r01), cplx{r11, 0.0}};
}

double purity(const Mat2& rho) {
    return rho.m00.real() * rho.m00.real() + rho.m11.real() * rho.m11.real() +
           2.0 * std::norm(rho.m01);
}

double logical_fidelity(const QuantumState& state, std::span<const int> qubits,
                        std::span<const cplx> reference) {
    if (qubits.empty() || qubits.size() > 20) {
        throw std::invalid_argument("kept qubit list must have between 1 and 20 entries");
    }
    std::uint64_t kept_mask = 0;
    for (int q : qubits) {
        check_qubit(state, q, "keep");
        std::uint64_t bit = std::uint64_t{1} << q;
        if (kept_mask & bit) throw std::invalid_argument("duplicate kept qubit");
        kept_mask |= bit;
    }
    const std::size_t ref_dim = std::size_t{1} << qubits.size();
    if (reference.size() != ref_dim) {
        throw std::invalid_argument("reference vector has wrong dimension");
    }
    double ref_norm = 0.0;
    for (const cplx& r : reference) ref_norm += std::norm(r);
    if (std::abs(ref_norm - 1.0) > 1e-10) {
        throw std::invalid_argument("reference state is not normalized");
    }

    // <ref|rho|ref> = sum over environment configurations e of |<ref|v_e>|^2,
    // where v_e collects the amplitudes with the kept qubits running over their
    // basis and the others frozen at e.
    const std::size_t env_dim = state.dim() >> qubits.size();
    std::vector<cplx> overlap(env_dim, cplx{0.0, 0.0});
    const std::size_t n = state.dim();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            r |= static_cast<std::size_t>((i >> qubits[k]) & 1u) << k;
        }
        std::size_t e = 0;
        std::size_t pos = 0;
        for (int q = 0; q < state.n_qubits; ++q) {
            if (kept_mask & (std::uint64_t{1} << q)) continue;
            e |= ((i >> q) & 1u) << pos;
            ++pos;
        }
        overlap[e] += std::conj(reference[r]) * state.amps[i];
    }
    double fid = 0.0;
    for (const cplx& v : overlap) fid += std::norm(v);
    return fid;
}

double fidelity_with(const QuantumState& state, cplx alpha, cplx beta) {
    const int data[] = {0};
    const cplx ref[] = {alpha, beta};
    return logical_fidelity(state, data, ref);
}

double fidelity_with(const Mat2& rho, cplx alpha, cplx beta) {
    double nrm = std::norm(alpha) + std::norm(beta);
    if (std::abs(nrm - 1.0) > 1e-10) {
        throw std::invalid_argument("reference state is not normalized");
    }
    cplx v = std::conj(alpha) * (rho.m00 * alpha + rho.m01 * beta) +
             std::conj(beta) * (rho.m10 * alpha + rho.m11 * beta);
    return v.real();
}

}  // namespace qdc

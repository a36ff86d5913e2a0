// Shared test utilities: dense-matrix oracles kept independent of the
// stride kernels they check.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qdc/statevector.hpp"

namespace helpers {

using qdc::cplx;
using DenseMatrix = std::vector<std::vector<cplx>>;

inline DenseMatrix dense_identity(std::size_t n) {
    DenseMatrix m(n, std::vector<cplx>(n, cplx{0, 0}));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

// Full 2^n x 2^n matrix of a single-qubit operator on the given qubit,
// under the little-endian convention (qubit q is bit (b >> q) & 1).
inline DenseMatrix embed_single(int n_qubits, int qubit, const qdc::Mat2& u) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix m(dim, std::vector<cplx>(dim, cplx{0, 0}));
    const cplx entries[2][2] = {{u.m00, u.m01}, {u.m10, u.m11}};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t mask = std::size_t{1} << qubit;
            if ((i & ~mask) != (j & ~mask)) continue;
            m[i][j] = entries[(i >> qubit) & 1][(j >> qubit) & 1];
        }
    }
    return m;
}

inline std::vector<cplx> mat_vec(const DenseMatrix& m, const std::vector<cplx>& v) {
    std::vector<cplx> out(v.size(), cplx{0, 0});
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

inline double max_amp_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline double max_entry_diff(const qdc::Mat2& a, const qdc::Mat2& b) {
    return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                     std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)});
}

// Haar-ish random single-qubit unitary from three angles and a global phase.
inline qdc::Mat2 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    const double theta = angle(rng) / 2.0;
    const double a = angle(rng), b = angle(rng), g = angle(rng);
    const cplx global = std::polar(1.0, g);
    return {global * std::polar(std::cos(theta), a), global * std::polar(std::sin(theta), b),
            global * -std::polar(std::sin(theta), -b),
            global * std::polar(std::cos(theta), -a)};
}

inline std::vector<cplx> random_state_vector(int n_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> v(std::size_t{1} << n_qubits);
    double norm = 0.0;
    for (auto& amp : v) {
        amp = cplx{normal(rng), normal(rng)};
        norm += std::norm(amp);
    }
    norm = std::sqrt(norm);
    for (auto& amp : v) amp /= norm;
    return v;
}

inline std::pair<cplx, cplx> random_pair(std::mt19937_64& rng) {
    auto v = random_state_vector(1, rng);
    return {v[0], v[1]};
}

// Reduced density on one qubit the slow way: form the full density matrix and
// sum matching environment indices.
inline qdc::Mat2 brute_force_reduced(const qdc::QuantumState& state, int keep) {
    const std::size_t dim = state.dim();
    const std::size_t mask = std::size_t{1} << keep;
    cplx r[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~mask) != (j & ~mask)) continue;
            r[(i >> keep) & 1][(j >> keep) & 1] += state.amps[i] * std::conj(state.amps[j]);
        }
    }
    return {r[0][0], r[0][1], r[1][0], r[1][1]};
}

}  // namespace helpers

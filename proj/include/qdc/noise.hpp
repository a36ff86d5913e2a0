#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/circuit.hpp"

namespace qdc {

enum class PhaseDistribution { Gaussian, Uniform };

/// Per-qubit phase-error specification. Sampled modes draw the relative phase
/// phi1 from the distribution with strength sigma and keep phi0 at zero; the
/// fixed mode carries both phases verbatim.
struct DephasingModel {
    enum class Mode { FixedPhases, IID, SingleRandomQubit, PauliZEnumeration, Correlated };

    struct FixedPhase {
        int qubit;
        double phi0;
        double phi1;
    };

    Mode mode = Mode::IID;
    PhaseDistribution distribution = PhaseDistribution::Gaussian;
    double sigma = 0.0;                // radians; sampled modes only
    std::vector<int> qubits;           // IID target set; empty means every qubit
    std::vector<FixedPhase> fixed;     // FixedPhases mode
    int max_weight = 0;                // PauliZEnumeration mode
    int pair_a = 0, pair_b = 1;        // Correlated mode
    double pair_phi = 0.0;

    static DephasingModel fixed_phases(std::vector<FixedPhase> phases);
    static DephasingModel iid(PhaseDistribution dist, double sigma,
                              std::vector<int> qubits = {});
    static DephasingModel single_random_qubit(PhaseDistribution dist, double sigma);
    static DephasingModel pauli_z_enumeration(int max_weight);
    static DephasingModel correlated(int qubit_a, int qubit_b, double phi);

    /// Canonical mini-syntax label, e.g. "iid:gauss" (sigma is reported
    /// separately wherever it varies).
    std::string label() const;
};

/// Parse the model mini-syntax:
///   fixed:q=1,phi0=0,phi1=3.14159
///   iid:gauss,sigma=0.1 | iid:uniform,sigma=0.1
///   single:gauss,sigma=0.1
///   enum:w=2
///   corr:q=1,2,phi=3.14159
/// Phase values accept the literal "pi".
DephasingModel parse_model(std::string_view text);

/// Draw one error realization as a list of dephase/cphase ops. Deterministic
/// for a given generator state; enumeration models cannot be sampled.
std::vector<CircuitOp> sample_error(const DephasingModel& model, int width,
                                    std::mt19937_64& rng);

/// Every placement of dephase(0, pi) ops on up to max_weight distinct qubits,
/// the empty error included, in deterministic order.
std::vector<std::vector<CircuitOp>> enumerate_pauli_z(int width, int max_weight);

/// Closed-form mean fidelity of one unprotected qubit whose relative phase is
/// drawn from the distribution: 1 - 2|alpha|^2|beta|^2 (1 - E[cos phi]).
double unencoded_mean_fidelity(double sigma, PhaseDistribution dist, cplx alpha, cplx beta);

/// E[cos phi] for phi ~ distribution(sigma).
double expected_cos(double sigma, PhaseDistribution dist);

/// SplitMix64 step; used to derive independent per-trial generator seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Generator for one trial, derived from (seed, stream) so that parallel
/// trials are reproducible independent of scheduling.
std::mt19937_64 make_trial_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace qdc

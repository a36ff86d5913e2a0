#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdc/codes.hpp"
#include "qdc/noise.hpp"

namespace qdc {

/// One row of a fidelity sweep.
struct ExperimentRecord {
    std::string code;  // "unencoded" or "rep-t<t>-k<k>"
    int t = 0;
    int k = 0;
    std::string model;
    double sigma = 0.0;
    long trials = 0;
    double mean_fidelity = 0.0;
    double min_fidelity = 0.0;
    double std_error = 0.0;
};

std::string csv_header();
std::string to_csv_row(const ExperimentRecord& record);

/// Input state fed to each trial. Random draws a fresh Haar state per trial.
struct InputState {
    enum class Kind { Random, Zero, One, Plus, Minus, PlusI, Custom };
    Kind kind = Kind::Random;
    cplx alpha{1.0, 0.0}, beta{0.0, 0.0};  // Custom only

    static InputState random() { return {Kind::Random}; }
    static InputState named(Kind kind) { return {kind}; }
    static InputState custom(cplx alpha, cplx beta) {
        return {Kind::Custom, alpha, beta};
    }
    /// "rand", "zero", "one", "plus", "minus", "i", or "re,im,re,im".
    static InputState parse(std::string_view text);
    std::string label() const;
    /// Concrete (alpha, beta); draws from the generator when random.
    std::pair<cplx, cplx> realize(std::mt19937_64& rng) const;
};

std::pair<cplx, cplx> random_qubit_state(std::mt19937_64& rng);

struct SweepConfig {
    CodeSpec code{1, 1};
    DephasingModel model = DephasingModel::iid(PhaseDistribution::Gaussian, 0.0);
    std::vector<double> sigmas;
    long trials = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
    InputState input = InputState::random();
    bool include_unencoded = true;
    int qubit_cap = kDefaultQubitCap;
};

/// Monte-Carlo fidelity sweep: per sigma, an unencoded baseline row followed
/// by one row for the code. Trial i always consumes stream (seed, i), so
/// results are byte-identical for any thread count.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& config);

/// Worst case found by a verification run.
struct Witness {
    std::vector<CircuitOp> error_ops;
    cplx alpha{1.0, 0.0}, beta{0.0, 0.0};
    std::string input_label = "|0>";
    double fidelity = 1.0;
};

struct VerifyOptions {
    int t = 1;
    int max_error_weight = 1;
    int grid_points = 20;
    int random_inputs = 100;
    std::uint64_t seed = 1;
    int qubit_cap = kDefaultQubitCap;
    double threshold = 1e-10;  // max tolerated infidelity
};

struct VerifyReport {
    VerifyOptions options;
    long cases = 0;
    double max_infidelity = 0.0;
    double min_purity = 1.0;
    Witness worst;
    bool pass = false;
};

/// Exhaustive Pauli-Z enumeration up to the requested weight plus a sampled
/// phase grid over every qubit subset of that size, each against the named
/// and random input states.
VerifyReport run_verify(const VerifyOptions& options);
std::string format_report(const VerifyReport& report);

struct IdentityReport {
    int samples = 0;
    double max_deviation = 0.0;        // product route vs closed form
    double zero_case_deviation = 0.0;  // (0, 0) vs identity
    double pi_case_deviation = 0.0;    // (0, pi) vs -X
    bool pass = false;
};

/// Check the conversion identity on random phase pairs plus the two special
/// cases; passes when every deviation stays below 1e-12.
IdentityReport run_identity_check(int samples, std::uint64_t seed);
std::string format_report(const IdentityReport& report);

/// Post-decode data fidelity for one explicit error inside a code block.
double decoded_fidelity(const CodeSpec& spec, const std::vector<CircuitOp>& error_ops,
                        cplx alpha, cplx beta, int qubit_cap = kDefaultQubitCap);

}  // namespace qdc

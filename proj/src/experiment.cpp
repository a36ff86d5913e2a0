#include "qdc/experiment.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qdc {

std::string csv_header() {
    return "code,t,k,model,sigma,trials,mean_fidelity,min_fidelity,std_error";
}

std::string to_csv_row(const ExperimentRecord& r) {
    std::string row = r.code;
    row += "," + std::to_string(r.t);
    row += "," + std::to_string(r.k);
    row += "," + r.model;
    row += "," + format_double(r.sigma);
    row += "," + std::to_string(r.trials);
    row += "," + format_double(r.mean_fidelity);
    row += "," + format_double(r.min_fidelity);
    row += "," + format_double(r.std_error);
    return row;
}

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

double parse_component(std::string_view text) {
    if (text == "pi") return std::numbers::pi;
    if (text == "-pi") return -std::numbers::pi;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

InputState InputState::parse(std::string_view text) {
    if (text == "rand" || text == "random") return random();
    if (text == "zero" || text == "0") return named(Kind::Zero);
    if (text == "one" || text == "1") return named(Kind::One);
    if (text == "plus" || text == "+") return named(Kind::Plus);
    if (text == "minus" || text == "-") return named(Kind::Minus);
    if (text == "i" || text == "+i") return named(Kind::PlusI);
    std::vector<double> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string_view piece =
            text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
        parts.push_back(parse_component(piece));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (parts.size() != 4) {
        throw std::invalid_argument("input state must be a name or 're,im,re,im'");
    }
    return custom(cplx{parts[0], parts[1]}, cplx{parts[2], parts[3]});
}

std::string InputState::label() const {
    switch (kind) {
        case Kind::Random: return "rand";
        case Kind::Zero: return "|0>";
        case Kind::One: return "|1>";
        case Kind::Plus: return "|+>";
        case Kind::Minus: return "|->";
        case Kind::PlusI: return "|+i>";
        case Kind::Custom:
            return "(" + format_double(alpha.real()) + "," + format_double(alpha.imag()) +
                   "," + format_double(beta.real()) + "," + format_double(beta.imag()) + ")";
    }
    return "?";
}

std::pair<cplx, cplx> random_qubit_state(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    while (true) {
        cplx a{normal(rng), normal(rng)};
        cplx b{normal(rng), normal(rng)};
        double n = std::sqrt(std::norm(a) + std::norm(b));
        if (n > 1e-6) return {a / n, b / n};
    }
}

std::pair<cplx, cplx> InputState::realize(std::mt19937_64& rng) const {
    switch (kind) {
        case Kind::Random: return random_qubit_state(rng);
        case Kind::Zero: return {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
        case Kind::One: return {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
        case Kind::Plus: return {cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0}};
        case Kind::Minus: return {cplx{kInvSqrt2, 0.0}, cplx{-kInvSqrt2, 0.0}};
        case Kind::PlusI: return {cplx{kInvSqrt2, 0.0}, cplx{0.0, kInvSqrt2}};
        case Kind::Custom: return {alpha, beta};
    }
    return {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
}

namespace {

struct TrialStats {
    double mean = 0.0;
    double min = 1.0;
    double std_error = 0.0;
};

// Reduce in trial order so results do not depend on the thread count.
TrialStats reduce(const std::vector<double>& fidelities) {
    TrialStats stats;
    if (fidelities.empty()) return stats;
    double sum = 0.0;
    double min = fidelities[0];
    for (double f : fidelities) {
        sum += f;
        min = std::min(min, f);
    }
    const double n = static_cast<double>(fidelities.size());
    const double mean = sum / n;
    double ss = 0.0;
    for (double f : fidelities) ss += (f - mean) * (f - mean);
    stats.mean = mean;
    stats.min = min;
    stats.std_error = fidelities.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return stats;
}

template <typename TrialFn>
std::vector<double> run_trials(long trials, int threads, TrialFn&& trial) {
    std::vector<double> fidelities(static_cast<std::size_t>(trials));
    const int n_threads = std::clamp(threads, 1, 64);
    if (n_threads == 1 || trials < 2 * n_threads) {
        for (long i = 0; i < trials; ++i) fidelities[i] = trial(i);
        return fidelities;
    }
    std::vector<std::thread> pool;
    const long chunk = (trials + n_threads - 1) / n_threads;
    for (int w = 0; w < n_threads; ++w) {
        const long lo = w * chunk;
        const long hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fidelities, &trial, lo, hi] {
            for (long i = lo; i < hi; ++i) fidelities[i] = trial(i);
        });
    }
    for (auto& th : pool) th.join();
    return fidelities;
}

ExperimentRecord make_record(const std::string& code, int t, int k,
                             const DephasingModel& model, double sigma, long trials,
                             const TrialStats& stats) {
    ExperimentRecord r;
    r.code = code;
    r.t = t;
    r.k = k;
    r.model = model.label();
    r.sigma = sigma;
    r.trials = trials;
    r.mean_fidelity = stats.mean;
    r.min_fidelity = stats.min;
    r.std_error = stats.std_error;
    return r;
}

std::string join_ops(const std::vector<CircuitOp>& ops) {
    if (ops.empty()) return "(none)";
    Circuit scratch(64);
    scratch.ops = ops;
    std::string text = serialize_circuit(scratch);
    // Drop the header line, join op lines with "; ".
    std::string joined;
    std::size_t pos = text.find('\n') + 1;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (!joined.empty()) joined += "; ";
        joined += text.substr(pos, eol - pos);
        pos = eol + 1;
    }
    return joined;
}

}  // namespace

std::vector<ExperimentRecord> run_sweep(const SweepConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("sweep needs at least one trial");
    if (config.sigmas.empty()) throw std::invalid_argument("sweep needs at least one sigma");
    const auto mode = config.model.mode;
    if (mode != DephasingModel::Mode::IID && mode != DephasingModel::Mode::SingleRandomQubit) {
        throw std::invalid_argument(
            "sweeps sample per-qubit dephasing; use an iid or single model");
    }

    const CircuitPair code_circuits = multi_block_encode(config.code, config.qubit_cap);
    const int width = config.code.width();
    const std::string code_label =
        "rep-t" + std::to_string(config.code.t) + "-k" + std::to_string(config.code.k);

    std::vector<ExperimentRecord> records;
    for (std::size_t si = 0; si < config.sigmas.size(); ++si) {
        const double sigma = config.sigmas[si];
        DephasingModel model = config.model;
        model.sigma = sigma;

        // Distinct stream families per row, stable across row order.
        std::uint64_t row_state = config.seed + 0x1000003 * static_cast<std::uint64_t>(si);
        const std::uint64_t unencoded_seed = splitmix64(row_state);
        const std::uint64_t encoded_seed = splitmix64(row_state);

        if (config.include_unencoded) {
            auto trial = [&](long i) {
                auto rng = make_trial_rng(unencoded_seed, static_cast<std::uint64_t>(i));
                auto [alpha, beta] = config.input.realize(rng);
                QuantumState state = init_state(1, alpha, beta, config.qubit_cap);
                for (const CircuitOp& op : sample_error(model, 1, rng)) apply_op(state, op);
                // Rounding can step a hair outside the physical range.
                return std::clamp(fidelity_with(state, alpha, beta), 0.0, 1.0);
            };
            TrialStats stats = reduce(run_trials(config.trials, config.threads, trial));
            records.push_back(
                make_record("unencoded", 0, 0, model, sigma, config.trials, stats));
        }

        auto trial = [&](long i) {
            auto rng = make_trial_rng(encoded_seed, static_cast<std::uint64_t>(i));
            auto [alpha, beta] = config.input.realize(rng);
            QuantumState state = init_state(width, alpha, beta, config.qubit_cap);
            run_quantum(code_circuits.encode, state);
            for (const CircuitOp& op : sample_error(model, width, rng)) apply_op(state, op);
            run_quantum(code_circuits.decode, state);
            return std::clamp(fidelity_with(state, alpha, beta), 0.0, 1.0);
        };
        TrialStats stats = reduce(run_trials(config.trials, config.threads, trial));
        records.push_back(make_record(code_label, config.code.t, config.code.k, model, sigma,
                                      config.trials, stats));
    }
    return records;
}

namespace {

struct LabeledInput {
    cplx alpha, beta;
    std::string label;
};

std::vector<LabeledInput> verify_inputs(int random_inputs, std::uint64_t seed) {
    std::vector<LabeledInput> inputs = {
        {cplx{1, 0}, cplx{0, 0}, "|0>"},
        {cplx{0, 0}, cplx{1, 0}, "|1>"},
        {cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0}, "|+>"},
        {cplx{kInvSqrt2, 0}, cplx{-kInvSqrt2, 0}, "|->"},
        {cplx{kInvSqrt2, 0}, cplx{0, kInvSqrt2}, "|+i>"},
    };
    auto rng = make_trial_rng(seed, 0x494e5055ull);  // input stream
    for (int i = 0; i < random_inputs; ++i) {
        auto [alpha, beta] = random_qubit_state(rng);
        inputs.push_back({alpha, beta, "rand#" + std::to_string(i)});
    }
    return inputs;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.t < 1) throw std::invalid_argument("verify needs t >= 1");
    if (options.max_error_weight < 0) throw std::invalid_argument("weight must be >= 0");
    const CodeSpec spec{options.t, 1};
    const int width = spec.width();
    if (options.max_error_weight > width) {
        throw std::invalid_argument("weight exceeds the code width");
    }
    const CircuitPair code = multi_block_encode(spec, options.qubit_cap);

    VerifyReport report;
    report.options = options;

    const auto inputs = verify_inputs(options.random_inputs, options.seed);

    // Encoding does not depend on the error, so do it once per input.
    std::vector<QuantumState> encoded;
    encoded.reserve(inputs.size());
    for (const auto& in : inputs) {
        QuantumState state = init_state(width, in.alpha, in.beta, options.qubit_cap);
        run_quantum(code.encode, state);
        encoded.push_back(std::move(state));
    }

    auto consider = [&](const std::vector<CircuitOp>& error_ops) {
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            QuantumState state = encoded[j];
            for (const CircuitOp& op : error_ops) apply_op(state, op);
            run_quantum(code.decode, state);
            const Mat2 rho = reduced_density(state, 0);
            const double fid = fidelity_with(rho, inputs[j].alpha, inputs[j].beta);
            report.min_purity = std::min(report.min_purity, purity(rho));
            report.max_infidelity = std::max(report.max_infidelity, 1.0 - fid);
            ++report.cases;
            if (fid < report.worst.fidelity) {
                report.worst = {error_ops, inputs[j].alpha, inputs[j].beta, inputs[j].label,
                                fid};
            }
        }
    };

    for (const auto& pattern : enumerate_pauli_z(width, options.max_error_weight)) {
        consider(pattern);
    }

    // Sampled phases over every nonempty qubit subset of correctable size:
    // a deterministic grid for single qubits, random tuples otherwise.
    auto rng = make_trial_rng(options.seed, 0x50484153ull);  // phase stream
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << width); ++subset) {
        const int w = std::popcount(subset);
        if (w > options.max_error_weight) continue;
        for (int g = 0; g < options.grid_points; ++g) {
            std::vector<CircuitOp> error_ops;
            for (int q = 0; q < width; ++q) {
                if (!((subset >> q) & 1u)) continue;
                const double phi =
                    w == 1 ? 2.0 * std::numbers::pi * (g + 1) / (options.grid_points + 1)
                           : phase_dist(rng);
                error_ops.push_back(CircuitOp::dephase(q, 0.0, phi));
            }
            consider(error_ops);
        }
    }

    report.pass = report.max_infidelity < options.threshold;
    return report;
}

std::string format_report(const VerifyReport& r) {
    std::ostringstream out;
    out << "verify: t=" << r.options.t << " (" << 2 * r.options.t + 1
        << " qubits), error weight <= " << r.options.max_error_weight << "\n";
    out << "cases: " << r.cases << " (" << 5 + r.options.random_inputs << " inputs, "
        << r.options.grid_points << "-point phase grid)\n";
    out << "max infidelity: " << format_double(r.max_infidelity) << "\n";
    out << "min data purity: " << format_double(r.min_purity) << "\n";
    if (!r.pass) {
        out << "witness: " << join_ops(r.worst.error_ops) << "\n";
        out << "witness input: " << r.worst.input_label << " (alpha "
            << format_double(r.worst.alpha.real()) << " " << format_double(r.worst.alpha.imag())
            << ", beta " << format_double(r.worst.beta.real()) << " "
            << format_double(r.worst.beta.imag()) << ")\n";
        out << "witness fidelity: " << format_double(r.worst.fidelity) << "\n";
        out << "FAIL: max infidelity " << format_double(r.max_infidelity) << " >= "
            << format_double(r.options.threshold) << "\n";
    } else {
        out << "PASS: max infidelity " << format_double(r.max_infidelity) << " < "
            << format_double(r.options.threshold) << "\n";
    }
    return out.str();
}

IdentityReport run_identity_check(int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("identity check needs samples >= 1");
    IdentityReport report;
    report.samples = samples;

    auto rng = make_trial_rng(seed, 0x4944454eull);
    std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < samples; ++i) {
        const double phi0 = phase(rng);
        const double phi1 = phase(rng);
        const double dev = operator_norm(conjugated_dephase(phi0, phi1) -
                                         conjugated_dephase_closed_form(phi0, phi1));
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.zero_case_deviation =
        operator_norm(conjugated_dephase(0.0, 0.0) - Mat2::identity());
    report.pi_case_deviation =
        operator_norm(conjugated_dephase(0.0, std::numbers::pi) + pauli_x());
    report.pass = report.max_deviation < 1e-12 && report.zero_case_deviation < 1e-12 &&
                  report.pi_case_deviation < 1e-12;
    return report;
}

std::string format_report(const IdentityReport& r) {
    std::ostringstream out;
    out << "identity-check: " << r.samples << " random phase pairs\n";
    out << "max |product - closed form|: " << format_double(r.max_deviation) << "\n";
    out << "(0,0) vs identity: " << format_double(r.zero_case_deviation) << "\n";
    out << "(0,pi) vs -X: " << format_double(r.pi_case_deviation) << "\n";
    out << (r.pass ? "PASS" : "FAIL") << ": threshold 1e-12\n";
    return out.str();
}

double decoded_fidelity(const CodeSpec& spec, const std::vector<CircuitOp>& error_ops,
                        cplx alpha, cplx beta, int qubit_cap) {
    const CircuitPair code = multi_block_encode(spec, qubit_cap);
    QuantumState state = init_state(spec.width(), alpha, beta, qubit_cap);
    run_quantum(code.encode, state);
    for (const CircuitOp& op : error_ops) apply_op(state, op);
    run_quantum(code.decode, state);
    return fidelity_with(state, alpha, beta);
}

}  // namespace qdc

#include "qdc/noise.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdc {

DephasingModel DephasingModel::fixed_phases(std::vector<FixedPhase> phases) {
    DephasingModel m;
    m.mode = Mode::FixedPhases;
    m.fixed = std::move(phases);
    return m;
}

DephasingModel DephasingModel::iid(PhaseDistribution dist, double sigma,
                                   std::vector<int> qubits) {
    if (sigma < 0.0 || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be finite and non-negative");
    }
    DephasingModel m;
    m.mode = Mode::IID;
    m.distribution = dist;
    m.sigma = sigma;
    m.qubits = std::move(qubits);
    return m;
}

DephasingModel DephasingModel::single_random_qubit(PhaseDistribution dist, double sigma) {
    DephasingModel m = iid(dist, sigma);
    m.mode = Mode::SingleRandomQubit;
    return m;
}

DephasingModel DephasingModel::pauli_z_enumeration(int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("enumeration weight must be >= 0");
    DephasingModel m;
    m.mode = Mode::PauliZEnumeration;
    m.max_weight = max_weight;
    return m;
}

DephasingModel DephasingModel::correlated(int qubit_a, int qubit_b, double phi) {
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("correlated pair needs two distinct qubits");
    }
    if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
    DephasingModel m;
    m.mode = Mode::Correlated;
    m.pair_a = qubit_a;
    m.pair_b = qubit_b;
    m.pair_phi = phi;
    return m;
}

namespace {

const char* dist_name(PhaseDistribution d) {
    return d == PhaseDistribution::Gaussian ? "gauss" : "uniform";
}

}  // namespace

std::string DephasingModel::label() const {
    switch (mode) {
        case Mode::FixedPhases: return "fixed";
        case Mode::IID: return std::string("iid:") + dist_name(distribution);
        case Mode::SingleRandomQubit: return std::string("single:") + dist_name(distribution);
        case Mode::PauliZEnumeration: return "enum:w=" + std::to_string(max_weight);
        case Mode::Correlated:
            return "corr:" + std::to_string(pair_a) + "," + std::to_string(pair_b);
    }
    return "?";
}

namespace {

double parse_number(std::string_view text) {
    if (text == "pi") return std::numbers::pi;
    if (text == "-pi") return -std::numbers::pi;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' in model spec");
    }
    return value;
}

// "key=value" -> value for an expected key.
std::string_view expect_kv(std::string_view part, std::string_view key) {
    if (part.substr(0, key.size()) != key || part.size() <= key.size() ||
        part[key.size()] != '=') {
        throw std::invalid_argument("expected '" + std::string(key) + "=...' in model spec, got '" +
                                    std::string(part) + "'");
    }
    return part.substr(key.size() + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

PhaseDistribution parse_dist(std::string_view word) {
    if (word == "gauss" || word == "gaussian") return PhaseDistribution::Gaussian;
    if (word == "uniform") return PhaseDistribution::Uniform;
    throw std::invalid_argument("unknown distribution '" + std::string(word) + "'");
}

}  // namespace

DephasingModel parse_model(std::string_view text) {
    std::size_t colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? "" : text.substr(colon + 1);
    auto parts = split(rest, ',');

    if (head == "fixed") {
        if (parts.size() != 3) {
            throw std::invalid_argument("fixed model needs q=,phi0=,phi1=");
        }
        DephasingModel::FixedPhase p{};
        p.qubit = static_cast<int>(parse_number(expect_kv(parts[0], "q")));
        p.phi0 = parse_number(expect_kv(parts[1], "phi0"));
        p.phi1 = parse_number(expect_kv(parts[2], "phi1"));
        return DephasingModel::fixed_phases({p});
    }
    if (head == "iid" || head == "single") {
        if (parts.size() != 2) {
            throw std::invalid_argument(std::string(head) + " model needs <dist>,sigma=");
        }
        PhaseDistribution dist = parse_dist(parts[0]);
        double sigma = parse_number(expect_kv(parts[1], "sigma"));
        return head == "iid" ? DephasingModel::iid(dist, sigma)
                             : DephasingModel::single_random_qubit(dist, sigma);
    }
    if (head == "enum") {
        if (parts.size() != 1) throw std::invalid_argument("enum model needs w=");
        return DephasingModel::pauli_z_enumeration(
            static_cast<int>(parse_number(expect_kv(parts[0], "w"))));
    }
    if (head == "corr") {
        if (parts.size() != 3) throw std::invalid_argument("corr model needs q=a,b,phi=");
        int a = static_cast<int>(parse_number(expect_kv(parts[0], "q")));
        int b = static_cast<int>(parse_number(parts[1]));
        double phi = parse_number(expect_kv(parts[2], "phi"));
        return DephasingModel::correlated(a, b, phi);
    }
    throw std::invalid_argument("unknown model '" + std::string(head) + "'");
}

namespace {

double draw_phase(PhaseDistribution dist, double sigma, std::mt19937_64& rng) {
    if (sigma == 0.0) return 0.0;
    if (dist == PhaseDistribution::Gaussian) {
        return std::normal_distribution<double>(0.0, sigma)(rng);
    }
    return std::uniform_real_distribution<double>(-sigma, sigma)(rng);
}

void check_qubit_in_width(int q, int width) {
    if (q < 0 || q >= width) {
        throw std::invalid_argument("model qubit " + std::to_string(q) +
                                    " out of range for width " + std::to_string(width));
    }
}

}  // namespace

std::vector<CircuitOp> sample_error(const DephasingModel& model, int width,
                                    std::mt19937_64& rng) {
    if (width < 1) throw std::invalid_argument("width must be positive");
    std::vector<CircuitOp> ops;
    switch (model.mode) {
        case DephasingModel::Mode::FixedPhases:
            for (const auto& p : model.fixed) {
                check_qubit_in_width(p.qubit, width);
                ops.push_back(CircuitOp::dephase(p.qubit, p.phi0, p.phi1));
            }
            break;
        case DephasingModel::Mode::IID: {
            std::vector<int> targets = model.qubits;
            if (targets.empty()) {
                targets.resize(width);
                for (int q = 0; q < width; ++q) targets[q] = q;
            }
            for (int q : targets) {
                check_qubit_in_width(q, width);
                ops.push_back(
                    CircuitOp::dephase(q, 0.0, draw_phase(model.distribution, model.sigma, rng)));
            }
            break;
        }
        case DephasingModel::Mode::SingleRandomQubit: {
            int q = static_cast<int>(std::uniform_int_distribution<int>(0, width - 1)(rng));
            ops.push_back(
                CircuitOp::dephase(q, 0.0, draw_phase(model.distribution, model.sigma, rng)));
            break;
        }
        case DephasingModel::Mode::Correlated:
            check_qubit_in_width(model.pair_a, width);
            check_qubit_in_width(model.pair_b, width);
            ops.push_back(CircuitOp::cphase(model.pair_a, model.pair_b, model.pair_phi));
            break;
        case DephasingModel::Mode::PauliZEnumeration:
            throw std::invalid_argument("enumeration models are exhaustive, not sampled");
    }
    return ops;
}

std::vector<std::vector<CircuitOp>> enumerate_pauli_z(int width, int max_weight) {
    if (width < 1) throw std::invalid_argument("width must be positive");
    if (max_weight < 0 || max_weight > width) {
        throw std::invalid_argument("enumeration weight must lie in [0, width]");
    }
    std::vector<std::vector<CircuitOp>> patterns;
    // Basis indices double as subsets; keep ascending-weight order.
    for (int w = 0; w <= max_weight; ++w) {
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << width); ++subset) {
            if (std::popcount(subset) != w) continue;
            std::vector<CircuitOp> ops;
            for (int q = 0; q < width; ++q) {
                if ((subset >> q) & 1u) {
                    ops.push_back(CircuitOp::dephase(q, 0.0, std::numbers::pi));
                }
            }
            patterns.push_back(std::move(ops));
        }
    }
    return patterns;
}

double expected_cos(double sigma, PhaseDistribution dist) {
    if (sigma == 0.0) return 1.0;
    if (dist == PhaseDistribution::Gaussian) return std::exp(-sigma * sigma / 2.0);
    return std::sin(sigma) / sigma;
}

double unencoded_mean_fidelity(double sigma, PhaseDistribution dist, cplx alpha, cplx beta) {
    if (sigma < 0.0 || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be finite and non-negative");
    }
    double p = std::norm(alpha) * std::norm(beta);
    return 1.0 - 2.0 * p * (1.0 - expected_cos(sigma, dist));
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::mt19937_64 make_trial_rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state ^= stream * 0xD1342543DE82EF95ull + 0x632BE59BD9B4E019ull;
    std::uint64_t b = splitmix64(state);
    return std::mt19937_64(a ^ (b + 0x9E3779B97F4A7C15ull));
}

}  // namespace qdc

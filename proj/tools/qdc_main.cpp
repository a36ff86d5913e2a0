// Command-line harness: verification suites, fidelity sweeps, circuit
// emission, and single-circuit runs for the dephasing-correction codes.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "qdc/experiment.hpp"

namespace {

struct GlobalOptions {
    std::uint64_t seed = 1;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int qubit_cap = qdc::kDefaultQubitCap;
    std::string out;
};

void add_globals(CLI::App* cmd, GlobalOptions& globals) {
    cmd->add_option("--seed", globals.seed, "random seed (64-bit)");
    cmd->add_option("--threads", globals.threads, "worker threads for Monte-Carlo trials");
    cmd->add_option("--qubit-cap", globals.qubit_cap, "maximum register width");
    cmd->add_option("--out", globals.out, "output file or directory");
}

double parse_radians(const std::string& text) {
    if (text == "pi") return std::numbers::pi;
    if (text == "-pi") return -std::numbers::pi;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number '" + text + "'");
    }
    return v;
}

qdc::cplx parse_complex(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("complex values are written 're,im'");
    }
    return {parse_radians(text.substr(0, comma)), parse_radians(text.substr(comma + 1))};
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_verify(const GlobalOptions& globals, int t, int weight, int grid, int inputs) {
    qdc::VerifyOptions options;
    options.t = t;
    options.max_error_weight = weight < 0 ? t : weight;
    options.grid_points = grid;
    options.random_inputs = inputs;
    options.seed = globals.seed;
    options.qubit_cap = globals.qubit_cap;
    qdc::VerifyReport report = qdc::run_verify(options);
    std::cout << qdc::format_report(report);
    return report.pass ? 0 : 1;
}

int cmd_sweep(const GlobalOptions& globals, const qdc::SweepConfig& base) {
    qdc::SweepConfig config = base;
    config.seed = globals.seed;
    config.threads = globals.threads;
    config.qubit_cap = globals.qubit_cap;
    std::ostringstream csv;
    csv << qdc::csv_header() << "\n";
    for (const auto& record : qdc::run_sweep(config)) {
        csv << qdc::to_csv_row(record) << "\n";
    }
    if (globals.out.empty()) {
        std::cout << csv.str();
    } else {
        write_text_file(globals.out, csv.str());
    }
    return 0;
}

int cmd_emit(const GlobalOptions& globals, int t, int k) {
    qdc::CodeSpec spec{t, k};
    qdc::CircuitPair code = qdc::multi_block_encode(spec, globals.qubit_cap);
    std::filesystem::path dir = globals.out.empty() ? "." : globals.out;
    std::filesystem::create_directories(dir);
    const std::string stem = "code_t" + std::to_string(t) + "_k" + std::to_string(k);
    const auto encode_path = dir / (stem + "_encode.qc");
    const auto decode_path = dir / (stem + "_decode.qc");
    write_text_file(encode_path, qdc::serialize_circuit(code.encode));
    write_text_file(decode_path, qdc::serialize_circuit(code.decode));
    std::cout << encode_path.string() << "\n" << decode_path.string() << "\n";
    return 0;
}

int cmd_identity_check(const GlobalOptions& globals, int samples) {
    qdc::IdentityReport report = qdc::run_identity_check(samples, globals.seed);
    std::cout << qdc::format_report(report);
    return report.pass ? 0 : 1;
}

int cmd_run(const GlobalOptions& globals, const std::string& circuit_path,
            const std::string& alpha_text, const std::string& beta_text) {
    qdc::Circuit circuit = qdc::parse_circuit(read_text_file(circuit_path));
    const qdc::cplx alpha = parse_complex(alpha_text);
    const qdc::cplx beta = parse_complex(beta_text);
    qdc::QuantumState state =
        qdc::init_state(circuit.n_qubits, alpha, beta, globals.qubit_cap);
    qdc::run_quantum(circuit, state);
    std::ostringstream out;
    out << "qubits " << state.n_qubits << "\n";
    for (std::size_t i = 0; i < state.dim(); ++i) {
        out << "amp " << i << " " << qdc::format_double(state.amps[i].real()) << " "
            << qdc::format_double(state.amps[i].imag()) << "\n";
    }
    out << "data_fidelity " << qdc::format_double(qdc::fidelity_with(state, alpha, beta))
        << "\n";
    if (globals.out.empty()) {
        std::cout << out.str();
    } else {
        write_text_file(globals.out, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-vector simulator for minimal dephasing-correction codes"};
    app.require_subcommand(1);
    GlobalOptions globals;

    auto* verify = app.add_subcommand(
        "verify", "enumerate errors against a code and report the worst infidelity");
    int verify_t = 1, verify_weight = -1, verify_grid = 20, verify_inputs = 100;
    verify->add_option("--t", verify_t, "correctable dephasings per block")->required();
    verify->add_option("--weight", verify_weight, "max error weight to enumerate (default t)");
    verify->add_option("--grid", verify_grid, "phase grid points per qubit subset");
    verify->add_option("--inputs", verify_inputs, "random input states");
    add_globals(verify, globals);

    auto* sweep = app.add_subcommand("sweep", "Monte-Carlo fidelity sweep, CSV output");
    qdc::SweepConfig sweep_config;
    std::string sweep_model = "iid:gauss,sigma=0";
    std::string sweep_input = "rand";
    sweep->add_option("--t", sweep_config.code.t, "correctable dephasings per block");
    sweep->add_option("--k", sweep_config.code.k, "logical qubits");
    sweep->add_option("--model", sweep_model, "noise model (iid:... or single:...)");
    sweep->add_option("--sigmas", sweep_config.sigmas, "comma-separated noise strengths")
        ->required()
        ->delimiter(',');
    sweep->add_option("--trials", sweep_config.trials, "Monte-Carlo trials per row");
    sweep->add_option("--input", sweep_input,
                      "input state: rand, zero, one, plus, minus, i, or re,im,re,im");
    sweep->add_flag("--no-unencoded", "omit the unencoded baseline rows");
    add_globals(sweep, globals);

    auto* emit = app.add_subcommand("emit", "write encode/decode circuit files");
    int emit_t = 1, emit_k = 1;
    emit->add_option("--t", emit_t, "correctable dephasings per block")->required();
    emit->add_option("--k", emit_k, "logical qubits");
    add_globals(emit, globals);

    auto* identity = app.add_subcommand(
        "identity-check", "compare the conjugated dephase gate against its closed form");
    int identity_samples = 1000;
    identity->add_option("--samples", identity_samples, "random phase pairs");
    add_globals(identity, globals);

    auto* run = app.add_subcommand("run", "apply a circuit file to a data state");
    std::string run_circuit, run_alpha = "1,0", run_beta = "0,0";
    run->add_option("--circuit", run_circuit, "circuit text file")->required();
    run->add_option("--alpha", run_alpha, "data amplitude for |0>, 're,im' (pi allowed)");
    run->add_option("--beta", run_beta, "data amplitude for |1>, 're,im' (pi allowed)");
    add_globals(run, globals);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(globals, verify_t, verify_weight, verify_grid, verify_inputs);
        }
        if (sweep->parsed()) {
            sweep_config.model = qdc::parse_model(sweep_model);
            sweep_config.input = qdc::InputState::parse(sweep_input);
            sweep_config.include_unencoded = sweep->count("--no-unencoded") == 0;
            return cmd_sweep(globals, sweep_config);
        }
        if (emit->parsed()) return cmd_emit(globals, emit_t, emit_k);
        if (identity->parsed()) return cmd_identity_check(globals, identity_samples);
        if (run->parsed()) return cmd_run(globals, run_circuit, run_alpha, run_beta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

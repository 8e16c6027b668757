// sefcc — construct, validate, census-certify and channel-simulate
// single-error-correcting function-correcting codes for the [7,4,3]
// Hamming membership function.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sefcc/channel.hpp"
#include "sefcc/enumeration.hpp"
#include "sefcc/fcc.hpp"
#include "sefcc/hamming.hpp"
#include "sefcc/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // validation / certification failure
constexpr int kExitUsage = 2;  // usage, option or file parse error

int default_workers() {
    if (const char* env = std::getenv("SEFCC_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::vector<int> to_zero_based(const std::vector<int>& one_based) {
    std::vector<int> out;
    out.reserve(one_based.size());
    for (int v : one_based) out.push_back(v - 1);
    return out;
}

std::string code_id(const std::string& path, const sefcc::ParityAssignment& pa) {
    return path + ":" + sefcc::fnv1a_hex(sefcc::format_assignment(pa));
}

void write_manifest(const std::string& subcommand, const std::map<std::string, std::string>& params,
                    const std::map<std::string, std::string>& inputs, const std::vector<std::string>& outputs,
                    const std::string& manifest_path) {
    if (manifest_path.empty()) return;
    sefcc::RunManifest m;
    m.subcommand = subcommand;
    m.parameters = params;
    for (const auto& [path, hash] : inputs) m.input_hashes[path] = hash;
    for (const std::string& path : outputs) m.output_hashes[path] = sefcc::file_hash_hex(path);
    sefcc::write_text_file(manifest_path, m.to_json());
}

struct ConstructArgs {
    std::string kind;
    std::vector<int> odd_subset{3, 4, 5, 6};   // 1-based codeword indices
    std::vector<int> even_subset{1, 2, 7, 8};  // 1-based codeword indices
    bool swap_roles = false;
    std::string parity = "00";
    std::string out;
    std::string manifest;
};

int cmd_construct(const ConstructArgs& args) {
    const sefcc::HammingCodebook cb;
    const sefcc::Distance3Graph g = sefcc::distance3_graph(cb);

    sefcc::ParityAssignment pa;
    std::map<std::string, std::string> params{{"kind", args.kind}};
    if (args.kind == "max-sum") {
        pa = sefcc::construct_max_sum(to_zero_based(args.odd_subset), to_zero_based(args.even_subset),
                                      args.swap_roles, g);
        std::string os, es;
        for (int v : args.odd_subset) os += (os.empty() ? "" : ",") + std::to_string(v);
        for (int v : args.even_subset) es += (es.empty() ? "" : ",") + std::to_string(v);
        params["odd_subset"] = os;
        params["even_subset"] = es;
        params["swap"] = args.swap_roles ? "1" : "0";
    } else {
        pa = sefcc::optimal_fer_assignment(sefcc::Word::parse(args.parity));
        params["parity"] = args.parity;
    }

    const std::string out = args.out.empty() ? (args.kind == "max-sum" ? "max_sum.txt" : "optimal_fer.txt") : args.out;
    sefcc::save_assignment(out, pa);

    const sefcc::SefccCode code(cb, pa);
    const sefcc::DistanceSpectrum sp = sefcc::spectrum(code);
    std::cout << "wrote " << out << "\n"
              << "sum=" << sp.sum_distance << " dmin=" << sp.d_min << " n2=" << sp.counts[2] << "\n";

    params["out"] = out;
    const std::string manifest = args.manifest.empty() ? out + ".manifest.json" : args.manifest;
    write_manifest("construct", params, {}, {out}, manifest);
    return kExitOk;
}

struct ValidateArgs {
    std::string file;
    std::string out;
    std::string manifest;
    bool spectrum_only = false;  // spectrum subcommand reuses this path
};

int cmd_validate(const ValidateArgs& args) {
    const sefcc::HammingCodebook cb;
    const sefcc::Distance3Graph g = sefcc::distance3_graph(cb);
    const sefcc::ParityAssignment pa = sefcc::load_assignment(args.file);
    const sefcc::SefccCode code(cb, pa);
    const sefcc::DistanceSpectrum sp = sefcc::spectrum(code);
    const bool valid = sefcc::is_valid(pa, g);
    const std::string csv = sefcc::spectrum_csv(sp);

    if (!args.spectrum_only) {
        std::cout << "valid=" << (valid ? "yes" : "no") << "\n"
                  << "dmin=" << sp.d_min << "\n"
                  << "sum=" << sp.sum_distance << "\n"
                  << "n2=" << sp.counts[2] << "\n";
    }
    std::cout << csv;
    std::vector<std::string> outputs;
    if (!args.out.empty()) {
        sefcc::write_text_file(args.out, csv);
        outputs.push_back(args.out);
    }
    write_manifest(args.spectrum_only ? "spectrum" : "validate",
                   {{"file", args.file}, {"out", args.out}},
                   {{args.file, sefcc::file_hash_hex(args.file)}}, outputs,
                   args.manifest.empty() ? (args.out.empty() ? "" : args.out + ".manifest.json") : args.manifest);
    if (args.spectrum_only) return kExitOk;
    return valid ? kExitOk : kExitFail;
}

struct CertifyArgs {
    std::string strategy = "backtracking";
    int workers = default_workers();
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0xC0DEC0DE;
    std::string out;
    std::string manifest;
};

int cmd_certify(const CertifyArgs& args) {
    const sefcc::HammingCodebook cb;
    const sefcc::Distance3Graph g = sefcc::distance3_graph(cb);
    sefcc::CertifyOptions opts;
    opts.strategy.mode = args.strategy == "full-sweep" ? sefcc::SearchStrategy::Mode::full_sweep
                                                       : sefcc::SearchStrategy::Mode::backtracking;
    opts.strategy.worker_count = args.workers;
    opts.random_samples = args.samples;
    opts.seed = args.seed;

    const sefcc::CertificationReport report = sefcc::certify_theorems(cb, g, opts);
    const std::string text = report.to_text();
    std::cout << text;
    std::vector<std::string> outputs;
    if (!args.out.empty()) {
        sefcc::write_text_file(args.out, text);
        outputs.push_back(args.out);
    }
    write_manifest("certify",
                   {{"strategy", args.strategy},
                    {"workers", std::to_string(args.workers)},
                    {"samples", std::to_string(args.samples)},
                    {"seed", std::to_string(args.seed)},
                    {"out", args.out}},
                   {}, outputs,
                   args.manifest.empty() ? (args.out.empty() ? "" : args.out + ".manifest.json") : args.manifest);
    return report.all_pass ? kExitOk : kExitFail;
}

struct SimulateArgs {
    std::string file;
    std::string compare_file;
    double snr_start = 0.0, snr_stop = 9.0, snr_step = 1.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = default_workers();
    bool allow_invalid = false;
    std::string out = "sim.csv";
    std::string manifest;
};

int cmd_simulate(const SimulateArgs& args) {
    const sefcc::HammingCodebook cb;
    const sefcc::Distance3Graph g = sefcc::distance3_graph(cb);
    const sefcc::BooleanFunction f = sefcc::hamming_membership(cb);

    auto load_code = [&](const std::string& path) {
        const sefcc::ParityAssignment pa = sefcc::load_assignment(path);
        if (!sefcc::is_valid(pa, g) && !args.allow_invalid)
            throw std::runtime_error(path + ": assignment is not a valid SEFCC (use --allow-invalid to simulate anyway)");
        return pa;
    };

    sefcc::SimConfig cfg;
    cfg.ebn0_db_points = sefcc::SimConfig::sweep(args.snr_start, args.snr_stop, args.snr_step);
    cfg.trials_per_point = args.trials;
    cfg.seed = args.seed;
    cfg.workers = args.workers;

    const sefcc::ParityAssignment pa = load_code(args.file);
    const sefcc::SefccCode code(cb, pa);
    const sefcc::SimResult res = sefcc::run_simulation(code, f, cfg);

    std::map<std::string, std::string> inputs{{args.file, sefcc::file_hash_hex(args.file)}};
    std::string csv;
    if (args.compare_file.empty()) {
        csv = sefcc::simulation_csv(res, code_id(args.file, pa), args.seed);
    } else {
        const sefcc::ParityAssignment pb = load_code(args.compare_file);
        const sefcc::SefccCode code_b(cb, pb);
        const sefcc::SimResult res_b = sefcc::run_simulation(code_b, f, cfg);
        csv = sefcc::comparison_csv(res, res_b, code_id(args.file, pa), code_id(args.compare_file, pb), args.seed);
        inputs[args.compare_file] = sefcc::file_hash_hex(args.compare_file);
    }
    sefcc::write_text_file(args.out, csv);
    std::cout << "wrote " << args.out << "\n";

    write_manifest("simulate",
                   {{"file", args.file},
                    {"compare", args.compare_file},
                    {"snr_start", fmt_double(args.snr_start)},
                    {"snr_stop", fmt_double(args.snr_stop)},
                    {"snr_step", fmt_double(args.snr_step)},
                    {"trials", std::to_string(args.trials)},
                    {"seed", std::to_string(args.seed)},
                    {"workers", std::to_string(args.workers)},
                    {"allow_invalid", args.allow_invalid ? "1" : "0"},
                    {"out", args.out}},
                   inputs, {args.out}, args.manifest.empty() ? args.out + ".manifest.json" : args.manifest);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for single-error-correcting function-correcting codes over the [7,4,3] Hamming "
                 "membership function"};
    app.require_subcommand(1);

    ConstructArgs cargs;
    CLI::App* construct = app.add_subcommand("construct", "Build a parity assignment and write it to a file");
    construct->add_option("kind", cargs.kind, "Construction kind")
        ->required()
        ->check(CLI::IsMember({"max-sum", "optimal-fer"}));
    construct->add_option("--odd-subset", cargs.odd_subset,
                          "Four 1-based odd-partite codeword indices that receive the first parity of their pair");
    construct->add_option("--even-subset", cargs.even_subset,
                          "Four 1-based even-partite codeword indices that receive the first parity of their pair");
    construct->add_flag("--swap", cargs.swap_roles, "Swap the parity-pair roles of the two partite sets");
    construct->add_option("--parity", cargs.parity, "optimal-fer: parity given to vectors where the function is 0");
    construct->add_option("--out", cargs.out, "Output assignment file");
    construct->add_option("--manifest", cargs.manifest, "Manifest path (default: <out>.manifest.json)");

    ValidateArgs vargs;
    CLI::App* validate = app.add_subcommand("validate", "Check an assignment file; exit 0 iff valid");
    validate->add_option("file", vargs.file, "Assignment file")->required();
    validate->add_option("--out", vargs.out, "Also write the spectrum CSV here");
    validate->add_option("--manifest", vargs.manifest, "Manifest path");

    ValidateArgs sargs;
    sargs.spectrum_only = true;
    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Print the distance spectrum CSV of an assignment");
    spectrum_cmd->add_option("file", sargs.file, "Assignment file")->required();
    spectrum_cmd->add_option("--out", sargs.out, "Also write the spectrum CSV here");
    spectrum_cmd->add_option("--manifest", sargs.manifest, "Manifest path");

    CertifyArgs certargs;
    CLI::App* certify = app.add_subcommand("certify", "Run the census and certify the distance theorems");
    certify->add_option("--strategy", certargs.strategy, "Search strategy")
        ->check(CLI::IsMember({"backtracking", "full-sweep"}));
    certify->add_option("--workers", certargs.workers, "Worker threads (census shards)");
    certify->add_option("--samples", certargs.samples, "Random assignments for the equivalence checks");
    certify->add_option("--seed", certargs.seed, "Sampling seed");
    certify->add_option("--out", certargs.out, "Also write the report here");
    certify->add_option("--manifest", certargs.manifest, "Manifest path");

    SimulateArgs simargs;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo BER/FER over BPSK/AWGN with soft ML decoding");
    simulate->add_option("file", simargs.file, "Assignment file")->required();
    simulate->add_option("--compare", simargs.compare_file, "Second assignment file for a joined comparison CSV");
    simulate->add_option("--snr-start", simargs.snr_start, "Sweep start, Eb/N0 dB");
    simulate->add_option("--snr-stop", simargs.snr_stop, "Sweep stop, Eb/N0 dB");
    simulate->add_option("--snr-step", simargs.snr_step, "Sweep step, dB");
    simulate->add_option("--trials", simargs.trials, "Trials per Eb/N0 point");
    simulate->add_option("--seed", simargs.seed, "RNG seed");
    simulate->add_option("--workers", simargs.workers, "Worker threads");
    simulate->add_flag("--allow-invalid", simargs.allow_invalid, "Simulate assignments that fail validation");
    simulate->add_option("--out", simargs.out, "Output CSV path");
    simulate->add_option("--manifest", simargs.manifest, "Manifest path (default: <out>.manifest.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(cargs);
        if (validate->parsed()) return cmd_validate(vargs);
        if (spectrum_cmd->parsed()) return cmd_validate(sargs);
        if (certify->parsed()) return cmd_certify(certargs);
        if (simulate->parsed()) return cmd_simulate(simargs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

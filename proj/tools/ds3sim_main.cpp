// Command-line harness for the D(S3) lattice simulator: seeded Monte Carlo
// experiments with machine-readable JSON/CSV reports.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ds3/experiments.hpp"

namespace {

struct CommonOpts {
    int rows = 2;
    int cols = 2;
    std::string boundary = "open";
    std::string encoding = "phipair";
    std::vector<int> l_values;
    double p = 0.05;
    long trials = 10000;
    int steps = 1;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    int threads = 0;
    std::vector<std::string> errors;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--rows", o.rows, "Lattice vertex rows");
    cmd->add_option("--cols", o.cols, "Lattice vertex columns");
    cmd->add_option("--boundary", o.boundary, "Lattice boundary: open|periodic");
    cmd->add_option("--encoding", o.encoding, "Logical encoding: lambda|phipair|strong");
    cmd->add_option("--l", o.l_values, "Separation value(s)")->delimiter(',');
    cmd->add_option("--p", o.p, "Per-spin per-step error probability");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--steps", o.steps, "Noise steps per trial");
    cmd->add_option("--seed", o.seed, "Master RNG seed");
    cmd->add_option("--out", o.out, "Write the report to FILE instead of stdout");
    cmd->add_option("--format", o.format, "Report format: json|csv");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
    cmd->add_option("--errors", o.errors,
                    "Noise error set, e.g. signflip,phasepattern,leftmul:c")
        ->delimiter(',');
    cmd->set_config("--config", "", "Plain key=value config file; flags override it");
}

ds3::EncodingKind encoding_of(const CommonOpts& o) {
    const auto kind = ds3::parse_encoding(o.encoding);
    if (!kind) throw CLI::ValidationError("--encoding", "expected lambda|phipair|strong");
    return *kind;
}

ds3::Boundary boundary_of(const CommonOpts& o) {
    const auto b = ds3::parse_boundary(o.boundary);
    if (!b) throw CLI::ValidationError("--boundary", "expected open|periodic");
    return *b;
}

std::vector<ds3::ErrorOp> errors_of(const CommonOpts& o) {
    if (o.errors.empty()) return {ds3::make_sign_flip()};
    std::vector<ds3::ErrorOp> ops;
    for (const std::string& name : o.errors) {
        const auto op = ds3::parse_error_op(name);
        if (!op) throw CLI::ValidationError("--errors", "unknown error op: " + name);
        ops.push_back(*op);
    }
    return ops;
}

void emit(const ds3::ExperimentReport& report, const CommonOpts& o,
          std::chrono::steady_clock::time_point started) {
    std::string body;
    if (o.format == "json") {
        body = report.to_json();
    } else if (o.format == "csv") {
        body = report.to_csv();
    } else {
        throw CLI::ValidationError("--format", "expected json|csv");
    }
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + o.out);
        f << body;
        std::cout << "report written to " << o.out << "\n";
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << report.experiment << ": wall " << elapsed << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D(S3) quantum double lattice simulator"};
    app.require_subcommand(1);

    CommonOpts fusion_opts, supp_opts, dist_opts, had_opts, gs_opts;
    auto* fusion = app.add_subcommand("fusion-stats", "Phi x Phi fusion channel statistics");
    add_common_flags(fusion, fusion_opts);
    supp_opts.trials = 1000;
    auto* supp = app.add_subcommand("suppression", "Logical error suppression vs separation");
    add_common_flags(supp, supp_opts);
    auto* dist = app.add_subcommand("distinguish", "LOCC vs fusion distinguishability");
    add_common_flags(dist, dist_opts);
    auto* had = app.add_subcommand("hadamard", "Repeat-until-success Hadamard statistics");
    add_common_flags(had, had_opts);
    auto* gsc = app.add_subcommand("ground-state-check", "Stabilizer-space verification");
    add_common_flags(gsc, gs_opts);

    CLI11_PARSE(app, argc, argv);
    const auto started = std::chrono::steady_clock::now();

    try {
        if (fusion->parsed()) {
            ds3::FusionConfig cfg;
            cfg.trials = fusion_opts.trials;
            cfg.threads = fusion_opts.threads;
            emit(ds3::run_fusion_stats(cfg, fusion_opts.seed), fusion_opts, started);
        } else if (supp->parsed()) {
            ds3::SuppressionConfig cfg;
            if (!supp_opts.l_values.empty()) cfg.l_values = supp_opts.l_values;
            cfg.p = supp_opts.p;
            cfg.trials = supp_opts.trials;
            cfg.steps = supp_opts.steps;
            cfg.encoding = encoding_of(supp_opts);
            cfg.errors = errors_of(supp_opts);
            cfg.threads = supp_opts.threads;
            emit(ds3::run_error_suppression(cfg, supp_opts.seed), supp_opts, started);
        } else if (dist->parsed()) {
            ds3::DistinguishConfig cfg;
            cfg.encoding = encoding_of(dist_opts);
            cfg.trials = dist_opts.trials;
            cfg.threads = dist_opts.threads;
            emit(ds3::run_distinguishability(cfg, dist_opts.seed), dist_opts, started);
        } else if (had->parsed()) {
            ds3::HadamardConfig cfg;
            cfg.trials = had_opts.trials;
            cfg.threads = had_opts.threads;
            emit(ds3::run_hadamard_stats(cfg, had_opts.seed), had_opts, started);
        } else if (gsc->parsed()) {
            ds3::GroundCheckConfig cfg;
            cfg.rows = gs_opts.rows;
            cfg.cols = gs_opts.cols;
            cfg.boundary = boundary_of(gs_opts);
            emit(ds3::run_ground_state_check(cfg, gs_opts.seed), gs_opts, started);
        }
    } catch (const CLI::Error& err) {
        return app.exit(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

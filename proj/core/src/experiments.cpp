#include "ds3/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace ds3 {

namespace {

int resolve_threads(int threads, long trials) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    return static_cast<int>(std::min<long>(threads, std::max<long>(trials, 1)));
}

// Runs fn(trial_index) across a pool; per-trial results must be written to
// index-addressed storage so aggregation is scheduling-independent.
template <typename Fn>
void parallel_trials(long trials, int threads, const Fn& fn) {
    threads = resolve_threads(threads, trials);
    if (threads == 1) {
        for (long i = 0; i < trials; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

double binomial_stderr(double rate, long n) {
    if (n <= 0) return 0.0;
    return std::sqrt(std::max(rate * (1.0 - rate), 0.0) / static_cast<double>(n));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int manhattan(const Lattice& lat, VertexId a, VertexId b) {
    return std::abs(lat.vertex_row(a) - lat.vertex_row(b)) +
           std::abs(lat.vertex_col(a) - lat.vertex_col(b));
}

nlohmann::ordered_json errors_json(const std::vector<ErrorOp>& errors) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ErrorOp& op : errors) arr.push_back(op.label());
    return arr;
}

std::uint64_t point_seed(std::uint64_t master, std::uint64_t salt) {
    return splitmix64(master ^ splitmix64(salt));
}

}  // namespace

ExperimentPoint ExperimentPoint::value(std::string label, double mean, long n) {
    ExperimentPoint p;
    p.label = std::move(label);
    p.mean = mean;
    p.n = n;
    return p;
}

ExperimentPoint ExperimentPoint::rate(std::string label, double successes, long n) {
    ExperimentPoint p;
    p.label = std::move(label);
    p.mean = n > 0 ? successes / static_cast<double>(n) : 0.0;
    p.stderr_val = binomial_stderr(p.mean, n);
    p.n = n;
    return p;
}

ExperimentPoint ExperimentPoint::rate_at(double x, double successes, long n) {
    ExperimentPoint p = rate(format_double(x), successes, n);
    p.x = x;
    p.numeric = true;
    return p;
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["config"] = config;
    j["seed"] = seed;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const ExperimentPoint& p : points) {
        nlohmann::ordered_json jp;
        if (p.numeric) {
            jp["x"] = p.x;
        } else {
            jp["x"] = p.label;
        }
        jp["mean"] = p.mean;
        jp["stderr"] = p.stderr_val;
        jp["n"] = p.n;
        pts.push_back(std::move(jp));
    }
    j["points"] = std::move(pts);
    j["wall_ms"] = wall_ms;
    return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
    std::string out = "x,mean,stderr,n\n";
    for (const ExperimentPoint& p : points) {
        out += p.label;
        out += ',';
        out += format_double(p.mean);
        out += ',';
        out += format_double(p.stderr_val);
        out += ',';
        out += std::to_string(p.n);
        out += '\n';
    }
    return out;
}

const ExperimentPoint* ExperimentReport::find(std::string_view label) const {
    for (const ExperimentPoint& p : points) {
        if (p.label == label) return &p;
    }
    return nullptr;
}

DecodeStats decode_lambda_syndrome(StateVector& s, const Syndrome& syndrome) {
    const Lattice& lat = s.lattice();
    std::vector<VertexId> visible;
    std::vector<VertexId> sinks;
    for (VertexId v = 0; v < lat.num_vertices(); ++v) {
        if (syndrome.vertices[static_cast<std::size_t>(v)] == ChargeType::Lambda) {
            visible.push_back(v);
        } else if (syndrome.vertices[static_cast<std::size_t>(v)] == ChargeType::Phi) {
            sinks.push_back(v);
        }
    }

    DecodeStats stats;
    stats.visible_lambdas = static_cast<int>(visible.size());
    while (!visible.empty()) {
        // Candidate = (distance, prefer pair over sink, endpoints); smallest wins.
        std::tuple<int, int, VertexId, VertexId> best{INT32_MAX, 0, -1, -1};
        for (std::size_t i = 0; i < visible.size(); ++i) {
            for (std::size_t j = i + 1; j < visible.size(); ++j) {
                best = std::min(best, std::make_tuple(manhattan(lat, visible[i], visible[j]), 0,
                                                      visible[i], visible[j]));
            }
            for (VertexId sink : sinks) {
                best = std::min(best, std::make_tuple(manhattan(lat, visible[i], sink), 1,
                                                      visible[i], sink));
            }
        }
        const auto [dist, is_sink, va, vb] = best;
        if (va < 0) {
            stats.unmatched = static_cast<int>(visible.size());
            break;
        }
        w_lambda_chain(s, lat.path_between(va, vb));
        std::erase(visible, va);
        if (is_sink) {
            ++stats.sink_matches;
        } else {
            std::erase(visible, vb);
            ++stats.pair_matches;
        }
    }
    return stats;
}

ChargeType suppression_readout(const LogicalQubit& qubit, StateVector state,
                               std::mt19937_64& rng) {
    auto [syndrome, post] = measure_syndrome(state, rng);
    decode_lambda_syndrome(post, syndrome);
    return measure_joint_charge(post, qubit.v1, qubit.v4, rng).outcome;
}

SuppressionSetup SuppressionSetup::make(int l, EncodingKind kind) {
    if (l < 1) throw std::invalid_argument("suppression: l must be >= 1");
    if (kind == EncodingKind::LambdaOnly) {
        throw std::invalid_argument(
            "suppression: syndrome decoding erases LambdaOnly data; use a Phi encoding");
    }
    SuppressionSetup setup;
    setup.lattice = std::make_unique<Lattice>(Lattice::grid(2, l + 1));
    StateVector gs = ground_state(*setup.lattice);
    setup.qubit =
        CodeRegister::plan_qubit(*setup.lattice, kind, setup.lattice->vertex_at(1, 0), l);
    for (int bit = 0; bit < 2; ++bit) {
        CodeRegister reg(*setup.lattice, gs);
        reg.add_qubit(setup.qubit);
        reg.encode(0, bit);
        setup.encoded.push_back(reg.state());
    }
    setup.qubit.encoded = true;
    return setup;
}

ExperimentReport run_error_suppression(const SuppressionConfig& cfg, std::uint64_t seed) {
    if (cfg.trials < 1) throw std::invalid_argument("suppression: trials must be >= 1");
    NoiseModel model{cfg.p, cfg.steps, cfg.errors};
    model.validate();

    ExperimentReport report;
    report.experiment = "suppression";
    report.seed = seed;
    report.config = {{"encoding", std::string(encoding_name(cfg.encoding))},
                     {"l", cfg.l_values},
                     {"p", cfg.p},
                     {"steps", cfg.steps},
                     {"trials", cfg.trials},
                     {"errors", errors_json(cfg.errors)},
                     {"lattice", "2 x (l+1) strip"}};

    for (int l : cfg.l_values) {
        const SuppressionSetup setup = SuppressionSetup::make(l, cfg.encoding);
        const std::uint64_t lseed = point_seed(seed, 0x5100 + static_cast<std::uint64_t>(l));
        std::vector<std::uint8_t> flips(static_cast<std::size_t>(cfg.trials), 0);
        parallel_trials(cfg.trials, cfg.threads, [&](long trial) {
            std::mt19937_64 rng = trial_rng(lseed, static_cast<std::uint64_t>(trial));
            StateVector state = setup.encoded[0];
            inject_noise(state, model, rng);
            const ChargeType channel = suppression_readout(setup.qubit, std::move(state), rng);
            flips[static_cast<std::size_t>(trial)] = channel == ChargeType::Lambda ? 1 : 0;
        });
        long nflips = 0;
        for (std::uint8_t f : flips) nflips += f;
        report.points.push_back(
            ExperimentPoint::rate_at(static_cast<double>(l), static_cast<double>(nflips),
                                     cfg.trials));
    }
    return report;
}

ExperimentReport run_distinguishability(const DistinguishConfig& cfg, std::uint64_t seed) {
    if (cfg.encoding == EncodingKind::LambdaOnly) {
        throw std::invalid_argument("distinguish: protocol undefined for LambdaOnly");
    }
    if (cfg.trials < 1) throw std::invalid_argument("distinguish: trials must be >= 1");

    const Lattice lat = Lattice::grid(2, 2);
    const StateVector gs = ground_state(lat);
    const LogicalQubit plan = CodeRegister::plan_qubit(lat, cfg.encoding, lat.vertex_at(1, 0), 1);

    // A fresh register per (trial, bit) would repeat identical chain algebra;
    // the two encoded states are deterministic, so cache them.
    std::vector<StateVector> encoded;
    for (int bit = 0; bit < 2; ++bit) {
        CodeRegister reg(lat, gs);
        reg.add_qubit(plan);
        reg.encode(0, bit);
        encoded.push_back(reg.state());
    }

    std::vector<std::uint8_t> locc_ok(static_cast<std::size_t>(cfg.trials));
    std::vector<std::uint8_t> fusion_ok(static_cast<std::size_t>(cfg.trials));
    parallel_trials(cfg.trials, cfg.threads, [&](long trial) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        const int bit = uniform_double(rng) < 0.5 ? 0 : 1;

        CodeRegister reg(lat, encoded[static_cast<std::size_t>(bit)]);
        reg.add_qubit(plan);
        reg.assume_encoded(0);
        const auto parity = reg.locc_parity_test(0, rng);
        const int locc_guess = parity.pair_a == -1 ? 1 : 0;
        locc_ok[static_cast<std::size_t>(trial)] = locc_guess == bit ? 1 : 0;

        CodeRegister reg2(lat, encoded[static_cast<std::size_t>(bit)]);
        reg2.add_qubit(plan);
        reg2.assume_encoded(0);
        const ChargeType channel = reg2.measure_z_channel(0, rng);
        const int fusion_guess = channel == ChargeType::Lambda ? 1 : 0;
        fusion_ok[static_cast<std::size_t>(trial)] = fusion_guess == bit ? 1 : 0;
    });

    long locc = 0, fusion = 0;
    for (long i = 0; i < cfg.trials; ++i) {
        locc += locc_ok[static_cast<std::size_t>(i)];
        fusion += fusion_ok[static_cast<std::size_t>(i)];
    }

    ExperimentReport report;
    report.experiment = "distinguish";
    report.seed = seed;
    report.config = {{"encoding", std::string(encoding_name(cfg.encoding))},
                     {"trials", cfg.trials},
                     {"rows", 2},
                     {"cols", 2},
                     {"l", 1}};
    report.points.push_back(
        ExperimentPoint::rate("locc_success", static_cast<double>(locc), cfg.trials));
    report.points.push_back(
        ExperimentPoint::rate("fusion_success", static_cast<double>(fusion), cfg.trials));
    return report;
}

ExperimentReport run_fusion_stats(const FusionConfig& cfg, std::uint64_t seed) {
    if (cfg.trials < 1) throw std::invalid_argument("fusion-stats: trials must be >= 1");
    const Lattice lat = Lattice::grid(2, 2);

    // Two independent Phi pairs on the two vertical edges.
    const VertexId a_top = lat.vertex_at(1, 0), a_bot = lat.vertex_at(0, 0);
    const VertexId b_top = lat.vertex_at(1, 1), b_bot = lat.vertex_at(0, 1);
    StateVector base = ground_state(lat);
    w_phi_chain(base, lat.path_between(a_top, a_bot), ChainFlavor::Standard);
    w_phi_chain(base, lat.path_between(b_top, b_bot), ChainFlavor::Standard);

    const auto exact = joint_charge_probabilities(base, a_bot, b_bot);

    std::vector<std::uint8_t> channel(static_cast<std::size_t>(cfg.trials));
    std::vector<std::uint8_t> same_trivial(static_cast<std::size_t>(cfg.trials));
    parallel_trials(cfg.trials, cfg.threads, [&](long trial) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        StateVector s = base;
        channel[static_cast<std::size_t>(trial)] =
            static_cast<std::uint8_t>(pair_charge_measure(s, a_bot, b_bot, rng).channel);
        StateVector s2 = base;
        same_trivial[static_cast<std::size_t>(trial)] =
            pair_charge_measure(s2, a_top, a_bot, rng).channel == ChargeType::Trivial ? 1 : 0;
    });

    std::array<long, 3> counts{};
    long same = 0;
    for (long i = 0; i < cfg.trials; ++i) {
        ++counts[channel[static_cast<std::size_t>(i)]];
        same += same_trivial[static_cast<std::size_t>(i)];
    }

    ExperimentReport report;
    report.experiment = "fusion-stats";
    report.seed = seed;
    report.config = {{"trials", cfg.trials}, {"rows", 2}, {"cols", 2}};
    for (ChargeType c : kAllCharges) {
        report.points.push_back(ExperimentPoint::rate(
            std::string(charge_label(c)),
            static_cast<double>(counts[static_cast<std::size_t>(c)]), cfg.trials));
    }
    for (ChargeType c : kAllCharges) {
        report.points.push_back(ExperimentPoint::value(
            "exact_" + std::string(charge_label(c)), exact[static_cast<std::size_t>(c)]));
    }
    report.points.push_back(
        ExperimentPoint::rate("same_pair_trivial", static_cast<double>(same), cfg.trials));
    return report;
}

ExperimentReport run_hadamard_stats(const HadamardConfig& cfg, std::uint64_t seed) {
    if (cfg.trials < 1) throw std::invalid_argument("hadamard: trials must be >= 1");
    const Lattice lat = Lattice::grid(2, 2);
    const StateVector gs = ground_state(lat);
    const LogicalQubit q0 =
        CodeRegister::plan_qubit(lat, EncodingKind::LambdaOnly, lat.vertex_at(1, 0), 1);
    const LogicalQubit q1 =
        CodeRegister::plan_qubit(lat, EncodingKind::LambdaOnly, lat.vertex_at(1, 1), 1);

    // H|0> targets per result slot: (|0> + |1>)/sqrt(2) with the other slot
    // left in the ground state.
    std::vector<StateVector> target;
    for (const LogicalQubit& q : {q0, q1}) {
        StateVector flipped = gs;
        w_lambda_chain(flipped, q.x_path);
        StateVector t = gs;
        t.add_scaled(flipped, 1.0);
        t.normalize();
        target.push_back(std::move(t));
    }

    std::vector<std::uint8_t> rounds(static_cast<std::size_t>(cfg.trials));
    std::vector<double> fid(static_cast<std::size_t>(cfg.trials));
    parallel_trials(cfg.trials, cfg.threads, [&](long trial) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
        CodeRegister reg(lat, gs);
        reg.add_qubit(q0);
        reg.add_qubit(q1);
        reg.encode(0, 0);
        const auto rus = reg.hadamard_rus(0, 1, rng);
        rounds[static_cast<std::size_t>(trial)] = static_cast<std::uint8_t>(rus.rounds);
        fid[static_cast<std::size_t>(trial)] =
            rus.success
                ? fidelity(target[static_cast<std::size_t>(rus.result_qubit)], reg.state())
                : 0.0;
    });

    long round1 = 0;
    double sum_rounds = 0.0, sum_rounds_sq = 0.0, min_fid = 1.0;
    for (long i = 0; i < cfg.trials; ++i) {
        const double r = rounds[static_cast<std::size_t>(i)];
        round1 += r == 1 ? 1 : 0;
        sum_rounds += r;
        sum_rounds_sq += r * r;
        min_fid = std::min(min_fid, fid[static_cast<std::size_t>(i)]);
    }
    const double n = static_cast<double>(cfg.trials);
    const double mean_rounds = sum_rounds / n;
    const double var_rounds = std::max(sum_rounds_sq / n - mean_rounds * mean_rounds, 0.0);

    ExperimentReport report;
    report.experiment = "hadamard";
    report.seed = seed;
    report.config = {{"trials", cfg.trials}, {"encoding", "lambda"}, {"rows", 2}, {"cols", 2}};
    report.points.push_back(
        ExperimentPoint::rate("round1_success", static_cast<double>(round1), cfg.trials));
    ExperimentPoint rounds_point = ExperimentPoint::value("mean_rounds", mean_rounds, cfg.trials);
    rounds_point.stderr_val = std::sqrt(var_rounds / n);
    report.points.push_back(rounds_point);
    report.points.push_back(ExperimentPoint::value("min_fidelity", min_fid, cfg.trials));
    return report;
}

ExperimentReport run_ground_state_check(const GroundCheckConfig& cfg, std::uint64_t seed) {
    const Lattice lat = Lattice::grid(cfg.rows, cfg.cols, cfg.boundary);
    const StateVector gs = ground_state(lat);

    double min_vertex = 1.0;
    for (VertexId v = 0; v < lat.num_vertices(); ++v) {
        min_vertex = std::min(min_vertex, charge_probabilities(gs, v)[0]);
    }
    double min_flux = 1.0;
    for (PlaquetteId p = 0; p < lat.num_plaquettes(); ++p) {
        min_flux = std::min(min_flux, flux_trivial_probability(gs, p));
    }

    ExperimentReport report;
    report.experiment = "ground-state-check";
    report.seed = seed;
    report.config = {{"rows", cfg.rows},
                     {"cols", cfg.cols},
                     {"boundary", std::string(boundary_name(cfg.boundary))}};
    report.points.push_back(ExperimentPoint::value("norm", gs.norm()));
    report.points.push_back(ExperimentPoint::value("min_vertex_trivial_prob", min_vertex));
    report.points.push_back(ExperimentPoint::value("min_flux_trivial_prob", min_flux));
    report.points.push_back(ExperimentPoint::value("energy", energy(gs)));
    report.points.push_back(ExperimentPoint::value(
        "energy_expected", -static_cast<double>(lat.num_vertices() + lat.num_plaquettes())));
    report.points.push_back(
        ExperimentPoint::value("support_size", static_cast<double>(gs.num_entries())));
    return report;
}

}  // namespace ds3

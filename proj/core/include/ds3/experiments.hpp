#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ds3/logical_codes.hpp"
#include "ds3/noise.hpp"

namespace ds3 {

struct ExperimentPoint {
    std::string label;
    double x = 0.0;
    bool numeric = false;
    double mean = 0.0;
    double stderr_val = 0.0;
    long n = 0;

    static ExperimentPoint value(std::string label, double mean, long n = 1);
    static ExperimentPoint rate(std::string label, double successes, long n);
    static ExperimentPoint rate_at(double x, double successes, long n);
};

// Machine-readable experiment result. Serialized reports are byte-identical
// for a fixed (config, seed); wall_ms is therefore kept at 0 in files and the
// measured time is reported on stderr by the CLI instead.
struct ExperimentReport {
    std::string experiment;
    nlohmann::ordered_json config;
    std::uint64_t seed = 0;
    std::vector<ExperimentPoint> points;
    std::int64_t wall_ms = 0;

    std::string to_json() const;
    std::string to_csv() const;
    const ExperimentPoint* find(std::string_view label) const;
};

struct DecodeStats {
    int visible_lambdas = 0;
    int pair_matches = 0;
    int sink_matches = 0;
    int unmatched = 0;
};

// Greedy nearest-pair annihilation of visible Lambda charges. Candidate
// partners are other visible Lambdas and Phi-occupied vertices (fusing the
// stray into an existing anyon); corrections are W_Lambda strings along
// L-shaped connecting paths.
DecodeStats decode_lambda_syndrome(StateVector& s, const Syndrome& syndrome);

// Syndrome measurement, decoding and fusion readout of pair A on an encoded
// qubit. Returns the fusion channel (Lambda signals a logical flip).
ChargeType suppression_readout(const LogicalQubit& qubit, StateVector state,
                               std::mt19937_64& rng);

// Immutable per-configuration setup shared by Monte Carlo trials and the
// exhaustive oracle.
struct SuppressionSetup {
    std::unique_ptr<Lattice> lattice;
    LogicalQubit qubit;
    std::vector<StateVector> encoded;  // [0]: encoded |0>

    static SuppressionSetup make(int l, EncodingKind kind);
};

struct SuppressionConfig {
    std::vector<int> l_values{1, 2, 3};
    double p = 0.05;
    long trials = 1000;
    int steps = 1;
    EncodingKind encoding = EncodingKind::PhiPair;
    std::vector<ErrorOp> errors{make_sign_flip()};
    int threads = 0;  // 0: hardware concurrency
};

ExperimentReport run_error_suppression(const SuppressionConfig& cfg, std::uint64_t seed);

struct DistinguishConfig {
    EncodingKind encoding = EncodingKind::PhiPair;
    long trials = 10000;
    int threads = 0;
};

ExperimentReport run_distinguishability(const DistinguishConfig& cfg, std::uint64_t seed);

struct FusionConfig {
    long trials = 10000;
    int threads = 0;
};

ExperimentReport run_fusion_stats(const FusionConfig& cfg, std::uint64_t seed);

struct HadamardConfig {
    long trials = 10000;
    int threads = 0;
};

ExperimentReport run_hadamard_stats(const HadamardConfig& cfg, std::uint64_t seed);

struct GroundCheckConfig {
    int rows = 2;
    int cols = 2;
    Boundary boundary = Boundary::Open;
};

ExperimentReport run_ground_state_check(const GroundCheckConfig& cfg, std::uint64_t seed);

}  // namespace ds3

#pragma once

#include <random>
#include <string>
#include <vector>

#include "ds3/state_vector.hpp"

namespace ds3 {

enum class ErrorKind : std::uint8_t { LeftMul, RightMul, SignFlip, PhasePattern };

// One unitary single-spin error channel member.
struct ErrorOp {
    ErrorKind kind = ErrorKind::SignFlip;
    GroupElement g = s3::e;  // used by LeftMul / RightMul, must not be e there

    std::string label() const;
    void apply(StateVector& s, EdgeId e) const;
};

ErrorOp make_sign_flip();
ErrorOp make_phase_pattern();
ErrorOp make_left_mul(GroupElement g);
ErrorOp make_right_mul(GroupElement g);
std::optional<ErrorOp> parse_error_op(std::string_view name);

struct NoiseModel {
    double p = 0.0;  // per-spin per-step error probability
    int steps = 1;
    std::vector<ErrorOp> errors{make_sign_flip()};

    void validate() const;
};

struct AppliedError {
    int step;
    EdgeId edge;
    std::string label;
};

// Independently corrupts each edge with probability p each step, drawing
// uniformly from the error set. Returns the log of applied operators.
std::vector<AppliedError> inject_noise(StateVector& s, const NoiseModel& model,
                                       std::mt19937_64& rng);

}  // namespace ds3

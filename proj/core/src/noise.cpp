#include "ds3/noise.hpp"

#include <stdexcept>

#include "ds3/anyon_ops.hpp"

namespace ds3 {

namespace {
const std::array<Amplitude, 6> kPhasePattern{1.0, kOmega, kOmega * kOmega,
                                             1.0, kOmega, kOmega * kOmega};
}

std::string ErrorOp::label() const {
    switch (kind) {
        case ErrorKind::SignFlip: return "signflip";
        case ErrorKind::PhasePattern: return "phasepattern";
        case ErrorKind::LeftMul: return "leftmul:" + std::string(element_name(g));
        case ErrorKind::RightMul: return "rightmul:" + std::string(element_name(g));
    }
    return "?";
}

void ErrorOp::apply(StateVector& s, EdgeId e) const {
    switch (kind) {
        case ErrorKind::SignFlip:
            s.apply_diagonal({e, creation_table(CreationKind::WLambda)});
            return;
        case ErrorKind::PhasePattern:
            s.apply_diagonal({e, kPhasePattern});
            return;
        case ErrorKind::LeftMul:
            s.apply_left_mul(e, g);
            return;
        case ErrorKind::RightMul:
            s.apply_right_mul(e, g);
            return;
    }
}

ErrorOp make_sign_flip() { return {ErrorKind::SignFlip, s3::e}; }
ErrorOp make_phase_pattern() { return {ErrorKind::PhasePattern, s3::e}; }

ErrorOp make_left_mul(GroupElement g) {
    if (g.is_identity()) throw std::invalid_argument("LeftMul error requires g != e");
    return {ErrorKind::LeftMul, g};
}

ErrorOp make_right_mul(GroupElement g) {
    if (g.is_identity()) throw std::invalid_argument("RightMul error requires g != e");
    return {ErrorKind::RightMul, g};
}

std::optional<ErrorOp> parse_error_op(std::string_view name) {
    if (name == "signflip") return make_sign_flip();
    if (name == "phasepattern") return make_phase_pattern();
    for (std::string_view prefix : {"leftmul:", "rightmul:"}) {
        if (name.substr(0, prefix.size()) == prefix) {
            const auto g = parse_element(name.substr(prefix.size()));
            if (!g || g->is_identity()) return std::nullopt;
            return prefix[0] == 'l' ? make_left_mul(*g) : make_right_mul(*g);
        }
    }
    return std::nullopt;
}

void NoiseModel::validate() const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("NoiseModel: p must lie in [0, 1]");
    if (steps < 0) throw std::invalid_argument("NoiseModel: steps must be non-negative");
    if (errors.empty()) throw std::invalid_argument("NoiseModel: error set must be non-empty");
    for (const ErrorOp& op : errors) {
        if ((op.kind == ErrorKind::LeftMul || op.kind == ErrorKind::RightMul) &&
            op.g.is_identity()) {
            throw std::invalid_argument("NoiseModel: multiplicative errors require g != e");
        }
    }
}

std::vector<AppliedError> inject_noise(StateVector& s, const NoiseModel& model,
                                       std::mt19937_64& rng) {
    model.validate();
    std::vector<AppliedError> log;
    for (int step = 0; step < model.steps; ++step) {
        for (EdgeId e = 0; e < s.lattice().num_edges(); ++e) {
            if (uniform_double(rng) >= model.p) continue;
            const std::size_t pick =
                model.errors.size() == 1
                    ? 0
                    : static_cast<std::size_t>(uniform_double(rng) *
                                               static_cast<double>(model.errors.size()));
            const ErrorOp& op = model.errors[std::min(pick, model.errors.size() - 1)];
            op.apply(s, e);
            log.push_back({step, e, op.label()});
        }
    }
    return log;
}

}  // namespace ds3

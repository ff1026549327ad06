#include "ds3/logical_codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ds3 {

namespace {
constexpr double kGroundTol = 1e-9;
}

std::string_view encoding_name(EncodingKind k) {
    switch (k) {
        case EncodingKind::LambdaOnly: return "lambda";
        case EncodingKind::PhiPair: return "phipair";
        case EncodingKind::Strong: return "strong";
    }
    return "?";
}

std::optional<EncodingKind> parse_encoding(std::string_view name) {
    if (name == "lambda") return EncodingKind::LambdaOnly;
    if (name == "phipair") return EncodingKind::PhiPair;
    if (name == "strong") return EncodingKind::Strong;
    return std::nullopt;
}

std::vector<EdgeId> LogicalQubit::support_edges() const {
    std::vector<EdgeId> edges;
    for (const Path* p : {&pair_a, &pair_b, &x_path}) {
        for (const PathStep& s : p->steps) edges.push_back(s.edge);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::vector<VertexId> LogicalQubit::support_vertices(const Lattice& lat) const {
    std::vector<VertexId> verts;
    for (const Path* p : {&pair_a, &pair_b, &x_path}) {
        if (p->start < 0) continue;
        const auto pv = lat.path_vertices(*p);
        verts.insert(verts.end(), pv.begin(), pv.end());
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

CodeRegister::CodeRegister(const Lattice& lat, StateVector initial)
    : lattice_(&lat), state_(std::move(initial)) {
    if (&state_.lattice() != lattice_) {
        throw std::invalid_argument("CodeRegister: state built on a different lattice");
    }
}

LogicalQubit CodeRegister::plan_qubit(const Lattice& lat, EncodingKind kind, VertexId anchor,
                                      int separation) {
    lat.check_vertex(anchor);
    if (separation < 1) throw std::invalid_argument("plan_qubit: separation must be >= 1");
    const int r = lat.vertex_row(anchor);
    const int c = lat.vertex_col(anchor);
    if (r < 1) throw std::invalid_argument("plan_qubit: anchor row must be >= 1");

    LogicalQubit q;
    q.kind = kind;
    q.separation = separation;
    if (kind == EncodingKind::LambdaOnly) {
        q.v1 = anchor;
        q.v2 = lat.vertex_at(r - 1, c);
        q.x_path = lat.path_between(q.v1, q.v2);
        q.separation = q.x_path.length();
        return q;
    }
    if (c + separation >= lat.cols()) {
        throw std::invalid_argument("plan_qubit: separation does not fit the lattice");
    }
    q.v1 = anchor;
    q.v4 = lat.vertex_at(r - 1, c);
    q.v2 = lat.vertex_at(r, c + separation);
    q.v3 = lat.vertex_at(r - 1, c + separation);
    q.pair_a = lat.path_between(q.v1, q.v4);
    q.pair_b = lat.path_between(q.v2, q.v3);
    q.x_path = lat.path_between(q.v1, q.v2);
    return q;
}

int CodeRegister::add_qubit(const LogicalQubit& q) {
    // Validate the paths against this lattice and the declared vertices.
    if (q.x_path.start != q.v1 || q.x_path.end != q.v2) {
        throw std::invalid_argument("add_qubit: x_path must run v1 -> v2");
    }
    lattice_->path_vertices(q.x_path);
    if (q.kind != EncodingKind::LambdaOnly) {
        if (q.pair_a.start != q.v1 || q.pair_a.end != q.v4 || q.pair_b.start != q.v2 ||
            q.pair_b.end != q.v3) {
            throw std::invalid_argument("add_qubit: pair paths must run v1->v4 and v2->v3");
        }
        lattice_->path_vertices(q.pair_a);
        lattice_->path_vertices(q.pair_b);
    }

    const auto edges = q.support_edges();
    const auto verts = q.support_vertices(*lattice_);
    for (const LogicalQubit& other : qubits_) {
        const auto oe = other.support_edges();
        const auto ov = other.support_vertices(*lattice_);
        for (EdgeId e : edges) {
            if (std::binary_search(oe.begin(), oe.end(), e)) {
                throw std::invalid_argument("add_qubit: overlapping edge support");
            }
        }
        for (VertexId v : verts) {
            if (std::binary_search(ov.begin(), ov.end(), v)) {
                throw std::invalid_argument("add_qubit: overlapping vertex support");
            }
        }
    }
    qubits_.push_back(q);
    qubits_.back().encoded = false;
    return static_cast<int>(qubits_.size()) - 1;
}

void CodeRegister::check_ground_support(const LogicalQubit& q) const {
    for (VertexId v : q.support_vertices(*lattice_)) {
        if (charge_probabilities(state_, v)[0] < 1.0 - kGroundTol) {
            throw std::invalid_argument("encode: qubit support is not in the ground state");
        }
    }
}

void CodeRegister::encode(int q, int bit) {
    LogicalQubit& lq = qubits_.at(static_cast<std::size_t>(q));
    if (bit != 0 && bit != 1) throw std::invalid_argument("encode: bit must be 0 or 1");
    check_ground_support(lq);

    switch (lq.kind) {
        case EncodingKind::LambdaOnly:
            if (bit == 1) w_lambda_chain(state_, lq.x_path);
            break;
        case EncodingKind::PhiPair:
            w_phi_chain(state_, lq.pair_a, ChainFlavor::Standard);
            w_phi_chain(state_, lq.pair_b, ChainFlavor::Standard);
            if (bit == 1) w_lambda_chain(state_, lq.x_path);
            break;
        case EncodingKind::Strong: {
            const ChainFlavor flavor = bit == 0 ? ChainFlavor::Standard : ChainFlavor::Primed;
            w_phi_chain(state_, lq.pair_a, flavor);
            w_phi_chain(state_, lq.pair_b, flavor);
            if (bit == 1) w_lambda_chain(state_, lq.x_path);
            break;
        }
    }
    lq.encoded = true;
}

StateVector CodeRegister::apply_logical_x_op(const StateVector& s, const LogicalQubit& q) const {
    StateVector out = s;
    w_lambda_chain(out, q.x_path);
    if (q.kind == EncodingKind::Strong) {
        u_vertex(out, q.v1);
        u_vertex(out, q.v2);
    }
    return out;
}

void CodeRegister::require_encoded(int q) const {
    if (!qubits_.at(static_cast<std::size_t>(q)).encoded) {
        throw std::invalid_argument("logical operation on an unencoded qubit");
    }
}

void CodeRegister::logical_x(int q) {
    require_encoded(q);
    state_ = apply_logical_x_op(state_, qubit(q));
}

std::vector<EdgeId> CodeRegister::logical_x_support(int q) const {
    const LogicalQubit& lq = qubit(q);
    std::vector<EdgeId> edges;
    for (const PathStep& s : lq.x_path.steps) edges.push_back(s.edge);
    if (lq.kind == EncodingKind::Strong) {
        for (VertexId v : {lq.v1, lq.v2}) {
            for (const IncidentEdge& ie : lattice_->incident_edges(v)) edges.push_back(ie.edge);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

ChargeType CodeRegister::measure_z_channel(int q, std::mt19937_64& rng) {
    require_encoded(q);
    const LogicalQubit& lq = qubit(q);
    if (lq.kind == EncodingKind::LambdaOnly) {
        return measure_charge(state_, lq.v1, rng).outcome;
    }
    return pair_charge_measure(state_, lq.v1, lq.v4, rng).channel;
}

int CodeRegister::measure_logical_z(int q, std::mt19937_64& rng) {
    const ChargeType channel = measure_z_channel(q, rng);
    if (channel == ChargeType::Phi) {
        throw CorruptionError("measure_logical_z: Phi fusion outcome on an encoded qubit");
    }
    return channel == ChargeType::Lambda ? 1 : 0;
}

int CodeRegister::measure_logical_x(int q, std::mt19937_64& rng) {
    require_encoded(q);
    const StateVector flipped = apply_logical_x_op(state_, qubit(q));
    const double overlap = inner_product(state_, flipped).real();
    const std::array<double, 2> probs{(state_.norm_sq() + overlap) / 2.0,
                                      (state_.norm_sq() - overlap) / 2.0};
    const std::size_t pick = sample_index(std::span<const double>(probs.data(), 2), rng);
    const double sign = pick == 0 ? 1.0 : -1.0;
    StateVector post = state_;
    post.scale(0.5);
    post.add_scaled(flipped, sign * 0.5);
    post.scale(1.0 / std::sqrt(probs[pick]));
    post.prune();
    state_ = std::move(post);
    return pick == 0 ? +1 : -1;
}

void CodeRegister::phase_gate(int q, double theta) {
    require_encoded(q);
    const Amplitude phase = std::exp(Amplitude{0.0, theta});
    const StateVector flipped = apply_logical_x_op(state_, qubit(q));
    StateVector out = state_;
    out.scale((1.0 + phase) / 2.0);
    out.add_scaled(flipped, (1.0 - phase) / 2.0);
    out.prune();
    state_ = std::move(out);
}

void CodeRegister::entangle_k(int qa, int qb) {
    require_encoded(qa);
    require_encoded(qb);
    if (qa == qb) throw std::invalid_argument("entangle_k: need two distinct qubits");
    const StateVector xa = apply_logical_x_op(state_, qubit(qa));
    const StateVector xb = apply_logical_x_op(state_, qubit(qb));
    const StateVector xab = apply_logical_x_op(xa, qubit(qb));
    StateVector out = state_;
    out.add_scaled(xa, 1.0);
    out.add_scaled(xb, 1.0);
    out.add_scaled(xab, -1.0);
    out.scale(0.5);
    out.prune();
    state_ = std::move(out);
}

CodeRegister::RusResult CodeRegister::hadamard_rus(int qa, int qb_aux, std::mt19937_64& rng,
                                                   int max_rounds) {
    require_encoded(qa);
    check_ground_support(qubit(qb_aux));
    encode(qb_aux, 0);

    int holder = qa;   // carries Z^z |psi>
    int aux = qb_aux;  // encoded |0>
    int z_frame = 0;
    RusResult res;

    for (int round = 1; round <= max_rounds; ++round) {
        res.rounds = round;
        // Attempt: entangle and read the holder out in the Z basis. The state
        // teleported onto the auxiliary is Z^m X^z H |psi>.
        entangle_k(holder, aux);
        const int m = measure_logical_z(holder, rng);
        if (z_frame == 1) logical_x(aux);
        if (m == 0) {
            res.result_qubit = aux;
            res.success = true;
            return res;
        }
        // Failure branch: the auxiliary holds Z H |psi|. Teleport once more
        // onto the freshly reset holder, which yields Z^{m2} X |psi>; the X is
        // removed directly and the residual Z is tracked in the frame.
        logical_x(holder);  // collapsed |1> -> |0>
        entangle_k(aux, holder);
        const int m2 = measure_logical_z(aux, rng);
        logical_x(holder);
        if (m2 == 1) logical_x(aux);  // reset the aux slot to |0>
        z_frame = m2;
    }
    return res;  // success == false: round cap exhausted
}

CodeRegister::ParityResult CodeRegister::locc_parity_test(int q, std::mt19937_64& rng) {
    require_encoded(q);
    const LogicalQubit& lq = qubit(q);
    if (lq.kind == EncodingKind::LambdaOnly) {
        throw std::invalid_argument("locc_parity_test: undefined for the LambdaOnly encoding");
    }
    ParityResult out;
    out.pair_a = measure_tt(state_, lq.v1, rng).outcome * measure_tt(state_, lq.v4, rng).outcome;
    out.pair_b = measure_tt(state_, lq.v2, rng).outcome * measure_tt(state_, lq.v3, rng).outcome;
    return out;
}

}  // namespace ds3

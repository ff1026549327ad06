#include "ds3/anyon_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ds3 {

namespace {

const std::array<Amplitude, 6> kWLambda{1.0, 1.0, 1.0, -1.0, -1.0, -1.0};
const std::array<Amplitude, 6> kWPhi{2.0, -1.0, -1.0, 0.0, 0.0, 0.0};
const std::array<Amplitude, 6> kWPhiPrime{0.0, 1.0, -1.0, 0.0, 0.0, 0.0};

double chain_weight(ChainFlavor flavor, GroupElement prod) {
    if (prod.is_reflection()) return 0.0;
    static constexpr std::array<double, 3> standard{2.0, -1.0, -1.0};
    static constexpr std::array<double, 3> primed{0.0, 1.0, -1.0};
    const auto k = static_cast<std::size_t>(prod.c_exponent());
    return flavor == ChainFlavor::Standard ? standard[k] : primed[k];
}

CreationResult renormalize_reporting(StateVector& s) {
    const double n = s.norm();
    if (n < 1e-150) throw std::runtime_error("creation operator produced the zero state");
    s.scale(1.0 / n);
    s.prune();
    return {n};
}

}  // namespace

const std::array<Amplitude, 6>& creation_table(CreationKind kind) {
    switch (kind) {
        case CreationKind::WLambda: return kWLambda;
        case CreationKind::WPhi: return kWPhi;
        case CreationKind::WPhiPrime: return kWPhiPrime;
    }
    throw std::invalid_argument("creation_table: bad kind");
}

CreationResult apply_w(StateVector& s, CreationKind kind, EdgeId e) {
    s.apply_diagonal({e, creation_table(kind)});
    return renormalize_reporting(s);
}

CreationResult w_lambda_chain(StateVector& s, const Path& path) {
    s.lattice().path_vertices(path);  // validates connectivity
    for (const PathStep& step : path.steps) {
        // chi_Sign(g) = chi_Sign(g^{-1}): traversal direction is immaterial here.
        s.apply_diagonal({step.edge, kWLambda});
    }
    return {1.0};
}

CreationResult w_phi_chain(StateVector& s, const Path& path, ChainFlavor flavor) {
    s.lattice().path_vertices(path);
    std::vector<StateVector::Entry> terms;
    terms.reserve(s.num_entries());
    for (const auto& entry : s.entries()) {
        GroupElement prod = s3::e;
        for (const PathStep& step : path.steps) {
            GroupElement h = key_edge(entry.key, step.edge);
            if (step.against) h = inverse(h);
            prod = mul(prod, h);
        }
        const double w = chain_weight(flavor, prod);
        if (w != 0.0) terms.push_back({entry.key, w * entry.amp});
    }
    StateVector out(s.lattice(), s.prune_eps());
    out.assign_terms(std::move(terms));
    s = std::move(out);
    return renormalize_reporting(s);
}

void u_vertex(StateVector& s, VertexId v) {
    StateVector out = s;
    out.scale(1.0 / 3.0);
    out.add_scaled(vertex_op(s, v, s3::c), -2.0 / 3.0 * kOmega);
    out.add_scaled(vertex_op(s, v, s3::c2), -2.0 / 3.0 * kOmega * kOmega);
    out.prune();
    s = std::move(out);
}

PairChargeOutcome pair_charge_measure(StateVector& s, VertexId v1, VertexId v2,
                                      std::mt19937_64& rng) {
    if (v1 == v2) throw std::invalid_argument("pair_charge_measure: vertices must differ");
    const ChargeMeasurement m = measure_joint_charge(s, v1, v2, rng);
    return {m.outcome, m.probability};
}

}  // namespace ds3

#include "ds3/quantum_double.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ds3 {

namespace {

constexpr double kProbTol = 1e-12;

// Sorts entry copies so that configurations agreeing outside `mask` are
// contiguous, then ascending by full key within each group.
std::vector<StateVector::Entry> group_by_mask(const StateVector& s, BasisKey mask) {
    std::vector<StateVector::Entry> v(s.entries().begin(), s.entries().end());
    const BasisKey inv = ~mask;
    std::sort(v.begin(), v.end(), [inv](const auto& a, const auto& b) {
        const BasisKey ka = a.key & inv, kb = b.key & inv;
        return ka != kb ? ka < kb : a.key < b.key;
    });
    return v;
}

Amplitude lookup_in_group(const std::vector<StateVector::Entry>& v, std::size_t lo,
                          std::size_t hi, BasisKey key) {
    auto it = std::lower_bound(v.begin() + static_cast<std::ptrdiff_t>(lo),
                               v.begin() + static_cast<std::ptrdiff_t>(hi), key,
                               [](const StateVector::Entry& e, BasisKey k) { return e.key < k; });
    if (it != v.begin() + static_cast<std::ptrdiff_t>(hi) && it->key == key) return it->amp;
    return {};
}

std::array<double, 3> probabilities_from_overlaps(const std::array<Amplitude, 6>& t) {
    std::array<double, 3> p{};
    for (std::size_t a = 0; a < 3; ++a) {
        const Irrep irrep = static_cast<Irrep>(a);
        Amplitude acc{};
        for (GroupElement g : s3::all) acc += static_cast<double>(character(irrep, g)) * t[static_cast<std::size_t>(g.index())];
        acc *= irrep_dimension(irrep) / 6.0;
        p[a] = acc.real();
    }
    return p;
}

// P_A applied through a gauge action (single vertex or joint region).
StateVector project_with_action(const StateVector& s, const GaugeAction& action, ChargeType a) {
    const Irrep irrep = charge_irrep(a);
    const double scale = irrep_dimension(irrep) / 6.0;
    std::vector<StateVector::Entry> terms;
    terms.reserve(s.num_entries() * 6);
    for (GroupElement g : s3::all) {
        const int chi = character(irrep, g);
        if (chi == 0) continue;
        const double coeff = scale * chi;
        for (const auto& e : s.entries()) {
            terms.push_back({action.apply(e.key, g), coeff * e.amp});
        }
    }
    StateVector out(s.lattice(), s.prune_eps());
    out.assign_terms(std::move(terms));
    return out;
}

ChargeMeasurement measure_with_action(StateVector& s, const GaugeAction& action,
                                      std::mt19937_64& rng) {
    const auto probs = probabilities_from_overlaps(vertex_overlaps(s, action));
    const std::size_t pick = sample_index(std::span<const double>(probs.data(), 3), rng);
    const double p = probs[pick];
    // Collapse only when the projector actually changes the state.
    if (p < 1.0 - kProbTol) {
        s = project_with_action(s, action, static_cast<ChargeType>(pick));
        s.scale(1.0 / std::sqrt(p));
        s.prune();
    }
    return {static_cast<ChargeType>(pick), p};
}

}  // namespace

std::string_view charge_label(ChargeType a) {
    switch (a) {
        case ChargeType::Trivial: return "1";
        case ChargeType::Lambda: return "L";
        case ChargeType::Phi: return "P";
    }
    return "?";
}

std::string Syndrome::to_json() const {
    std::string out = "{\"vertices\":[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += charge_label(vertices[i]);
        out += '"';
    }
    out += "],\"plaquettes\":[";
    for (std::size_t i = 0; i < trivial_flux.size(); ++i) {
        if (i) out += ',';
        out += trivial_flux[i] ? "true" : "false";
    }
    out += "]}";
    return out;
}

GaugeAction::GaugeAction(const Lattice& lat, VertexId v) { add_vertex(lat, v); }

GaugeAction GaugeAction::joint(const Lattice& lat, VertexId v1, VertexId v2) {
    if (v1 == v2) throw std::invalid_argument("GaugeAction::joint: vertices must differ");
    GaugeAction a;
    a.add_vertex(lat, v1);
    a.add_vertex(lat, v2);
    return a;
}

void GaugeAction::add_vertex(const Lattice& lat, VertexId v) {
    for (const IncidentEdge& ie : lat.incident_edges(v)) {
        terms_.push_back({ie.edge, ie.head});
        mask_ |= BasisKey{7} << (3 * ie.edge);
    }
}

BasisKey GaugeAction::apply(BasisKey k, GroupElement g) const {
    if (g.is_identity()) return k;
    const GroupElement ginv = inverse(g);
    for (const Term& t : terms_) {
        const GroupElement h = key_edge(k, t.edge);
        k = key_with_edge(k, t.edge, t.head ? mul(h, g) : mul(ginv, h));
    }
    return k;
}

StateVector vertex_op(const StateVector& s, VertexId v, GroupElement g) {
    const GaugeAction action(s.lattice(), v);
    StateVector out = s;
    out.map_keys([&](BasisKey k) { return action.apply(k, g); });
    return out;
}

std::array<Amplitude, 6> vertex_overlaps(const StateVector& s, const GaugeAction& action) {
    std::array<Amplitude, 6> t{};
    t[0] = s.norm_sq();
    const auto sorted = group_by_mask(s, action.edge_mask());
    const BasisKey inv = ~action.edge_mask();
    std::size_t lo = 0;
    while (lo < sorted.size()) {
        std::size_t hi = lo + 1;
        const BasisKey group = sorted[lo].key & inv;
        while (hi < sorted.size() && (sorted[hi].key & inv) == group) ++hi;
        for (std::size_t i = lo; i < hi; ++i) {
            for (int gi = 1; gi < s3::order; ++gi) {
                const BasisKey mapped = action.apply(sorted[i].key, GroupElement(gi));
                const Amplitude target = lookup_in_group(sorted, lo, hi, mapped);
                if (target != Amplitude{}) {
                    t[static_cast<std::size_t>(gi)] += std::conj(target) * sorted[i].amp;
                }
            }
        }
        lo = hi;
    }
    return t;
}

StateVector charge_project(const StateVector& s, VertexId v, ChargeType a) {
    return project_with_action(s, GaugeAction(s.lattice(), v), a);
}

std::array<double, 3> charge_probabilities(const StateVector& s, VertexId v) {
    return probabilities_from_overlaps(vertex_overlaps(s, GaugeAction(s.lattice(), v)));
}

std::array<double, 3> joint_charge_probabilities(const StateVector& s, VertexId v1, VertexId v2) {
    return probabilities_from_overlaps(
        vertex_overlaps(s, GaugeAction::joint(s.lattice(), v1, v2)));
}

GroupElement plaquette_flux(const Lattice& lat, PlaquetteId p, BasisKey k) {
    GroupElement prod = s3::e;
    for (const PathStep& step : lat.plaquette_edges(p)) {
        GroupElement h = key_edge(k, step.edge);
        if (step.against) h = inverse(h);
        prod = mul(prod, h);
    }
    return prod;
}

StateVector flux_trivial_project(const StateVector& s, PlaquetteId p) {
    s.lattice().check_plaquette(p);
    StateVector out = s;
    std::vector<StateVector::Entry> kept;
    kept.reserve(s.num_entries());
    for (const auto& e : s.entries()) {
        if (plaquette_flux(s.lattice(), p, e.key).is_identity()) kept.push_back(e);
    }
    out.assign_terms(std::move(kept));
    return out;
}

double flux_trivial_probability(const StateVector& s, PlaquetteId p) {
    s.lattice().check_plaquette(p);
    double acc = 0.0;
    for (const auto& e : s.entries()) {
        if (plaquette_flux(s.lattice(), p, e.key).is_identity()) acc += std::norm(e.amp);
    }
    return acc;
}

StateVector ground_state(const Lattice& lat, std::size_t max_support) {
    if (lat.boundary() != Boundary::Open) {
        throw std::invalid_argument("ground_state: open-boundary lattice required");
    }
    // Support of prod_v P_1(v) |all-e> is the gauge orbit, 6^(V-1) configurations.
    double support = 1.0;
    for (int v = 1; v < lat.num_vertices(); ++v) support *= 6.0;
    if (support > static_cast<double>(max_support)) {
        throw std::invalid_argument("ground_state: size budget exceeded");
    }
    StateVector s = StateVector::basis_state(lat, BasisKey{0});
    for (VertexId v = 0; v < lat.num_vertices(); ++v) {
        s = charge_project(s, v, ChargeType::Trivial);
    }
    s.normalize();
    return s;
}

ChargeMeasurement measure_charge(StateVector& s, VertexId v, std::mt19937_64& rng) {
    return measure_with_action(s, GaugeAction(s.lattice(), v), rng);
}

ChargeMeasurement measure_joint_charge(StateVector& s, VertexId v1, VertexId v2,
                                       std::mt19937_64& rng) {
    return measure_with_action(s, GaugeAction::joint(s.lattice(), v1, v2), rng);
}

std::pair<Syndrome, StateVector> measure_syndrome(const StateVector& s, std::mt19937_64& rng) {
    StateVector post = s;
    Syndrome syn;
    syn.vertices.reserve(static_cast<std::size_t>(s.lattice().num_vertices()));
    for (VertexId v = 0; v < s.lattice().num_vertices(); ++v) {
        syn.vertices.push_back(measure_charge(post, v, rng).outcome);
    }
    syn.trivial_flux.reserve(static_cast<std::size_t>(s.lattice().num_plaquettes()));
    for (PlaquetteId p = 0; p < s.lattice().num_plaquettes(); ++p) {
        const double pt = flux_trivial_probability(post, p);
        const std::array<double, 2> w{pt, 1.0 - pt};
        const bool trivial = sample_index(std::span<const double>(w.data(), 2), rng) == 0;
        syn.trivial_flux.push_back(trivial);
        if (trivial ? (pt < 1.0 - kProbTol) : (pt > kProbTol)) {
            StateVector kept(post.lattice(), post.prune_eps());
            std::vector<StateVector::Entry> terms;
            for (const auto& e : post.entries()) {
                if (plaquette_flux(post.lattice(), p, e.key).is_identity() == trivial) {
                    terms.push_back(e);
                }
            }
            kept.assign_terms(std::move(terms));
            kept.scale(1.0 / std::sqrt(trivial ? pt : 1.0 - pt));
            post = std::move(kept);
        }
    }
    return {std::move(syn), std::move(post)};
}

double energy(const StateVector& s) {
    if (std::abs(s.norm() - 1.0) > 1e-6) {
        throw std::invalid_argument("energy: state must be normalized");
    }
    double e = 0.0;
    for (VertexId v = 0; v < s.lattice().num_vertices(); ++v) {
        e -= charge_probabilities(s, v)[0];
    }
    for (PlaquetteId p = 0; p < s.lattice().num_plaquettes(); ++p) {
        e -= flux_trivial_probability(s, p);
    }
    return e;
}

TtMeasurement measure_tt(StateVector& s, VertexId v, std::mt19937_64& rng) {
    const StateVector rotated = vertex_op(s, v, s3::t);
    const double overlap = inner_product(s, rotated).real();
    const std::array<double, 2> probs{(s.norm_sq() + overlap) / 2.0,
                                      (s.norm_sq() - overlap) / 2.0};
    const std::size_t pick = sample_index(std::span<const double>(probs.data(), 2), rng);
    const double sign = pick == 0 ? 1.0 : -1.0;
    if (probs[pick] < 1.0 - kProbTol) {
        StateVector post = s;
        post.scale(0.5);
        post.add_scaled(rotated, sign * 0.5);
        post.scale(1.0 / std::sqrt(probs[pick]));
        post.prune();
        s = std::move(post);
    }
    return {pick == 0 ? +1 : -1, probs[pick]};
}

StateVector modified_lambda_project(const StateVector& s, VertexId v) {
    StateVector out = s;
    out.scale(0.5);
    out.add_scaled(vertex_op(s, v, s3::t), 0.5);
    out.prune();
    return out;
}

double tt_plus_probability(const StateVector& s, VertexId v) {
    const StateVector rotated = vertex_op(s, v, s3::t);
    return (s.norm_sq() + inner_product(s, rotated).real()) / 2.0;
}

}  // namespace ds3

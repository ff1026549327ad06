#include "ds3/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ds3 {

BasisKey make_key(std::span<const GroupElement> config) {
    if (config.size() > kMaxEdges) throw std::invalid_argument("make_key: too many edges");
    BasisKey k = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
        k |= static_cast<BasisKey>(config[i].index()) << (3 * i);
    }
    return k;
}

std::vector<GroupElement> key_config(BasisKey k, int num_edges) {
    std::vector<GroupElement> config(static_cast<std::size_t>(num_edges));
    for (int e = 0; e < num_edges; ++e) config[static_cast<std::size_t>(e)] = key_edge(k, e);
    return config;
}

std::string key_to_string(BasisKey k, int num_edges) {
    std::string out;
    for (int e = 0; e < num_edges; ++e) {
        if (e > 0) out += ',';
        out += element_name(key_edge(k, e));
    }
    return out;
}

StateVector::StateVector(const Lattice& lat, double prune_eps)
    : lattice_(&lat), prune_eps_(prune_eps) {
    if (lat.num_edges() > kMaxEdges) {
        throw std::invalid_argument("StateVector: lattice exceeds the key width budget");
    }
}

StateVector StateVector::basis_state(const Lattice& lat, BasisKey config) {
    StateVector s(lat);
    for (EdgeId e = 0; e < lat.num_edges(); ++e) {
        if (key_edge(config, e).index() > 5) {
            throw std::invalid_argument("basis_state: invalid element code in key");
        }
    }
    if (lat.num_edges() < kMaxEdges && (config >> (3 * lat.num_edges())) != 0) {
        throw std::invalid_argument("basis_state: key wider than the lattice");
    }
    s.entries_.push_back({config, Amplitude{1.0, 0.0}});
    return s;
}

StateVector StateVector::basis_state(const Lattice& lat, std::span<const GroupElement> config) {
    if (static_cast<int>(config.size()) != lat.num_edges()) {
        throw std::invalid_argument("basis_state: config width does not match the lattice");
    }
    return basis_state(lat, make_key(config));
}

Amplitude StateVector::amplitude(BasisKey k) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                               [](const Entry& e, BasisKey key) { return e.key < key; });
    if (it != entries_.end() && it->key == k) return it->amp;
    return {};
}

void StateVector::sort_and_combine(std::vector<Entry>& terms) const {
    std::sort(terms.begin(), terms.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < terms.size()) {
        BasisKey k = terms[i].key;
        Amplitude sum = terms[i].amp;
        for (++i; i < terms.size() && terms[i].key == k; ++i) sum += terms[i].amp;
        if (std::abs(sum) > prune_eps_) {
            terms[out++] = {k, sum};
        }
    }
    terms.resize(out);
}

void StateVector::assign_terms(std::vector<Entry> terms) {
    sort_and_combine(terms);
    entries_ = std::move(terms);
}

void StateVector::apply_left_mul(EdgeId e, GroupElement g) {
    lattice_->check_edge(e);
    if (g.is_identity()) return;
    map_keys([e, g](BasisKey k) { return key_with_edge(k, e, mul(g, key_edge(k, e))); });
}

void StateVector::apply_right_mul(EdgeId e, GroupElement g) {
    lattice_->check_edge(e);
    if (g.is_identity()) return;
    map_keys([e, g](BasisKey k) { return key_with_edge(k, e, mul(key_edge(k, e), g)); });
}

void StateVector::apply_diagonal(const SpinDiagonalOp& op) {
    lattice_->check_edge(op.edge);
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Amplitude a = entries_[i].amp * op.table[static_cast<std::size_t>(
                                                 key_edge(entries_[i].key, op.edge).index())];
        if (std::abs(a) > prune_eps_) {
            entries_[out].key = entries_[i].key;
            entries_[out].amp = a;
            ++out;
        }
    }
    entries_.resize(out);
}

void StateVector::map_keys(const std::function<BasisKey(BasisKey)>& f) {
    for (Entry& e : entries_) e.key = f(e.key);
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
}

void StateVector::scale(Amplitude z) {
    for (Entry& e : entries_) e.amp *= z;
}

void StateVector::add_scaled(const StateVector& other, Amplitude coeff) {
    if (other.lattice_ != lattice_) {
        throw std::invalid_argument("add_scaled: lattice mismatch");
    }
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < other.entries_.size()) {
        if (j >= other.entries_.size() ||
            (i < entries_.size() && entries_[i].key < other.entries_[j].key)) {
            merged.push_back(entries_[i++]);
        } else if (i >= entries_.size() || other.entries_[j].key < entries_[i].key) {
            merged.push_back({other.entries_[j].key, coeff * other.entries_[j].amp});
            ++j;
        } else {
            const Amplitude sum = entries_[i].amp + coeff * other.entries_[j].amp;
            if (std::abs(sum) > prune_eps_) merged.push_back({entries_[i].key, sum});
            ++i;
            ++j;
        }
    }
    entries_ = std::move(merged);
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const Entry& e : entries_) s += std::norm(e.amp);
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

void StateVector::normalize() {
    const double n = norm();
    if (n < 1e-300) throw std::runtime_error("normalize: zero state");
    const double inv = 1.0 / n;
    for (Entry& e : entries_) e.amp *= inv;
}

void StateVector::prune() {
    std::erase_if(entries_, [this](const Entry& e) { return std::abs(e.amp) <= prune_eps_; });
}

void StateVector::dump(std::ostream& os) const {
    const int ne = lattice_->num_edges();
    char buf[64];
    for (const Entry& e : entries_) {
        os << key_to_string(e.key, ne);
        std::snprintf(buf, sizeof(buf), "\t%.17g\t%.17g\n", e.amp.real(), e.amp.imag());
        os << buf;
    }
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.lattice_ != b.lattice_) throw std::invalid_argument("inner_product: lattice mismatch");
    Amplitude acc{};
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        if (a.entries_[i].key < b.entries_[j].key) {
            ++i;
        } else if (b.entries_[j].key < a.entries_[i].key) {
            ++j;
        } else {
            acc += std::conj(a.entries_[i].amp) * b.entries_[j].amp;
            ++i;
            ++j;
        }
    }
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

std::size_t sample_index(std::span<const double> weights, std::mt19937_64& rng,
                         double min_total) {
    double total = 0.0;
    for (double w : weights) total += std::max(w, 0.0);
    if (total < min_total) {
        throw std::runtime_error("sample_index: all outcome probabilities vanish");
    }
    const double u = uniform_double(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += std::max(weights[i], 0.0);
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

MeasureOutcome measure(const StateVector& s, std::span<const ProjectorAction> projectors,
                       std::mt19937_64& rng, bool check_completeness) {
    std::vector<StateVector> branches;
    branches.reserve(projectors.size());
    std::vector<double> probs(projectors.size());
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        branches.push_back(projectors[i].apply(s));
        probs[i] = branches.back().norm_sq();
    }
    if (check_completeness) {
        StateVector sum(s.lattice(), s.prune_eps());
        for (const StateVector& b : branches) sum.add_scaled(b, 1.0);
        sum.add_scaled(s, -1.0);
        if (sum.norm() > 1e-9) {
            throw std::runtime_error("measure: projector set is not complete on this state");
        }
    }
    const std::size_t pick = sample_index(probs, rng);
    MeasureOutcome out{static_cast<int>(pick), projectors[pick].label, probs[pick],
                       std::move(branches[pick])};
    out.post.scale(1.0 / std::sqrt(out.probability));
    out.post.prune();
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
    return std::mt19937_64(splitmix64(master_seed ^ splitmix64(trial_index + 1)));
}

}  // namespace ds3

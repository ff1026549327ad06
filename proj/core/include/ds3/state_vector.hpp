#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ds3/lattice.hpp"
#include "ds3/s3.hpp"

namespace ds3 {

using Amplitude = std::complex<double>;

// A basis configuration: one group element per edge, packed 3 bits per edge.
using BasisKey = std::uint64_t;

inline constexpr int kMaxEdges = 21;  // 21 * 3 = 63 bits
inline constexpr double kDefaultPruneEps = 1e-14;

constexpr GroupElement key_edge(BasisKey k, EdgeId e) {
    return GroupElement(static_cast<int>((k >> (3 * e)) & 7u));
}

constexpr BasisKey key_with_edge(BasisKey k, EdgeId e, GroupElement g) {
    const int shift = 3 * e;
    return (k & ~(BasisKey{7} << shift)) | (static_cast<BasisKey>(g.index()) << shift);
}

BasisKey make_key(std::span<const GroupElement> config);
std::vector<GroupElement> key_config(BasisKey k, int num_edges);
std::string key_to_string(BasisKey k, int num_edges);

// Single-spin diagonal operator: |g> -> table[g] |g| on one target edge.
struct SpinDiagonalOp {
    EdgeId edge = -1;
    std::array<Amplitude, 6> table{};
};

// Sparse state vector over edge configurations. Entries are kept sorted by
// key; amplitudes with |a| <= prune_eps are dropped.
class StateVector {
public:
    struct Entry {
        BasisKey key;
        Amplitude amp;
    };

    explicit StateVector(const Lattice& lat, double prune_eps = kDefaultPruneEps);

    static StateVector basis_state(const Lattice& lat, BasisKey config);
    static StateVector basis_state(const Lattice& lat, std::span<const GroupElement> config);

    const Lattice& lattice() const { return *lattice_; }
    double prune_eps() const { return prune_eps_; }
    void set_prune_eps(double eps) { prune_eps_ = eps; }

    std::size_t num_entries() const { return entries_.size(); }
    std::span<const Entry> entries() const { return entries_; }
    Amplitude amplitude(BasisKey k) const;  // 0 if absent

    // Replaces the contents with externally assembled (possibly unsorted,
    // possibly duplicated) terms: sorts, combines duplicates, prunes.
    void assign_terms(std::vector<Entry> terms);

    void apply_left_mul(EdgeId e, GroupElement g);   // |h> -> |g h> on edge e
    void apply_right_mul(EdgeId e, GroupElement g);  // |h> -> |h g> on edge e
    void apply_diagonal(const SpinDiagonalOp& op);

    // Applies a key bijection. The caller guarantees injectivity.
    void map_keys(const std::function<BasisKey(BasisKey)>& f);

    void scale(Amplitude z);
    void add_scaled(const StateVector& other, Amplitude coeff);  // *this += coeff * other

    double norm_sq() const;
    double norm() const;
    void normalize();  // throws if the state is numerically zero
    void prune();

    void dump(std::ostream& os) const;  // "config TAB re TAB im" per entry

    friend Amplitude inner_product(const StateVector& a, const StateVector& b);

private:
    void sort_and_combine(std::vector<Entry>& terms) const;

    const Lattice* lattice_;
    double prune_eps_;
    std::vector<Entry> entries_;
};

Amplitude inner_product(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);  // |<a|b>|^2 for normalized inputs

// A labeled projector for projective measurement.
struct ProjectorAction {
    std::string label;
    std::function<StateVector(const StateVector&)> apply;
};

struct MeasureOutcome {
    int index = -1;
    std::string label;
    double probability = 0.0;
    StateVector post;
};

// 53-bit uniform double in [0, 1).
inline double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Samples index i with probability w[i] / sum(w). Throws if sum(w) < min_total.
std::size_t sample_index(std::span<const double> weights, std::mt19937_64& rng,
                         double min_total = 1e-12);

// Born measurement over a set of pairwise-orthogonal projectors. When
// check_completeness is set, verifies sum_i P_i |s> = |s> to 1e-9.
MeasureOutcome measure(const StateVector& s, std::span<const ProjectorAction> projectors,
                       std::mt19937_64& rng, bool check_completeness = false);

// Deterministic per-trial RNG stream derived from a master seed (splitmix64).
std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace ds3

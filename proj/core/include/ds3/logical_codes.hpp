#pragma once

#include <random>
#include <vector>

#include "ds3/anyon_ops.hpp"
#include "ds3/quantum_double.hpp"
#include "ds3/state_vector.hpp"

namespace ds3 {

enum class EncodingKind : std::uint8_t { LambdaOnly, PhiPair, Strong };

std::string_view encoding_name(EncodingKind k);
std::optional<EncodingKind> parse_encoding(std::string_view name);

// Geometry of one logical qubit.
//
// LambdaOnly: two vertices v1, v2 and the connecting path x_path (the spin
// e_a when the vertices are adjacent); |1> carries a Lambda at each vertex.
//
// PhiPair / Strong: four vertices. Pair A = (v1, v4) created along pair_a,
// pair B = (v2, v3) created along pair_b, and x_path runs v1 -> v2 between
// the pairs. A logical X needs a Lambda string spanning x_path, so the
// separation parameter l is the x_path length.
struct LogicalQubit {
    EncodingKind kind = EncodingKind::LambdaOnly;
    VertexId v1 = -1, v2 = -1, v3 = -1, v4 = -1;
    Path pair_a;  // C^{1,4}
    Path pair_b;  // C^{2,3}
    Path x_path;  // C^{1,2} (e_a for LambdaOnly)
    int separation = 1;
    bool encoded = false;

    std::vector<EdgeId> support_edges() const;
    std::vector<VertexId> support_vertices(const Lattice& lat) const;
};

// Thrown when a fusion measurement returns Phi on an encoded qubit.
class CorruptionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A shared lattice state holding disjoint logical qubits.
class CodeRegister {
public:
    CodeRegister(const Lattice& lat, StateVector initial);

    // Canonical placement: anchor (r, c) with r >= 1 is v1; v4 sits below it,
    // v2 sits `separation` columns right, v3 below v2. LambdaOnly uses only
    // v1 and the vertex below as v2.
    static LogicalQubit plan_qubit(const Lattice& lat, EncodingKind kind, VertexId anchor,
                                   int separation);

    int add_qubit(const LogicalQubit& q);  // checks support disjointness

    // Marks a qubit encoded when its state was prepared externally (e.g. a
    // cached encoded state passed to the constructor).
    void assume_encoded(int q) { qubits_.at(static_cast<std::size_t>(q)).encoded = true; }

    const Lattice& lattice() const { return *lattice_; }
    const StateVector& state() const { return state_; }
    StateVector& state() { return state_; }
    int num_qubits() const { return static_cast<int>(qubits_.size()); }
    const LogicalQubit& qubit(int q) const { return qubits_.at(static_cast<std::size_t>(q)); }

    // Requires the qubit support to hold the ground state.
    void encode(int q, int bit);

    void logical_x(int q);
    std::vector<EdgeId> logical_x_support(int q) const;  // spins touched by logical X

    // Fusion-channel readout: Trivial -> 0, Lambda -> 1; Phi raises
    // CorruptionError. PhiPair/Strong fuse pair A = (v1, v4).
    int measure_logical_z(int q, std::mt19937_64& rng);
    // Non-throwing variant used by noise studies.
    ChargeType measure_z_channel(int q, std::mt19937_64& rng);

    int measure_logical_x(int q, std::mt19937_64& rng);  // +1 or -1

    void phase_gate(int q, double theta);  // |+><+| + e^{i theta} |-><-|

    // K = |+><+|_a (x) I_b + |-><-|_a (x) X_b = (I + X_a + X_b - X_a X_b)/2.
    void entangle_k(int qa, int qb);

    struct RusResult {
        int rounds = 0;        // K-attempt cycles used
        int result_qubit = -1; // slot holding H|psi>
        bool success = false;
    };

    // Repeat-until-success Hadamard teleport from qa onto the auxiliary.
    // The auxiliary support must hold the ground state.
    RusResult hadamard_rus(int qa, int qb_aux, std::mt19937_64& rng, int max_rounds = 64);

    struct ParityResult {
        int pair_a = +1;
        int pair_b = +1;
    };

    // T_t measurement on both vertices of each Phi pair; returns the per-pair
    // products (+1: even Lambda count, -1: odd). Undefined for LambdaOnly.
    ParityResult locc_parity_test(int q, std::mt19937_64& rng);

private:
    StateVector apply_logical_x_op(const StateVector& s, const LogicalQubit& q) const;
    void require_encoded(int q) const;
    void check_ground_support(const LogicalQubit& q) const;

    const Lattice* lattice_;
    StateVector state_;
    std::vector<LogicalQubit> qubits_;
};

}  // namespace ds3

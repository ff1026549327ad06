#pragma once

#include <array>
#include <random>

#include "ds3/quantum_double.hpp"
#include "ds3/state_vector.hpp"

namespace ds3 {

// Single-spin charge creation operators, diagonal in the group basis.
enum class CreationKind : std::uint8_t { WLambda, WPhi, WPhiPrime };

enum class ChainFlavor : std::uint8_t { Standard, Primed };

// Diagonal tables indexed (e, c, c2, t, tc, tc2):
//   WLambda:  ( 1,  1,  1, -1, -1, -1)
//   WPhi:     ( 2, -1, -1,  0,  0,  0)
//   WPhiPrime:( 0,  1, -1,  0,  0,  0)
const std::array<Amplitude, 6>& creation_table(CreationKind kind);

// Norm of the state before the renormalization that the appliers perform.
struct CreationResult {
    double pre_norm;
};

// Applies the single-spin table at edge e, renormalizes, reports the
// pre-normalization norm. Throws if the result is the zero state.
CreationResult apply_w(StateVector& s, CreationKind kind, EdgeId e);

// Product of W_Lambda over every path edge. Unitary and involutive.
CreationResult w_lambda_chain(StateVector& s, const Path& path);

// Chain creation for Phi pairs: weight each configuration by the class c^k of
// the ordered product of edge elements along the path (inverse taken for
// against-orientation traversal). Standard weights (2,-1,-1) for k=(0,1,2),
// primed weights (0,1,-1); configurations with a reflection product get 0.
CreationResult w_phi_chain(StateVector& s, const Path& path, ChainFlavor flavor);

// U(v) = (1/3) T_e(v) - (2/3) [omega T_c(v) + omega^2 T_{c^2}(v)].
// Unitary and involutive; rotates standard Phi pairs into primed ones at a
// fusion vertex.
void u_vertex(StateVector& s, VertexId v);

struct PairChargeOutcome {
    ChargeType channel;
    double probability;
};

// Fusion-channel measurement of the anyon pair held at {v1, v2}.
PairChargeOutcome pair_charge_measure(StateVector& s, VertexId v1, VertexId v2,
                                      std::mt19937_64& rng);

struct AnyonPair {
    ChargeType kind = ChargeType::Phi;
    VertexId v_left = -1;
    VertexId v_right = -1;
    Path path;
    ChainFlavor flavor = ChainFlavor::Standard;
};

}  // namespace ds3

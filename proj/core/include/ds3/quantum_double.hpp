#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ds3/lattice.hpp"
#include "ds3/s3.hpp"
#include "ds3/state_vector.hpp"

namespace ds3 {

// Vertex charge sectors, matching the three irreps of S3.
enum class ChargeType : std::uint8_t { Trivial = 0, Lambda = 1, Phi = 2 };

inline constexpr std::array<ChargeType, 3> kAllCharges{ChargeType::Trivial, ChargeType::Lambda,
                                                       ChargeType::Phi};

constexpr Irrep charge_irrep(ChargeType a) { return static_cast<Irrep>(a); }
constexpr ChargeType irrep_charge(Irrep a) { return static_cast<ChargeType>(a); }

// Serialized labels: "1", "L", "P".
std::string_view charge_label(ChargeType a);

struct Syndrome {
    std::vector<ChargeType> vertices;
    std::vector<bool> trivial_flux;

    std::string to_json() const;  // {"vertices":["1","L",...],"plaquettes":[true,...]}
};

// The key permutation implemented by the gauge action at one or more
// vertices: R_g on head-attached edges, L_{g^{-1}} on tail-attached edges.
// An edge attached twice (joint action of both its endpoints) picks up both
// factors.
class GaugeAction {
public:
    GaugeAction(const Lattice& lat, VertexId v);
    static GaugeAction joint(const Lattice& lat, VertexId v1, VertexId v2);

    BasisKey apply(BasisKey k, GroupElement g) const;
    BasisKey edge_mask() const { return mask_; }

private:
    GaugeAction() = default;
    void add_vertex(const Lattice& lat, VertexId v);

    struct Term {
        EdgeId edge;
        bool head;
    };
    std::vector<Term> terms_;
    BasisKey mask_ = 0;
};

// T_g(v): unitary gauge rotation at one vertex. Composition: T_g T_h = T_{hg}.
StateVector vertex_op(const StateVector& s, VertexId v, GroupElement g);

// <psi|T_g(v)|psi> for all six g (index by element). t[e] is the norm^2.
std::array<Amplitude, 6> vertex_overlaps(const StateVector& s, const GaugeAction& action);

// Charge projector P_A(v) = (dim_A / 6) sum_g chi_A(g) T_g(v). Unnormalized result.
StateVector charge_project(const StateVector& s, VertexId v, ChargeType a);

// Outcome probabilities {P_1, P_Lambda, P_Phi} at a vertex, for a normalized state.
std::array<double, 3> charge_probabilities(const StateVector& s, VertexId v);

// Keeps basis configurations whose counterclockwise boundary product equals e.
StateVector flux_trivial_project(const StateVector& s, PlaquetteId p);
GroupElement plaquette_flux(const Lattice& lat, PlaquetteId p, BasisKey k);
double flux_trivial_probability(const StateVector& s, PlaquetteId p);

// Normalized projected ground state N prod_v P_1(v) |all-e>.
StateVector ground_state(const Lattice& lat, std::size_t max_support = 2000000);

struct ChargeMeasurement {
    ChargeType outcome;
    double probability;
};

// Born measurement of {P_1, P_Lambda, P_Phi} at a vertex; collapses in place.
ChargeMeasurement measure_charge(StateVector& s, VertexId v, std::mt19937_64& rng);

// Joint charge of the region {v1, v2}: P_A = (dim_A/6) sum_g chi_A(g) T_g(v1) T_g(v2).
ChargeMeasurement measure_joint_charge(StateVector& s, VertexId v1, VertexId v2,
                                       std::mt19937_64& rng);
std::array<double, 3> joint_charge_probabilities(const StateVector& s, VertexId v1, VertexId v2);

// Full syndrome: charge at every vertex, then flux at every plaquette.
std::pair<Syndrome, StateVector> measure_syndrome(const StateVector& s, std::mt19937_64& rng);

// <H> = -sum_v <P_1(v)> - sum_p <P_1(p)> for a normalized state.
double energy(const StateVector& s);

struct TtMeasurement {
    int outcome;  // +1 or -1
    double probability;
};

// Born measurement of the involution T_t(v) via (I +- T_t)/2; collapses in place.
TtMeasurement measure_tt(StateVector& s, VertexId v, std::mt19937_64& rng);

// P'_Lambda(v) = [T_e(v) + T_t(v)] / 2.
StateVector modified_lambda_project(const StateVector& s, VertexId v);

// Outcome probability of +1 under (I + T_t(v))/2; used for LOCC comparisons.
double tt_plus_probability(const StateVector& s, VertexId v);

}  // namespace ds3

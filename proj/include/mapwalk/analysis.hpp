#pragma once

// Detectors for perfect state transfer, periodicity, identity powers of
// the walk operator, and the characterizations that govern them. All
// yes/no detections are exact rational equalities; floats appear only in
// strong cospectrality and in the advisory root-of-unity orders.

#include <optional>
#include <utility>
#include <vector>

#include "mapwalk/spectra.hpp"
#include "mapwalk/walk.hpp"

namespace mapwalk {

struct PstPair {
  int u = 0, v = 0;  // u < v
  int time = 0;      // minimal
  bool operator==(const PstPair&) const = default;
};

struct VertexPeriod {
  int vertex = 0;
  int time = 0;  // minimal
  bool operator==(const VertexPeriod&) const = default;
};

struct ReverseTransfer {
  int u = 0, v = 0;
  int time = 0;
  bool operator==(const ReverseTransfer&) const = default;
};

struct VertexFaceTransfer {
  int vertex = 0, face = 0;
  int time = 0;
  bool operator==(const VertexFaceTransfer&) const = default;
};

enum class Tristate { no, yes, indeterminate };

enum class OddPrimeCase { not_applicable, case_i, case_ii, case_iii };

struct CospectralWitness {
  int u = 0, v = 0;
  int divisor = 1;
  Tristate strongly_cospectral = Tristate::no;
};

struct U2Report {
  bool holds = false;
  bool via_square = false;        // U * U = I
  bool via_projectors = false;    // P Q = J / |A|
  bool via_c_entries = false;     // C = D J Delta / |A|
  bool via_gram = false;          // C Delta^{-1} C^T = D J D / |A|
  bool via_facial_walks = false;  // combinatorial visit counts
  std::optional<std::pair<int, int>> failing_visit;  // (vertex, face) witness
};

struct AutomorphismSummary {
  int order = 0;
  bool vertex_transitive = false;
  bool reflexible = false;
};

// All (u,v,tau) with u != v, equal degrees, B'_tau(u,v) = d_u, tau minimal
// per pair. Asserts the symmetry and exclusivity properties of detected
// pairs and that detection implies periodicity at 2 tau.
std::vector<PstPair> detect_pst(const ProjectedSequence& seq, int t_max);

// Transfers U^t N e_u supported on the arcs of a single other vertex,
// without requiring equal degrees. Expected empty; kept behind a flag.
std::vector<PstPair> detect_general_pst(const WalkOperator& op, int t_max);

std::vector<VertexPeriod> detect_periodic_vertices(const ProjectedSequence& seq, int t_max);

struct PeriodicityReport {
  std::vector<VertexPeriod> periodic_vertices;  // minimal time per vertex
  std::optional<int> map_period;                // minimal t with B'_t = D
};

PeriodicityReport detect_periodicity(const ProjectedSequence& seq, int t_max);

// Minimal s <= t_max with U^s = I, decided exactly: U^s = I iff both the
// map and its dual are periodic at s, and the periodicity times of a map
// are exactly the multiples of its minimal period, so s is the lcm of the
// two periods when both lie within reach.
std::optional<int> detect_identity_power(const ProjectedSequence& primal,
                                         const ProjectedSequence& dual_seq, int t_max);

// Convenience overload that builds both sequences itself.
std::optional<int> detect_identity_power(const Map& map, const Incidence& inc, int t_max);

// Evaluates the five equivalent conditions for U^2 = I and asserts they
// agree (throws std::logic_error otherwise).
U2Report characterize_u2(const Map& map, const Incidence& inc, const WalkOperator& op);

// Fast path for maps of uniform type (k,d): U^2 = I iff every vertex is
// traversed k/|V| times by every facial walk. nullopt when not type (k,d).
std::optional<bool> u2_type_kd_fast_path(const Map& map, const Incidence& inc);

// Classification of maps of uniform type and incidence multiplicity with
// U^p = I for an odd prime p. Requires both sequences to reach p.
OddPrimeCase classify_odd_prime_power(const Map& map, const MapProfile& profile,
                           const ProjectedSequence& primal, const ProjectedSequence& dual_seq,
                           int p);

// {1,2,3,4,6,12} when Chat Chat^T has all-rational eigenvalues (exact
// test); the only possible minimal identity powers in that case.
std::optional<std::vector<int>> rationality_period_constraint(const Incidence& inc);

struct CospectralityOptions {
  double cluster_radius = 1e-7;  // eigenvalues within this merge
  double min_gap = 1e-6;         // required separation between clusters
  double compare_tol = 1e-8;     // tolerance of E_r e_v = +/- E_r e_u
};

// Strong cospectrality of u and v with respect to B_d (spectral
// idempotents in floats; indeterminate when clusters are too close).
Tristate strong_cospectrality(const ProjectedSequence& seq, int u, int v, int d,
                              const CospectralityOptions& opts = {});

struct VariantTransfers {
  std::vector<ReverseTransfer> reverse;       // U^t N e_u = R N e_v, minimal t per pair
  std::vector<VertexFaceTransfer> vertex_face;  // U^t N e_u = M e_f, minimal t per pair
};

VariantTransfers variant_transfers(const WalkOperator& op, int t_max);

// 1/2 * (8 min(nv, nf)^2)! — reporting only.
Integer period_bound(int nv, int nf);

// Push one verified pair through the automorphism group of a
// vertex-transitive map; the result partitions the vertex set.
std::vector<PstPair> propagate_pst_by_symmetry(const Map& map,
                                               const std::vector<Automorphism>& autos,
                                               const PstPair& pair);

// Advisory: orders s' such that U appears to have a primitive s'-th root
// of unity eigenvalue (float detection via continued fractions).
std::vector<int> primitive_orders_advisory(const SpectralData& spectral, int max_order = 4096,
                                           double tol = 1e-9);

struct AnalysisOptions {
  int max_steps = 256;
  double tol = 1e-9;
  bool general_pst = false;
  bool with_automorphisms = true;
  bool with_variants = true;
};

struct AnalysisReport {
  std::vector<PstPair> pst_pairs;
  std::vector<PstPair> general_pst_pairs;
  std::vector<VertexPeriod> periodic_vertices;
  std::optional<int> map_period;
  bool period_power_is_identity = false;
  std::optional<int> identity_power;
  std::optional<std::vector<int>> identity_power_constraint;
  bool quasi_tree_bouquet = false;
  U2Report u2;
  bool rational_cc_spectrum = false;
  OddPrimeCase odd_prime_case = OddPrimeCase::not_applicable;
  std::optional<int> odd_prime;
  std::vector<CospectralWitness> cospectral_pairs;
  VariantTransfers variants;
  Integer period_time_bound;
  std::vector<int> primitive_orders;  // advisory
  std::optional<AutomorphismSummary> automorphisms;
  int horizon = 0;  // effective search horizon
};

AnalysisReport analyze(const Map& map, const Incidence& inc, const WalkOperator& op,
                       const SpectralData& spectral, const AnalysisOptions& options = {});

}  // namespace mapwalk

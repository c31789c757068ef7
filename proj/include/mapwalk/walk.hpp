#pragma once

// The vertex-face walk operator U = (2P - I)(2Q - I) and the projected
// sequence B'_t = N^T U^t N evolved by the Chebyshev recurrence
// B'_{t+1} = 2 B'_t D^{-1} B'_1 - B'_{t-1}, all in exact rationals.

#include <optional>
#include <vector>

#include "mapwalk/incidence.hpp"
#include "mapwalk/linalg.hpp"
#include "mapwalk/map.hpp"

namespace mapwalk {

struct WalkOperator {
  QMatrix U;  // 2|E| x 2|E|, orthogonal, fixes the all-ones vector
  QMatrix P;  // M Delta^{-1} M^T
  QMatrix Q;  // N D^{-1} N^T
  Incidence inc;
};

// Exact construction; verifies P^2 = P, Q^2 = Q, symmetry, U 1 = 1 always,
// and the factored product / orthogonality identities densely for maps
// with at most `dense_verify_limit` arcs.
WalkOperator build_operator(const Map& map, const Incidence& inc,
                            int dense_verify_limit = 120);

QVector evolve_exact(const WalkOperator& op, QVector psi, int steps);
QMatrix evolve_exact_matrix(const WalkOperator& op, QMatrix columns, int steps);

struct WalkState {
  RealVector amplitudes;  // arc amplitudes, unit norm
};

// Floating-point evolution for rendering; validates unit norm on entry.
WalkState evolve(const RealMatrix& u_real, WalkState psi, int steps);

class ProjectedSequence {
 public:
  // B'_t for t = 0..t_max; when stop_at_period is set, computation stops
  // early at the first t >= 1 with B'_t = D (the map period), after which
  // the sequence repeats.
  ProjectedSequence(const WalkOperator& op, int t_max, bool stop_at_period = true);

  const QMatrix& degree() const { return degree_; }
  int computed_to() const { return static_cast<int>(steps_.size()) - 1; }
  std::optional<int> period() const { return period_; }

  // B'_t, using periodicity to reduce t when the period is known.
  const QMatrix& at(int t) const;

  // True iff B'_t = D, i.e. U^t acts as the identity on col(N).
  bool identity_at(int t) const;

 private:
  std::vector<QMatrix> steps_;
  QMatrix degree_;
  QMatrix dinv_b1_;  // D^{-1} B'_1, cached for the recurrence
  std::optional<int> period_;
};

// |<Nhat e_v, U^t Nhat e_u>|^2 = B'_t(u,v)^2 / (d_u d_v) for t = 0..t_max.
std::vector<Rational> transfer_probability_exact(const ProjectedSequence& seq, int u, int v,
                                                 int t_max);
std::vector<double> transfer_probability(const ProjectedSequence& seq, int u, int v, int t_max);
std::vector<double> transfer_probability(const WalkOperator& op, int u, int v, int t_max);

// Direct-power oracle: true iff the recurrence value at t equals
// N^T U^t N computed by explicit exact evolution of the columns of N.
bool chebyshev_oracle_check(const WalkOperator& op, const ProjectedSequence& seq, int t);

}  // namespace mapwalk

#include "mapwalk/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace mapwalk {

WalkOperator build_operator(const Map& map, const Incidence& inc, int dense_verify_limit) {
  const int na = map.dart_count;
  WalkOperator op;
  op.inc = inc;
  op.P = QMatrix::Zero(na, na);
  op.Q = QMatrix::Zero(na, na);
  op.U = QMatrix::Zero(na, na);
  for (int a = 0; a < na; ++a) {
    const int fa = map.face_of[static_cast<size_t>(a)];
    const int va = map.vertex_of[static_cast<size_t>(a)];
    const Rational inv_delta = make_rational(1, map.face_degree(fa));
    for (int b = 0; b < na; ++b) {
      const int vb = map.vertex_of[static_cast<size_t>(b)];
      const int fb = map.face_of[static_cast<size_t>(b)];
      const Rational inv_deg = make_rational(1, map.vertex_degree(vb));
      if (fa == fb) op.P(a, b) = inv_delta;
      if (va == vb) op.Q(a, b) = inv_deg;
      // U = 4PQ - 2P - 2Q + I with (PQ)(a,b) = C(v(b), f(a)) / (delta d).
      Rational u = 4 * inc.C(vb, fa) * inv_delta * inv_deg;
      if (fa == fb) u -= 2 * inv_delta;
      if (va == vb) u -= 2 * inv_deg;
      if (a == b) u += 1;
      op.U(a, b) = u;
    }
  }

  for (int a = 0; a < na; ++a) {
    Rational row_sum(0);
    for (int b = 0; b < na; ++b) row_sum += op.U(a, b);
    if (row_sum != 1) throw std::logic_error("walk operator must fix the all-ones vector");
  }
  if (na <= dense_verify_limit) {
    QMatrix id = QMatrix::Identity(na, na);
    if (QMatrix(op.P * op.P) != op.P || QMatrix(op.Q * op.Q) != op.Q)
      throw std::logic_error("P and Q must be idempotent");
    if (op.P != QMatrix(op.P.transpose()) || op.Q != QMatrix(op.Q.transpose()))
      throw std::logic_error("P and Q must be symmetric");
    if (QMatrix((2 * op.P - id) * (2 * op.Q - id)) != op.U)
      throw std::logic_error("U must equal (2P - I)(2Q - I)");
    if (QMatrix(op.U.transpose() * op.U) != id)
      throw std::logic_error("U must be orthogonal");
  }
  return op;
}

QVector evolve_exact(const WalkOperator& op, QVector psi, int steps) {
  if (steps < 0) throw std::invalid_argument("evolve: step count must be nonnegative");
  for (int t = 0; t < steps; ++t) psi = QVector(op.U * psi);
  return psi;
}

QMatrix evolve_exact_matrix(const WalkOperator& op, QMatrix columns, int steps) {
  if (steps < 0) throw std::invalid_argument("evolve: step count must be nonnegative");
  for (int t = 0; t < steps; ++t) columns = QMatrix(op.U * columns);
  return columns;
}

WalkState evolve(const RealMatrix& u_real, WalkState psi, int steps) {
  if (steps < 0) throw std::invalid_argument("evolve: step count must be nonnegative");
  if (std::abs(psi.amplitudes.squaredNorm() - 1.0) > 1e-12)
    throw std::invalid_argument("evolve: state must have unit norm");
  for (int t = 0; t < steps; ++t) psi.amplitudes = u_real * psi.amplitudes;
  return psi;
}

ProjectedSequence::ProjectedSequence(const WalkOperator& op, int t_max, bool stop_at_period) {
  if (t_max < 1) throw std::invalid_argument("projected_sequence: t_max must be >= 1");
  const Incidence& inc = op.inc;
  const Eigen::Index nv = inc.D.rows();
  degree_ = inc.D;
  QMatrix b1 = QMatrix(inc.N.transpose() * op.U * inc.N);
  dinv_b1_ = b1;
  for (Eigen::Index v = 0; v < nv; ++v) dinv_b1_.row(v) /= degree_(v, v);
  steps_.push_back(degree_);
  steps_.push_back(b1);
  for (int t = 1; t < t_max; ++t) {
    if (stop_at_period && steps_.back() == degree_) break;
    QMatrix next = QMatrix(2 * steps_[static_cast<size_t>(t)] * dinv_b1_) -
                   steps_[static_cast<size_t>(t - 1)];
    if (next != QMatrix(next.transpose()))
      throw std::logic_error("projected sequence must stay symmetric");
    steps_.push_back(std::move(next));
  }
  for (size_t t = 1; t < steps_.size(); ++t) {
    if (steps_[t] == degree_) {
      period_ = static_cast<int>(t);
      break;
    }
  }
}

const QMatrix& ProjectedSequence::at(int t) const {
  if (t < 0) throw std::invalid_argument("projected sequence index must be nonnegative");
  if (t <= computed_to()) return steps_[static_cast<size_t>(t)];
  if (period_) return steps_[static_cast<size_t>(t % *period_)];
  throw std::out_of_range("projected sequence computed to t = " + std::to_string(computed_to()));
}

bool ProjectedSequence::identity_at(int t) const { return at(t) == degree_; }

std::vector<Rational> transfer_probability_exact(const ProjectedSequence& seq, int u, int v,
                                                 int t_max) {
  const Rational dd = seq.degree()(u, u) * seq.degree()(v, v);
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(t_max) + 1);
  for (int t = 0; t <= t_max; ++t) {
    const Rational& b = seq.at(t)(u, v);
    out.push_back(b * b / dd);
  }
  return out;
}

std::vector<double> transfer_probability(const ProjectedSequence& seq, int u, int v, int t_max) {
  std::vector<double> out;
  for (const Rational& p : transfer_probability_exact(seq, u, v, t_max))
    out.push_back(to_double(p));
  return out;
}

std::vector<double> transfer_probability(const WalkOperator& op, int u, int v, int t_max) {
  ProjectedSequence seq(op, std::max(1, t_max));
  return transfer_probability(seq, u, v, t_max);
}

bool chebyshev_oracle_check(const WalkOperator& op, const ProjectedSequence& seq, int t) {
  QMatrix columns = evolve_exact_matrix(op, op.inc.N, t);
  return QMatrix(op.inc.N.transpose() * columns) == seq.at(t);
}

}  // namespace mapwalk

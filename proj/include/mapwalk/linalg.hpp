#pragma once

// Exact linear algebra over the rationals: fraction-free rank, integer
// characteristic polynomials, rational eigenvalue detection, nullspaces.

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "mapwalk/rational.hpp"

namespace mapwalk {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = DenseMatrix<Rational>;
using QVector = DenseVector<Rational>;
using ZMatrix = DenseMatrix<Integer>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

RealMatrix to_real(const QMatrix& a);
RealVector to_real(const QVector& v);

template <class Scalar>
DenseMatrix<Scalar> kron(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Cyclic k x k permutation sending e_i to e_{i-1} (index mod k).
QMatrix cyclic_shift(int k);

bool is_identity(const QMatrix& a);
bool is_zero(const QMatrix& a);

Integer denominator_lcm(const QMatrix& a);

// a * scale as an integer matrix, scale = lcm of all denominators.
ZMatrix clear_denominators(const QMatrix& a, Integer& scale);

// Rank over Q via fraction-free (Bareiss) elimination on the
// integer-cleared matrix; pivots chosen by first-nonzero scan order.
int rank_exact(const QMatrix& a);

// Integer-coefficient characteristic polynomial of a square rational
// matrix: the primitive integer multiple of det(tI - A) with positive
// leading coefficient, coefficients returned in ascending degree order.
// Computed division-free (Berkowitz) on the integer-cleared matrix.
std::vector<Integer> char_poly(const QMatrix& a);

Integer poly_eval(const std::vector<Integer>& ascending, const Integer& x);

struct RationalSpectrum {
  bool all_rational = false;
  // (eigenvalue, algebraic multiplicity), ascending by value.
  std::vector<std::pair<Rational, int>> roots;
};

// Rational eigenvalues of a square rational matrix with real spectrum
// (symmetric, or similar to symmetric). all_rational is true iff the
// rational roots exhaust the degree of the characteristic polynomial.
RationalSpectrum rational_eigenvalues(const QMatrix& a);

// Columns form a basis of ker(a) over Q (exact reduced row echelon form).
QMatrix nullspace_exact(const QMatrix& a);

}  // namespace mapwalk

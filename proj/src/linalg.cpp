#include "mapwalk/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapwalk {

RealMatrix to_real(const QMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = to_double(a(i, j));
  return out;
}

RealVector to_real(const QVector& v) {
  RealVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
  return out;
}

QMatrix cyclic_shift(int k) {
  QMatrix p = QMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) p((i - 1 + k) % k, i) = 1;
  return p;
}

bool is_identity(const QMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

bool is_zero(const QMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

Integer denominator_lcm(const QMatrix& a) {
  Integer l(1);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
  return l;
}

ZMatrix clear_denominators(const QMatrix& a, Integer& scale) {
  scale = denominator_lcm(a);
  ZMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      Rational s = a(i, j) * scale;
      out(i, j) = s.get_num();  // denominator is 1 by construction
    }
  return out;
}

int rank_exact(const QMatrix& a) {
  Integer scale;
  ZMatrix m = clear_denominators(a, scale);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Integer prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Integer t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

// det(tI - A) for an integer matrix, Berkowitz' division-free algorithm.
// Returns coefficients in descending degree order, leading coefficient 1.
std::vector<Integer> berkowitz(const ZMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<Integer> coeffs = {Integer(1)};
  if (n == 0) return coeffs;
  coeffs = {Integer(1), -a(0, 0)};
  for (Eigen::Index r = 2; r <= n; ++r) {
    // Toeplitz column: 1, -a_rr, -(R w), -(R M w), ... with
    // M the leading (r-1) block, R the row and C the column bordering it.
    std::vector<Integer> s(static_cast<size_t>(r) + 1);
    s[0] = 1;
    s[1] = -a(r - 1, r - 1);
    DenseVector<Integer> w = a.col(r - 1).head(r - 1);
    for (Eigen::Index k = 2; k <= r; ++k) {
      Integer dot(0);
      for (Eigen::Index i = 0; i < r - 1; ++i) dot += a(r - 1, i) * w(i);
      s[static_cast<size_t>(k)] = -dot;
      if (k < r) w = (a.topLeftCorner(r - 1, r - 1) * w).eval();
    }
    std::vector<Integer> next(static_cast<size_t>(r) + 1, Integer(0));
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < coeffs.size(); ++j) {
        if (i < j || i - j >= s.size()) continue;
        next[i] += s[i - j] * coeffs[j];
      }
    coeffs = std::move(next);
  }
  return coeffs;
}

Integer content(const std::vector<Integer>& coeffs) {
  Integer g(0);
  for (const Integer& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Divide the monic integer polynomial (ascending) by (t - root) if the
// division is exact; returns true and replaces poly on success.
bool deflate_root(std::vector<Integer>& ascending, const Integer& root) {
  if (poly_eval(ascending, root) != 0) return false;
  const size_t n = ascending.size() - 1;  // degree
  std::vector<Integer> quotient(n);
  Integer carry(0);
  for (size_t k = n; k >= 1; --k) {
    Integer q = ascending[k] + carry;
    quotient[k - 1] = q;
    carry = q * root;
  }
  ascending = std::move(quotient);
  return true;
}

}  // namespace

std::vector<Integer> char_poly(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix must be square");
  Integer scale;
  ZMatrix b = clear_denominators(a, scale);
  std::vector<Integer> desc = berkowitz(b);  // det(tI - scale*A)
  const size_t n = desc.size() - 1;
  // det(tI - A) = scale^{-n} det((scale t) I - scale A); clear with scale^n.
  std::vector<Integer> ascending(desc.size());
  Integer pw(1);
  for (size_t k = 0; k <= n; ++k) {
    // coefficient of t^{n-k} in the cleared polynomial is desc[k] * scale^{n-k}
    ascending[n - k] = desc[k];
  }
  for (size_t d = 0; d <= n; ++d) {
    ascending[d] *= pw;  // pw = scale^d
    pw *= scale;
  }
  Integer g = content(ascending);
  if (g != 0) {
    if (ascending.back() < 0) g = -g;
    for (Integer& c : ascending) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return ascending;
}

Integer poly_eval(const std::vector<Integer>& ascending, const Integer& x) {
  Integer acc(0);
  for (size_t k = ascending.size(); k-- > 0;) acc = acc * x + ascending[k];
  return acc;
}

RationalSpectrum rational_eigenvalues(const QMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("rational_eigenvalues: matrix must be square");
  RationalSpectrum out;
  if (a.rows() == 0) {
    out.all_rational = true;
    return out;
  }
  Integer scale;
  ZMatrix b = clear_denominators(a, scale);
  std::vector<Integer> poly = berkowitz(b);  // monic, descending
  std::reverse(poly.begin(), poly.end());    // ascending

  // Roots of the cleared matrix are scale * (roots of a); being roots of a
  // monic integer polynomial, the rational ones are integers.
  int zero_mult = 0;
  while (poly.size() > 1 && poly.front() == 0) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

  // Any eigenvalue obeys the Gershgorin row-sum bound.
  Integer bound(0);
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    Integer row(0);
    for (Eigen::Index j = 0; j < b.cols(); ++j) row += abs(b(i, j));
    bound = std::max(bound, row);
  }
  for (Integer d(1); d <= bound && poly.size() > 1; ++d) {
    if (!mpz_divisible_p(poly.front().get_mpz_t(), d.get_mpz_t())) continue;
    for (Integer root : {Integer(d), Integer(-d)}) {
      int mult = 0;
      while (poly.size() > 1 && deflate_root(poly, root)) ++mult;
      if (mult > 0) out.roots.emplace_back(make_rational(root, scale), mult);
    }
  }
  out.all_rational = poly.size() == 1;
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

QMatrix nullspace_exact(const QMatrix& a) {
  QMatrix m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    Rational inv = Rational(1) / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      m.row(i) -= m(i, c) * m.row(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  QMatrix basis = QMatrix::Zero(cols, cols - r);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    basis(c, k) = 1;
    for (Eigen::Index i = 0; i < r; ++i) basis(pivot_col[static_cast<size_t>(i)], k) = -m(i, c);
    ++k;
  }
  return basis;
}

}  // namespace mapwalk

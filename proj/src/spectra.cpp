#include "mapwalk/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mapwalk {

SymmetricEigs symmetric_eigs(const RealMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigs: matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol * scale)
    throw std::invalid_argument("symmetric_eigs: matrix is not symmetric within tolerance");
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric_eigs: eigensolver failed to converge");
  SymmetricEigs out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    double residual = (a * out.vectors.col(i) - out.values(i) * out.vectors.col(i)).norm();
    if (residual > tol * scale * std::sqrt(static_cast<double>(a.rows())))
      throw std::runtime_error("symmetric_eigs: residual above tolerance");
  }
  return out;
}

RealMatrix chat_gram(const Incidence& inc) {
  const Eigen::Index nv = inc.D.rows();
  const Eigen::Index nf = inc.Delta.rows();
  RealMatrix c = to_real(inc.C);
  RealVector dinv_sqrt(nv), delta_inv(nf);
  for (Eigen::Index v = 0; v < nv; ++v) dinv_sqrt(v) = 1.0 / std::sqrt(to_double(inc.D(v, v)));
  for (Eigen::Index f = 0; f < nf; ++f) delta_inv(f) = 1.0 / to_double(inc.Delta(f, f));
  RealMatrix chat = dinv_sqrt.asDiagonal() * c;
  return chat * delta_inv.asDiagonal() * chat.transpose();
}

QMatrix chat_gram_similar(const Incidence& inc) {
  const Eigen::Index nv = inc.D.rows();
  const Eigen::Index nf = inc.Delta.rows();
  QMatrix scaled = inc.C;
  for (Eigen::Index f = 0; f < nf; ++f) scaled.col(f) /= inc.Delta(f, f);
  QMatrix g = scaled * inc.C.transpose();
  for (Eigen::Index v = 0; v < nv; ++v) g.col(v) /= inc.D(v, v);
  return g;
}

SpectralData u_spectrum(const Map& map, const Incidence& inc) {
  SpectralData data;
  data.rank_c = rank_exact(inc.C);
  data.dim_plus1 = map.edge_count + 2 * map.genus;
  data.dim_minus1 = map.vertex_count + map.face_count - 2 * data.rank_c;

  const double zero_one_tol = 1e-9;
  SymmetricEigs eigs = symmetric_eigs(chat_gram(inc));
  // The gram matrix of a contraction has spectrum inside [0, 1].
  if (eigs.values(0) < -zero_one_tol ||
      eigs.values(eigs.values.size() - 1) > 1.0 + zero_one_tol)
    throw std::logic_error("u_spectrum: gram eigenvalue outside [0, 1]");
  // Cluster eigenvalues for the multiplicity report.
  const double cluster_radius = 1e-7;
  std::vector<std::pair<int, int>> clusters;  // [begin, end)
  for (int i = 0; i < eigs.values.size();) {
    int j = i + 1;
    while (j < eigs.values.size() && eigs.values(j) - eigs.values(j - 1) <= cluster_radius) ++j;
    clusters.emplace_back(i, j);
    i = j;
  }
  int zeros = 0, ones = 0;
  for (auto [b, e] : clusters) {
    ChatEig ce;
    ce.multiplicity = e - b;
    double sum = 0;
    for (int i = b; i < e; ++i) sum += eigs.values(i);
    ce.value = sum / ce.multiplicity;
    ce.vectors = eigs.vectors.middleCols(b, e - b);
    if (std::abs(ce.value) <= zero_one_tol) {
      ce.value = 0.0;
      zeros += ce.multiplicity;
    } else if (std::abs(ce.value - 1.0) <= zero_one_tol) {
      ce.value = 1.0;
      ones += ce.multiplicity;
    }
    data.chat_eigs.push_back(std::move(ce));
  }

  // Exact multiplicities of 0 and 1 in the spectrum of Chat Chat^T, via the
  // similar rational matrix (diagonalizable, so rank deficiency equals
  // eigenvalue multiplicity).
  QMatrix g = chat_gram_similar(inc);
  int exact_zeros = map.vertex_count - data.rank_c;
  QMatrix g_minus_id = g - QMatrix::Identity(g.rows(), g.cols());
  int exact_ones = map.vertex_count - rank_exact(g_minus_id);
  if (zeros != exact_zeros || ones != exact_ones)
    throw std::logic_error("u_spectrum: float eigenvalue clusters at {0,1} disagree with exact ranks");
  if (exact_ones != 1)
    throw std::logic_error("u_spectrum: eigenvalue 1 of Chat Chat^T must be simple on a connected map");

  data.u_eigs.push_back({std::complex<double>(1.0, 0.0), data.dim_plus1});
  if (data.dim_minus1 > 0) data.u_eigs.push_back({std::complex<double>(-1.0, 0.0), data.dim_minus1});
  for (const ChatEig& ce : data.chat_eigs) {
    if (ce.value == 0.0 || ce.value == 1.0) continue;
    // Roots of t^2 - (4 lhat - 2) t + 1 form a unit-circle conjugate pair.
    double re = 2.0 * ce.value - 1.0;
    double im = std::sqrt(std::max(0.0, 1.0 - re * re));
    data.u_eigs.push_back({std::complex<double>(re, im), ce.multiplicity});
    data.u_eigs.push_back({std::complex<double>(re, -im), ce.multiplicity});
  }
  std::sort(data.u_eigs.begin(), data.u_eigs.end(), [](const UEigenvalue& a, const UEigenvalue& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  int total = 0;
  for (const auto& e : data.u_eigs) total += e.multiplicity;
  if (total != map.dart_count)
    throw std::logic_error("u_spectrum: multiplicities do not sum to the number of arcs");
  return data;
}

}  // namespace mapwalk

#pragma once

#include <complex>
#include <vector>

#include "mapwalk/incidence.hpp"
#include "mapwalk/linalg.hpp"
#include "mapwalk/map.hpp"

namespace mapwalk {

struct SymmetricEigs {
  RealVector values;   // ascending
  RealMatrix vectors;  // orthonormal columns
};

// Dense symmetric eigensolve with input and residual validation:
// throws std::invalid_argument if a deviates from symmetry by more than
// tol, guarantees ||A v - lambda v|| <= tol * max(1, ||A||) per pair.
SymmetricEigs symmetric_eigs(const RealMatrix& a, double tol = 1e-9);

// Gram matrix of the normalized vertex-face incidence, Chat Chat^T
// (floating point; entries are irrational when degrees are non-uniform).
RealMatrix chat_gram(const Incidence& inc);

// C Delta^{-1} C^T D^{-1}: a rational matrix similar to Chat Chat^T via
// conjugation by D^{1/2}, hence with the same spectrum. Carrier for all
// exact spectral statements about Chat Chat^T.
QMatrix chat_gram_similar(const Incidence& inc);

struct ChatEig {
  double value = 0;
  int multiplicity = 0;
  RealMatrix vectors;  // eigenvectors of Chat Chat^T for this cluster
};

struct UEigenvalue {
  std::complex<double> value;
  int multiplicity = 0;
};

struct SpectralData {
  std::vector<ChatEig> chat_eigs;
  std::vector<UEigenvalue> u_eigs;  // multiplicities sum to 2|E|
  int dim_plus1 = 0;                // |E| + 2g
  int dim_minus1 = 0;               // |V| + |F| - 2 rank(C)
  int rank_c = 0;                   // exact
};

// Eigenvalues of the walk operator assembled from the spectrum of
// Chat Chat^T: +1 and -1 multiplicities from the exact dimension formulas,
// one conjugate pair t^2 - (4 lhat - 2) t + 1 per eigenvalue lhat outside
// {0,1}. Float zero/one multiplicities are cross-checked against exact
// ranks; throws std::logic_error on disagreement.
SpectralData u_spectrum(const Map& map, const Incidence& inc);

}  // namespace mapwalk

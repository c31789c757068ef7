#pragma once

// Arc incidence matrices of a map: N (arc-vertex), M (arc-face), L
// (arc-edge), R (arc reversal), C = N^T M (vertex-face), D and Delta
// (degree diagonals). All entries exact.

#include "mapwalk/linalg.hpp"
#include "mapwalk/map.hpp"

namespace mapwalk {

struct Incidence {
  QMatrix N, M, L, R;
  QMatrix C;            // V x F, C(v,f) = visits of v on the facial walk of f
  QMatrix D, Delta;     // degree diagonals
  QMatrix adjacency;    // A(X) = N^T R N, loops counting 2 on the diagonal
};

// Builds all matrices and verifies the structural identities
//   N^T N = D,  L^T L = 2I,  M^T M = Delta,
//   N^T R N = A(X),  M^T R M = A(X*),  N^T R M = N^T M = C,
//   R = L L^T - I,  rows of N/M/L are standard basis vectors
// exactly; throws std::logic_error on any failure (which would indicate a
// face-tracing convention bug).
Incidence incidence(const Map& map);

// The same identity suite evaluated by dense exact matrix products;
// returns an empty string on success, a description of the first failing
// identity otherwise. Used by tests as the slow cross-check of the
// structured verification done in incidence().
std::string check_incidence_dense(const Map& map, const Incidence& inc);

}  // namespace mapwalk

#pragma once

// Deterministic generators for the map families driving the detectors:
// dipoles, toroidal grids, doubled grids, spherical cycles, plane trees,
// bouquets and stars.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapwalk/map.hpp"

namespace mapwalk {

struct GridLayout {
  int rows = 0, cols = 0;  // vertex (r, c) has id r * cols + c
};

struct FamilyInstance {
  Map map;
  std::string name;
  std::optional<GridLayout> layout;
  // Grids only: face id carrying label (i, j) at index i * cols + j; the
  // labeling under which C = (P_n + I) (x) (P_m + I).
  std::vector<int> grid_face_of_label;
};

// X_n: two vertices joined by n edges with identical rotations.
FamilyInstance dipole(int n);

// Genus-1 wraparound grid on Z_n x Z_m; rotation at (a,b) is
// (a,b)_R, (a,b)_D, (a,b-1)_R, (a-1,b)_D. Row-major vertex order.
FamilyInstance toroidal_grid(int n, int m);

// Y_m: the toroidal (1,m)-grid with every non-loop edge replaced by a
// digon; same normalized vertex-face gram matrix as the grid.
FamilyInstance toroidal_grid_doubled(int m);

FamilyInstance planar_cycle(int n);  // n >= 3, two faces on the sphere

// Any tree, one face, genus 0; rotation orders neighbors by edge index.
FamilyInstance planar_tree(const std::vector<std::pair<int, int>>& edges);

FamilyInstance path_tree(int n);  // path on n >= 2 vertices

// Single vertex whose rotation is the given dart word (each edge e
// contributes darts 2e and 2e+1; every dart must appear exactly once).
FamilyInstance bouquet(const std::vector<int>& rotation_word);

FamilyInstance star(int n);  // K_{1,n}, center is vertex 0

// One vertex and one face (the maps with U = I).
bool is_quasi_tree_bouquet(const Map& map);

}  // namespace mapwalk

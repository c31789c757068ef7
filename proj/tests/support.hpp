#pragma once

// Shared helpers for the test suites: matrix builders, independent
// oracles (naive powers, cross-map isomorphism search) and reference
// maps that are not part of the family generators.

#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "mapwalk/families.hpp"
#include "mapwalk/incidence.hpp"
#include "mapwalk/linalg.hpp"
#include "mapwalk/map.hpp"
#include "mapwalk/walk.hpp"

namespace mapwalk::testing {

inline QMatrix qmat(int rows, int cols, std::initializer_list<long> entries) {
  QMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(*it++);
  return m;
}

// Direct dense power, independent of the recurrence machinery.
inline QMatrix naive_power(const QMatrix& base, int t) {
  QMatrix acc = QMatrix::Identity(base.rows(), base.cols());
  for (int i = 0; i < t; ++i) acc = QMatrix(acc * base);
  return acc;
}

// Brute-force isomorphism between two maps: propagate the image of dart 0
// of `a` through rotation and reversal for every candidate image in `b`.
inline bool maps_isomorphic(const Map& a, const Map& b) {
  if (a.dart_count != b.dart_count || a.vertex_count != b.vertex_count ||
      a.face_count != b.face_count)
    return false;
  for (int image = 0; image < b.dart_count; ++image) {
    std::vector<int> perm(static_cast<size_t>(a.dart_count), -1);
    perm[0] = image;
    std::vector<int> stack = {0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      int pd = perm[static_cast<size_t>(d)];
      const std::pair<int, int> steps[2] = {
          {a.rotation[static_cast<size_t>(d)], b.rotation[static_cast<size_t>(pd)]},
          {Map::reversal(d), Map::reversal(pd)},
      };
      for (auto [src, dst] : steps) {
        int& slot = perm[static_cast<size_t>(src)];
        if (slot < 0) {
          slot = dst;
          stack.push_back(src);
        } else if (slot != dst) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

// The unique toroidal triangulation by K_7: rotation at vertex v lists the
// neighbors v + 1, 3, 2, 6, 4, 5 (mod 7), the lexicographically smallest
// difference word with 14 triangular faces.
inline Map k7_torus_map() {
  constexpr int kDiff[6] = {1, 3, 2, 6, 4, 5};
  std::map<std::pair<int, int>, int> edge_id;
  int next_edge = 0;
  for (int u = 0; u < 7; ++u)
    for (int d : kDiff) {
      int w = (u + d) % 7;
      auto key = std::minmax(u, w);
      if (!edge_id.count({key.first, key.second}))
        edge_id[{key.first, key.second}] = next_edge++;
    }
  std::vector<std::vector<int>> lists(7);
  for (int u = 0; u < 7; ++u)
    for (int d : kDiff) {
      int w = (u + d) % 7;
      auto key = std::minmax(u, w);
      int e = edge_id[{key.first, key.second}];
      lists[static_cast<size_t>(u)].push_back(2 * e + (u == key.first ? 0 : 1));
    }
  return build_map(lists);
}

// Heawood graph on the torus, as the dual of the K_7 triangulation.
inline Map heawood_torus_map() { return dual(k7_torus_map()); }

// Deterministic pseudo-random connected map on `edges` edges: a seeded
// xorshift drives a dart shuffle and a random partition into vertices;
// seeds that give disconnected systems are skipped by the caller.
inline std::optional<Map> random_map(unsigned long seed, int edges) {
  auto next = [state = seed * 2654435761UL + 1]() mutable {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<int> darts(static_cast<size_t>(2 * edges));
  for (int d = 0; d < 2 * edges; ++d) darts[static_cast<size_t>(d)] = d;
  for (size_t i = darts.size(); i > 1; --i)
    std::swap(darts[i - 1], darts[next() % i]);
  std::vector<std::vector<int>> lists;
  size_t at = 0;
  while (at < darts.size()) {
    size_t take = 1 + next() % (darts.size() - at);
    lists.emplace_back(darts.begin() + static_cast<long>(at),
                       darts.begin() + static_cast<long>(at + take));
    at += take;
  }
  try {
    return build_map(lists);
  } catch (const MapError&) {
    return std::nullopt;
  }
}

// Core battery of generated maps used across suites (|E| <= 24).
inline std::vector<FamilyInstance> small_battery() {
  std::vector<FamilyInstance> out;
  for (int n : {1, 2, 3, 5, 6}) out.push_back(dipole(n));
  out.push_back(toroidal_grid(1, 1));
  out.push_back(toroidal_grid(1, 4));
  out.push_back(toroidal_grid(1, 5));
  out.push_back(toroidal_grid(2, 3));
  out.push_back(toroidal_grid(3, 4));
  out.push_back(toroidal_grid_doubled(4));
  out.push_back(toroidal_grid_doubled(5));
  out.push_back(planar_cycle(3));
  out.push_back(planar_cycle(6));
  out.push_back(path_tree(3));
  out.push_back(path_tree(5));
  out.push_back(planar_tree({{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}));
  out.push_back(star(4));
  out.push_back(bouquet({0, 2, 1, 3}));
  out.push_back(bouquet({0, 2, 1, 3, 4, 6, 5, 7}));
  out.push_back(bouquet({0, 1, 2, 3}));
  return out;
}

}  // namespace mapwalk::testing

#include "mapwalk/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapwalk {

namespace {

std::string join_name(const std::string& base, std::initializer_list<int> params) {
  std::string out = base;
  for (int p : params) out += " " + std::to_string(p);
  return out;
}

}  // namespace

FamilyInstance dipole(int n) {
  if (n < 1) throw std::invalid_argument("dipole: need at least one edge");
  std::vector<int> at_u, at_v;
  for (int e = 0; e < n; ++e) {
    at_u.push_back(2 * e);
    at_v.push_back(2 * e + 1);
  }
  FamilyInstance inst;
  inst.map = build_map({at_u, at_v});
  inst.name = join_name("dipole", {n});
  return inst;
}

FamilyInstance toroidal_grid(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
  auto vid = [&](int a, int b) { return ((a % n + n) % n) * m + ((b % m + m) % m); };
  auto right_edge = [&](int a, int b) { return 2 * vid(a, b); };
  auto down_edge = [&](int a, int b) { return 2 * vid(a, b) + 1; };
  std::vector<std::vector<int>> lists(static_cast<size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      // Darts 2e / 2e+1 sit at the tail / head of edge e; the tail of
      // (a,b)_R is (a,b) and its head (a,b+1), likewise downwards.
      lists[static_cast<size_t>(vid(a, b))] = {
          2 * right_edge(a, b),
          2 * down_edge(a, b),
          2 * right_edge(a, b - 1) + 1,
          2 * down_edge(a - 1, b) + 1,
      };
    }
  FamilyInstance inst;
  inst.map = build_map(lists);
  inst.name = join_name("grid", {n, m});
  inst.layout = GridLayout{n, m};
  // Face (i,j) is the orbit of the outgoing right dart at (i, j-1).
  inst.grid_face_of_label.assign(static_cast<size_t>(n) * m, -1);
  std::vector<bool> hit(static_cast<size_t>(inst.map.face_count), false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      int face = inst.map.face_of[static_cast<size_t>(2 * right_edge(i, j - 1))];
      inst.grid_face_of_label[static_cast<size_t>(i * m + j)] = face;
      if (hit[static_cast<size_t>(face)])
        throw std::logic_error("grid face labels must be a bijection");
      hit[static_cast<size_t>(face)] = true;
    }
  return inst;
}

FamilyInstance toroidal_grid_doubled(int m) {
  if (m < 2) throw std::invalid_argument("grid-doubled: need m >= 2");
  // Edges per column b: 3b (first parallel), 3b+1 (second parallel),
  // 3b+2 (the vertical loop). Parallel edges run from b to b+1 and meet in
  // opposite relative order at the two ends, bounding a digon face.
  auto first_of = [&](int b) { return 3 * ((b % m + m) % m); };
  std::vector<std::vector<int>> lists(static_cast<size_t>(m));
  for (int b = 0; b < m; ++b) {
    int e1 = first_of(b), e2 = e1 + 1, loop = e1 + 2;
    int p1 = first_of(b - 1), p2 = p1 + 1;
    lists[static_cast<size_t>(b)] = {
        2 * e1, 2 * e2, 2 * loop, 2 * p2 + 1, 2 * p1 + 1, 2 * loop + 1,
    };
  }
  FamilyInstance inst;
  inst.map = build_map(lists);
  inst.name = join_name("grid-doubled", {m});
  return inst;
}

FamilyInstance planar_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  // Edge e joins vertices e and e+1 (mod n).
  std::vector<std::vector<int>> lists(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) lists[static_cast<size_t>(v)] = {2 * v, 2 * ((v - 1 + n) % n) + 1};
  FamilyInstance inst;
  inst.map = build_map(lists);
  inst.name = join_name("cycle", {n});
  return inst;
}

FamilyInstance planar_tree(const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw std::invalid_argument("tree: need at least one edge");
  int nv = 0;
  for (const auto& [u, v] : edges) nv = std::max({nv, u + 1, v + 1});
  std::vector<std::vector<int>> lists(static_cast<size_t>(nv));
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    if (u < 0 || v < 0) throw std::invalid_argument("tree: vertex ids must be nonnegative");
    if (u == v) throw std::invalid_argument("tree: loops are not allowed");
    lists[static_cast<size_t>(u)].push_back(static_cast<int>(2 * e));
    lists[static_cast<size_t>(v)].push_back(static_cast<int>(2 * e + 1));
  }
  FamilyInstance inst;
  inst.map = build_map(lists);
  if (inst.map.edge_count != inst.map.vertex_count - 1 || inst.map.face_count != 1)
    throw std::invalid_argument("tree: edge list does not describe a tree");
  inst.name = join_name("tree", {nv});
  return inst;
}

FamilyInstance path_tree(int n) {
  if (n < 2) throw std::invalid_argument("path: need n >= 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  FamilyInstance inst = planar_tree(edges);
  inst.name = join_name("path", {n});
  return inst;
}

FamilyInstance bouquet(const std::vector<int>& rotation_word) {
  if (rotation_word.empty()) throw std::invalid_argument("bouquet: empty rotation word");
  FamilyInstance inst;
  inst.map = build_map({rotation_word});
  inst.name = "bouquet";
  return inst;
}

FamilyInstance star(int n) {
  if (n < 1) throw std::invalid_argument("star: need n >= 1 leaves");
  std::vector<std::vector<int>> lists(static_cast<size_t>(n) + 1);
  for (int e = 0; e < n; ++e) {
    lists[0].push_back(2 * e);
    lists[static_cast<size_t>(e) + 1] = {2 * e + 1};
  }
  FamilyInstance inst;
  inst.map = build_map(lists);
  inst.name = join_name("star", {n});
  return inst;
}

bool is_quasi_tree_bouquet(const Map& map) {
  return map.vertex_count == 1 && map.face_count == 1;
}

}  // namespace mapwalk

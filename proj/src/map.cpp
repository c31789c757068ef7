#include "mapwalk/map.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mapwalk {

namespace {

void trace_faces(Map& map) {
  map.face_of.assign(static_cast<size_t>(map.dart_count), -1);
  map.face_degrees.clear();
  int face = 0;
  for (int d = 0; d < map.dart_count; ++d) {
    if (map.face_of[static_cast<size_t>(d)] >= 0) continue;
    int cur = d;
    int length = 0;
    do {
      map.face_of[static_cast<size_t>(cur)] = face;
      cur = map.face_successor(cur);
      ++length;
    } while (cur != d);
    map.face_degrees.push_back(length);
    ++face;
  }
  map.face_count = face;
}

}  // namespace

Map build_map(const std::vector<std::vector<int>>& rotation_lists) {
  Map map;
  size_t darts = 0;
  for (const auto& list : rotation_lists) darts += list.size();
  if (darts == 0) throw MapError("map must have at least one edge");
  if (darts % 2 != 0) throw MapError("odd dart count " + std::to_string(darts));
  map.dart_count = static_cast<int>(darts);
  map.edge_count = map.dart_count / 2;
  map.vertex_count = static_cast<int>(rotation_lists.size());

  map.rotation.assign(darts, -1);
  map.rotation_inv.assign(darts, -1);
  map.vertex_of.assign(darts, -1);
  map.vertex_degrees.assign(rotation_lists.size(), 0);
  for (size_t v = 0; v < rotation_lists.size(); ++v) {
    const auto& list = rotation_lists[v];
    if (list.empty())
      throw MapError("vertex " + std::to_string(v) + " has an empty rotation");
    for (size_t i = 0; i < list.size(); ++i) {
      int d = list[i];
      if (d < 0 || d >= map.dart_count)
        throw MapError("dart id " + std::to_string(d) + " out of range 0.." +
                       std::to_string(map.dart_count - 1));
      if (map.vertex_of[static_cast<size_t>(d)] >= 0)
        throw MapError("dart " + std::to_string(d) + " appears twice");
      map.vertex_of[static_cast<size_t>(d)] = static_cast<int>(v);
      int next = list[(i + 1) % list.size()];
      map.rotation[static_cast<size_t>(d)] = next;
    }
    map.vertex_degrees[v] = static_cast<int>(list.size());
  }
  for (int d = 0; d < map.dart_count; ++d)
    if (map.vertex_of[static_cast<size_t>(d)] < 0)
      throw MapError("dart " + std::to_string(d) + " missing from every rotation");
  for (int d = 0; d < map.dart_count; ++d)
    map.rotation_inv[static_cast<size_t>(map.rotation[static_cast<size_t>(d)])] = d;

  // Connectivity under the group generated by rotation and reversal.
  std::vector<bool> seen(darts, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  size_t visited = 0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    ++visited;
    for (int next : {map.rotation[static_cast<size_t>(d)], Map::reversal(d)}) {
      if (!seen[static_cast<size_t>(next)]) {
        seen[static_cast<size_t>(next)] = true;
        stack.push_back(next);
      }
    }
  }
  if (visited != darts) throw MapError("map is not connected");

  trace_faces(map);
  int euler = map.vertex_count - map.edge_count + map.face_count;
  int deficiency = 2 - euler;
  if (deficiency < 0 || deficiency % 2 != 0)
    throw MapError("Euler characteristic " + std::to_string(euler) +
                   " is not of the form 2 - 2g");
  map.genus = deficiency / 2;
  return map;
}

std::vector<std::vector<int>> rotation_lists(const Map& map) {
  std::vector<int> first(static_cast<size_t>(map.vertex_count), map.dart_count);
  for (int d = 0; d < map.dart_count; ++d) {
    int v = map.vertex_of[static_cast<size_t>(d)];
    first[static_cast<size_t>(v)] = std::min(first[static_cast<size_t>(v)], d);
  }
  std::vector<std::vector<int>> lists(static_cast<size_t>(map.vertex_count));
  for (int v = 0; v < map.vertex_count; ++v) {
    int start = first[static_cast<size_t>(v)];
    int cur = start;
    do {
      lists[static_cast<size_t>(v)].push_back(cur);
      cur = map.rotation[static_cast<size_t>(cur)];
    } while (cur != start);
  }
  return lists;
}

std::vector<std::vector<int>> face_walks(const Map& map) {
  std::vector<int> first(static_cast<size_t>(map.face_count), map.dart_count);
  for (int d = 0; d < map.dart_count; ++d) {
    int f = map.face_of[static_cast<size_t>(d)];
    first[static_cast<size_t>(f)] = std::min(first[static_cast<size_t>(f)], d);
  }
  std::vector<std::vector<int>> walks(static_cast<size_t>(map.face_count));
  for (int f = 0; f < map.face_count; ++f) {
    int start = first[static_cast<size_t>(f)];
    int cur = start;
    do {
      walks[static_cast<size_t>(f)].push_back(cur);
      cur = map.face_successor(cur);
    } while (cur != start);
  }
  return walks;
}

Map dual(const Map& map) {
  // Rotation of the dual at face f is the facial walk of f; reversal is
  // shared, so faces of the dual are the rotation orbits of the primal.
  std::vector<std::vector<int>> lists = face_walks(map);
  Map d = build_map(lists);
  // Faces inherit the primal vertex labels (the orbit partitions agree)
  // so that duality is an exact involution and C(dual) = C^T.
  d.face_of = map.vertex_of;
  d.face_count = map.vertex_count;
  d.face_degrees = map.vertex_degrees;
  return d;
}

Map mirror(const Map& map) {
  std::vector<std::vector<int>> lists = rotation_lists(map);
  for (auto& list : lists) std::reverse(list.begin() + 1, list.end());
  return build_map(lists);
}

MapProfile map_profile(const Map& map) {
  MapProfile profile;
  if (std::all_of(map.vertex_degrees.begin(), map.vertex_degrees.end(),
                  [&](int d) { return d == map.vertex_degrees.front(); }))
    profile.uniform_vertex_degree = map.vertex_degrees.front();
  if (std::all_of(map.face_degrees.begin(), map.face_degrees.end(),
                  [&](int d) { return d == map.face_degrees.front(); }))
    profile.uniform_face_degree = map.face_degrees.front();

  // Vertex-on-face visit counts, from the facial walks directly.
  std::map<std::pair<int, int>, int> visits;
  for (int d = 0; d < map.dart_count; ++d)
    ++visits[{map.vertex_of[static_cast<size_t>(d)], map.face_of[static_cast<size_t>(d)]}];
  int alpha = visits.empty() ? 0 : visits.begin()->second;
  bool uniform = std::all_of(visits.begin(), visits.end(),
                             [&](const auto& kv) { return kv.second == alpha; });
  if (uniform) profile.incidence_multiplicity = alpha;
  profile.circular =
      uniform && alpha == 1 &&
      std::all_of(map.face_degrees.begin(), map.face_degrees.end(), [](int k) { return k >= 3; });
  return profile;
}

namespace {

// Propagate a candidate image of dart 0 through rotation and reversal.
// next_of(d) is sigma for automorphisms and sigma^{-1} for mirror
// isomorphisms (which invert the rotation).
template <class NextFn>
std::optional<std::vector<int>> propagate(const Map& map, int image, NextFn&& next_of) {
  std::vector<int> perm(static_cast<size_t>(map.dart_count), -1);
  perm[0] = image;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    int pd = perm[static_cast<size_t>(d)];
    const std::pair<int, int> steps[2] = {
        {map.rotation[static_cast<size_t>(d)], next_of(pd)},
        {Map::reversal(d), Map::reversal(pd)},
    };
    for (auto [src, dst] : steps) {
      int& slot = perm[static_cast<size_t>(src)];
      if (slot < 0) {
        slot = dst;
        stack.push_back(src);
      } else if (slot != dst) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(static_cast<size_t>(map.dart_count), false);
  for (int d = 0; d < map.dart_count; ++d) {
    if (hit[static_cast<size_t>(perm[static_cast<size_t>(d)])]) return std::nullopt;
    hit[static_cast<size_t>(perm[static_cast<size_t>(d)])] = true;
  }
  return perm;
}

std::vector<int> induced_perm(const std::vector<int>& dart_perm, const std::vector<int>& cell_of,
                              int cells) {
  std::vector<int> perm(static_cast<size_t>(cells), -1);
  for (size_t d = 0; d < dart_perm.size(); ++d)
    perm[static_cast<size_t>(cell_of[d])] = cell_of[static_cast<size_t>(dart_perm[d])];
  return perm;
}

}  // namespace

std::vector<Automorphism> automorphisms(const Map& map) {
  std::vector<Automorphism> autos;
  std::vector<int> edge_of(static_cast<size_t>(map.dart_count));
  for (int d = 0; d < map.dart_count; ++d) edge_of[static_cast<size_t>(d)] = Map::edge_of(d);
  for (int image = 0; image < map.dart_count; ++image) {
    auto perm = propagate(map, image,
                          [&](int d) { return map.rotation[static_cast<size_t>(d)]; });
    if (!perm) continue;
    Automorphism a;
    a.dart_perm = *perm;
    a.vertex_perm = induced_perm(a.dart_perm, map.vertex_of, map.vertex_count);
    a.face_perm = induced_perm(a.dart_perm, map.face_of, map.face_count);
    a.edge_perm = induced_perm(a.dart_perm, edge_of, map.edge_count);
    autos.push_back(std::move(a));
  }
  return autos;
}

bool vertex_transitive(const Map& map, const std::vector<Automorphism>& autos) {
  std::vector<bool> reached(static_cast<size_t>(map.vertex_count), false);
  for (const auto& a : autos) reached[static_cast<size_t>(a.vertex_perm[0])] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

bool is_reflexible(const Map& map) {
  for (int image = 0; image < map.dart_count; ++image) {
    auto perm = propagate(map, image,
                          [&](int d) { return map.rotation_inv[static_cast<size_t>(d)]; });
    if (perm) return true;
  }
  return false;
}

}  // namespace mapwalk

#pragma once

// Dart-based rotation systems for orientable maps. Darts 2e and 2e+1 are
// the two arcs of edge e; reversal is XOR 1. Faces are the orbits of the
// face successor d -> rotation(reversal(d)).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mapwalk {

class MapError : public std::runtime_error {
 public:
  explicit MapError(const std::string& what) : std::runtime_error(what) {}
};

struct Map {
  int dart_count = 0;             // 2|E|
  std::vector<int> rotation;      // next dart clockwise around the tail vertex
  std::vector<int> rotation_inv;  // previous dart in the rotation
  std::vector<int> vertex_of;     // dart -> vertex id
  std::vector<int> face_of;       // dart -> face id (face-successor orbit)
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  int genus = 0;

  static int reversal(int dart) { return dart ^ 1; }
  static int edge_of(int dart) { return dart >> 1; }
  int face_successor(int dart) const { return rotation[static_cast<size_t>(dart ^ 1)]; }

  int vertex_degree(int v) const { return vertex_degrees[static_cast<size_t>(v)]; }
  int face_degree(int f) const { return face_degrees[static_cast<size_t>(f)]; }

  std::vector<int> vertex_degrees;
  std::vector<int> face_degrees;

  bool operator==(const Map& other) const {
    return rotation == other.rotation && vertex_of == other.vertex_of;
  }
};

// rotation_lists[v] lists the darts with tail v in clockwise order.
// Rejects duplicate/missing darts, odd dart counts and disconnected input.
Map build_map(const std::vector<std::vector<int>>& rotation_lists);

// Clockwise rotation list per vertex, each rotated to start at its
// smallest dart (canonical form for serialization).
std::vector<std::vector<int>> rotation_lists(const Map& map);

// Darts of each face in walk order, starting from the smallest dart.
std::vector<std::vector<int>> face_walks(const Map& map);

// Vertices and faces exchanged, same darts; an exact involution
// (dual(dual(m)) == m) whose walk operator is the transpose of the primal's.
Map dual(const Map& map);

// Same map with all rotations inverted (the mirror image).
Map mirror(const Map& map);

struct MapProfile {
  std::optional<int> uniform_vertex_degree;       // d when all vertices agree
  std::optional<int> uniform_face_degree;         // k when all faces agree
  std::optional<int> incidence_multiplicity;      // alpha when C is {0, alpha}-valued
  bool circular = false;                          // alpha == 1 and face degrees >= 3
};

MapProfile map_profile(const Map& map);

struct Automorphism {
  std::vector<int> dart_perm;
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  std::vector<int> face_perm;
};

// All orientation-preserving automorphisms (dart permutations commuting
// with rotation and reversal), ordered by the image of dart 0.
std::vector<Automorphism> automorphisms(const Map& map);

bool vertex_transitive(const Map& map, const std::vector<Automorphism>& autos);

// True when the map is isomorphic to its mirror image.
bool is_reflexible(const Map& map);

}  // namespace mapwalk

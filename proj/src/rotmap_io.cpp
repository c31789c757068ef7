#include "mapwalk/rotmap_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mapwalk {

namespace {

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Map parse_rotmap(std::istream& in) {
  std::string line;
  int lineno = 0;
  long declared_darts = -1;
  std::vector<std::vector<int>> lists;
  std::vector<bool> seen_vertex;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::string head;
    if (!(ss >> head)) continue;  // blank or comment-only
    if (head == "darts") {
      if (declared_darts >= 0) throw ParseError(lineno, "duplicate 'darts' header");
      if (!(ss >> declared_darts) || declared_darts <= 0)
        throw ParseError(lineno, "expected a positive dart count");
      if (declared_darts % 2 != 0)
        throw ParseError(lineno, "dart count must be even (two darts per edge)");
      std::string extra;
      if (ss >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
      continue;
    }
    if (head != "v") throw ParseError(lineno, "expected 'darts' or 'v', got '" + head + "'");
    if (declared_darts < 0) throw ParseError(lineno, "'darts' header must come first");
    long id = -1;
    char colon = 0;
    if (!(ss >> id) || id < 0) throw ParseError(lineno, "expected a vertex id after 'v'");
    if (!(ss >> colon) || colon != ':') throw ParseError(lineno, "expected ':' after vertex id");
    if (static_cast<size_t>(id) >= lists.size()) {
      lists.resize(static_cast<size_t>(id) + 1);
      seen_vertex.resize(static_cast<size_t>(id) + 1, false);
    }
    if (seen_vertex[static_cast<size_t>(id)])
      throw ParseError(lineno, "vertex " + std::to_string(id) + " listed twice");
    seen_vertex[static_cast<size_t>(id)] = true;
    long dart;
    while (ss >> dart) {
      if (dart < 0 || dart >= declared_darts)
        throw ParseError(lineno, "dart " + std::to_string(dart) + " out of range 0.." +
                                     std::to_string(declared_darts - 1));
      lists[static_cast<size_t>(id)].push_back(static_cast<int>(dart));
    }
    if (!ss.eof()) throw ParseError(lineno, "malformed dart list");
    if (lists[static_cast<size_t>(id)].empty())
      throw ParseError(lineno, "vertex " + std::to_string(id) + " has no darts");
  }
  if (declared_darts < 0) throw ParseError(lineno, "missing 'darts' header");
  for (size_t v = 0; v < lists.size(); ++v)
    if (!seen_vertex[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " missing");
  size_t listed = 0;
  for (const auto& l : lists) listed += l.size();
  if (listed != static_cast<size_t>(declared_darts))
    throw ParseError(lineno, "declared " + std::to_string(declared_darts) + " darts but listed " +
                                 std::to_string(listed));
  try {
    return build_map(lists);
  } catch (const MapError& e) {
    throw ParseError(lineno, e.what());
  }
}

Map parse_rotmap_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_rotmap(in);
}

std::string emit_rotmap(const Map& map) {
  std::ostringstream out;
  out << "darts " << map.dart_count << "\n";
  const auto lists = rotation_lists(map);
  for (size_t v = 0; v < lists.size(); ++v) {
    out << "v " << v << ":";
    for (int d : lists[v]) out << " " << d;
    out << "\n";
  }
  return out.str();
}

void write_rotmap_file(const std::string& path, const Map& map) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << emit_rotmap(map);
}

}  // namespace mapwalk

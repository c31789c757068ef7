#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mapwalk/map.hpp"

namespace mapwalk {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   darts <2|E|>
//   v <id>: d_1 d_2 ... d_k      (darts in clockwise rotation order)
// '#' starts a comment; reversal is implicit (dart XOR 1).
Map parse_rotmap(std::istream& in);
Map parse_rotmap_file(const std::string& path);

// Canonical form: vertices ascending, each rotation starting at its
// smallest dart.
std::string emit_rotmap(const Map& map);
void write_rotmap_file(const std::string& path, const Map& map);

}  // namespace mapwalk

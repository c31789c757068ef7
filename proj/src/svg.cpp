#include "mapwalk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace mapwalk {

namespace {

struct Point {
  double x = 0, y = 0;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void draw_dart(std::ostringstream& out, Point a, Point b, double amplitude, double side) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len < 1e-9) return;
  const double ox = -dy / len * 6.0 * side, oy = dx / len * 6.0 * side;
  const double sx = a.x + dx * 0.18 + ox, sy = a.y + dy * 0.18 + oy;
  const double ex = a.x + dx * 0.82 + ox, ey = a.y + dy * 0.82 + oy;
  const char* color = amplitude >= 0 ? "#d62728" : "#1f77b4";
  double opacity = std::min(1.0, std::abs(amplitude));
  if (opacity < 0.004) return;
  // head: short segment plus two barbs
  const double ux = dx / len, uy = dy / len;
  out << "<line x1=\"" << fmt(sx) << "\" y1=\"" << fmt(sy) << "\" x2=\"" << fmt(ex) << "\" y2=\""
      << fmt(ey) << "\" stroke=\"" << color << "\" stroke-width=\"3\" stroke-opacity=\""
      << fmt(opacity) << "\"/>\n";
  const double bx = ex - ux * 8, by = ey - uy * 8;
  out << "<line x1=\"" << fmt(bx - ox * 0.5) << "\" y1=\"" << fmt(by - oy * 0.5) << "\" x2=\""
      << fmt(ex) << "\" y2=\"" << fmt(ey) << "\" stroke=\"" << color
      << "\" stroke-width=\"3\" stroke-opacity=\"" << fmt(opacity) << "\"/>\n";
}

}  // namespace

std::string render_frame_svg(const Map& map, const std::optional<GridLayout>& layout,
                             const RealVector& amplitudes) {
  const double cell = 80.0, margin = 60.0;
  std::vector<Point> vertex_pos(static_cast<size_t>(map.vertex_count));
  double width, height;
  if (layout) {
    for (int r = 0; r < layout->rows; ++r)
      for (int c = 0; c < layout->cols; ++c)
        vertex_pos[static_cast<size_t>(r * layout->cols + c)] = {margin + c * cell,
                                                                 margin + r * cell};
    width = margin * 2 + layout->cols * cell;
    height = margin * 2 + layout->rows * cell;
  } else {
    const double radius = std::max(2.0, map.vertex_count / 2.0) * cell / 2.0;
    for (int v = 0; v < map.vertex_count; ++v) {
      double angle = 2.0 * M_PI * v / map.vertex_count - M_PI / 2.0;
      vertex_pos[static_cast<size_t>(v)] = {margin + radius * (1 + std::cos(angle)),
                                            margin + radius * (1 + std::sin(angle))};
    }
    width = height = margin * 2 + radius * 2;
  }

  // Endpoint of each dart: its tail vertex; for grid layouts the head is
  // drawn one cell over (the cut-open torus duplicates the boundary).
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (layout) {
    out << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\""
        << fmt(layout->cols * cell) << "\" height=\"" << fmt(layout->rows * cell)
        << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"6 4\"/>\n";
  }

  std::vector<std::pair<Point, Point>> dart_segment(static_cast<size_t>(map.dart_count));
  for (int e = 0; e < map.edge_count; ++e) {
    int tail_dart = 2 * e, head_dart = 2 * e + 1;
    Point a = vertex_pos[static_cast<size_t>(map.vertex_of[static_cast<size_t>(tail_dart)])];
    Point b = vertex_pos[static_cast<size_t>(map.vertex_of[static_cast<size_t>(head_dart)])];
    if (layout) {
      // Grid edge ids encode direction: even = rightward, odd = downward.
      bool rightward = e % 2 == 0;
      b = rightward ? Point{a.x + cell, a.y} : Point{a.x, a.y + cell};
    } else if (map.vertex_of[static_cast<size_t>(tail_dart)] ==
               map.vertex_of[static_cast<size_t>(head_dart)]) {
      // Loop on the circle layout: a short stub pointing outward.
      double cx = width / 2, cy = height / 2;
      double nx = a.x - cx, ny = a.y - cy;
      double norm = std::max(1.0, std::hypot(nx, ny));
      b = {a.x + nx / norm * cell * (0.5 + 0.15 * (e % 4)),
           a.y + ny / norm * cell * (0.5 + 0.15 * (e % 4))};
    }
    out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\" stroke=\"#e0e0e0\" stroke-width=\"1.5\"/>\n";
    dart_segment[static_cast<size_t>(tail_dart)] = {a, b};
    dart_segment[static_cast<size_t>(head_dart)] = {b, a};
  }
  for (int d = 0; d < map.dart_count; ++d) {
    const auto& [a, b] = dart_segment[static_cast<size_t>(d)];
    draw_dart(out, a, b, amplitudes(d), d % 2 == 0 ? 1.0 : -1.0);
  }
  for (int v = 0; v < map.vertex_count; ++v) {
    const Point& p = vertex_pos[static_cast<size_t>(v)];
    out << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
        << "\" r=\"4\" fill=\"#333333\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mapwalk

#include "ncpart/draw.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ncpart {
namespace draw {

namespace {

struct Point {
  double x, y;
};

// Vertex k of m (0-based), clockwise from the top of a circle centred in a
// 400x400 canvas.
Point gon_point(int k, int m, double radius = 160) {
  double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * k / m;
  return {200 + radius * std::cos(angle), 200 - radius * std::sin(angle)};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

void svg_header(std::ostringstream& os, int w, int h) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
}

void draw_block(std::ostringstream& os, const std::vector<Point>& pts) {
  if (pts.size() == 1) {
    os << "  <circle cx=\"" << fmt(pts[0].x) << "\" cy=\"" << fmt(pts[0].y)
       << "\" r=\"5\" fill=\"#1f4e89\"/>\n";
    return;
  }
  if (pts.size() == 2) {
    os << "  <line x1=\"" << fmt(pts[0].x) << "\" y1=\"" << fmt(pts[0].y) << "\" x2=\""
       << fmt(pts[1].x) << "\" y2=\"" << fmt(pts[1].y)
       << "\" stroke=\"#1f4e89\" stroke-width=\"2.5\"/>\n";
    return;
  }
  os << "  <polygon points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << fmt(pts[i].x) << ',' << fmt(pts[i].y);
  }
  os << "\" fill=\"#9db9dc\" fill-opacity=\"0.5\" stroke=\"#1f4e89\" stroke-width=\"2\"/>\n";
}

void draw_vertices(std::ostringstream& os, const std::vector<std::pair<Point, std::string>>& v) {
  for (const auto& [p, label] : v) {
    os << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
       << "\" r=\"3.5\" fill=\"#222\"/>\n";
    double dx = p.x - 200, dy = p.y - 200;
    double len = std::max(1.0, std::hypot(dx, dy));
    os << "  <text x=\"" << fmt(p.x + 18 * dx / len) << "\" y=\"" << fmt(p.y + 18 * dy / len + 4)
       << "\" font-size=\"15\" text-anchor=\"middle\" font-family=\"sans-serif\">" << label
       << "</text>\n";
  }
}

}  // namespace

std::string partition_svg(const SetPartition& pi) {
  const int n = pi.n();
  std::ostringstream os;
  svg_header(os, 400, 400);
  for (const auto& b : pi.blocks()) {
    std::vector<Point> pts;
    for (int v : b) pts.push_back(gon_point(v - 1, n));
    if (b.size() >= 2) draw_block(os, pts);
  }
  std::vector<std::pair<Point, std::string>> verts;
  for (int v = 1; v <= n; ++v) verts.push_back({gon_point(v - 1, n), std::to_string(v)});
  draw_vertices(os, verts);
  os << "</svg>\n";
  return os.str();
}

std::string partition_svg(CoxType type, const SignedPartition& pi) {
  const int n = pi.n();
  std::ostringstream os;
  svg_header(os, 400, 400);
  if (type == CoxType::B) {
    // 2n-gon with labels 1..n, -1..-n clockwise from the top.
    auto pos = [&](int entry) {
      int slot = entry > 0 ? entry - 1 : n + (-entry) - 1;
      return gon_point(slot, 2 * n);
    };
    for (const auto& b : pi.blocks()) {
      if (b.size() < 2) continue;
      std::vector<Point> pts;
      for (int v : b) pts.push_back(pos(v));
      draw_block(os, pts);
    }
    std::vector<std::pair<Point, std::string>> verts;
    for (int v = 1; v <= n; ++v) verts.push_back({pos(v), std::to_string(v)});
    for (int v = 1; v <= n; ++v) verts.push_back({pos(-v), std::to_string(-v)});
    draw_vertices(os, verts);
    os << "</svg>\n";
    return os.str();
  }
  if (type != CoxType::D) throw std::invalid_argument("use the SetPartition overload for type A");
  // 2(n-1)-gon with midpoint n; zero block drawn without ±n, block pairs
  // containing n drawn once through the midpoint.
  const int m = 2 * (n - 1);
  auto pos = [&](int entry) -> Point {
    if (std::abs(entry) == n) return {200, 200};
    int slot = entry > 0 ? entry - 1 : (n - 1) + (-entry) - 1;
    return gon_point(slot, m);
  };
  for (size_t bi = 0; bi < pi.blocks().size(); ++bi) {
    const auto& b = pi.blocks()[bi];
    bool has_neg_n = false;
    for (int v : b) has_neg_n |= v == -n;
    if (has_neg_n && static_cast<int>(bi) != pi.zero_block()) continue;  // drawn via +n
    std::vector<Point> pts;
    for (int v : b) {
      if (static_cast<int>(bi) == pi.zero_block() && std::abs(v) == n) continue;
      pts.push_back(pos(v));
    }
    if (pts.size() >= 2) draw_block(os, pts);
  }
  std::vector<std::pair<Point, std::string>> verts;
  for (int v = 1; v < n; ++v) verts.push_back({pos(v), std::to_string(v)});
  for (int v = 1; v < n; ++v) verts.push_back({pos(-v), std::to_string(-v)});
  draw_vertices(os, verts);
  os << "  <circle cx=\"200\" cy=\"200\" r=\"3.5\" fill=\"#222\"/>\n"
     << "  <text x=\"210\" y=\"195\" font-size=\"15\" font-family=\"sans-serif\">" << n
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string hasse_svg(CoxType type, int rank) {
  const auto& L = NcLattice::get(type, rank);
  std::vector<std::vector<int>> rows(static_cast<size_t>(rank) + 1);
  for (int i = 0; i < L.size(); ++i) rows[L.rank_of(i)].push_back(i);
  size_t widest = 1;
  for (const auto& r : rows) widest = std::max(widest, r.size());
  const int w = static_cast<int>(90 * widest + 60);
  const int h = 110 * (rank + 1) + 40;
  std::vector<Point> at(L.size());
  for (int r = 0; r <= rank; ++r)
    for (size_t k = 0; k < rows[r].size(); ++k) {
      double x = (w - 90.0 * (rows[r].size() - 1)) / 2 + 90.0 * k;
      double y = h - 70 - 110.0 * r;
      at[rows[r][k]] = {x, y};
    }
  std::ostringstream os;
  svg_header(os, w, h);
  // Cover edges.
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j) {
      if (L.rank_of(j) != L.rank_of(i) + 1 || !L.le(i, j)) continue;
      os << "  <line x1=\"" << fmt(at[i].x) << "\" y1=\"" << fmt(at[i].y - 8) << "\" x2=\""
         << fmt(at[j].x) << "\" y2=\"" << fmt(at[j].y + 8)
         << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    }
  for (int i = 0; i < L.size(); ++i)
    os << "  <text x=\"" << fmt(at[i].x) << "\" y=\"" << fmt(at[i].y + 4)
       << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">"
       << element_str(L.element(i), type) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace draw
}  // namespace ncpart

#include "linecon/render.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace linecon {

namespace {

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Shortest fixed-point form with at most three decimals.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string half(int v2) { return num(v2 / 2.0); }

void svg_open(std::ostringstream& os, int w, int h) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 40 * (w + 2)
     << "\" height=\"" << 40 * (h + 2) << "\" viewBox=\"-1 -1 " << w + 2 << ' ' << h + 2
     << "\">\n";
}

void grid(std::ostringstream& os, int w, int h) {
  os << "  <g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.02\" stroke-dasharray=\"0.05 0.05\">\n";
  for (int x = 0; x <= w; ++x)
    os << "    <line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << h << "\"/>\n";
  for (int y = 0; y <= h; ++y)
    os << "    <line x1=\"0\" y1=\"" << y << "\" x2=\"" << w << "\" y2=\"" << y << "\"/>\n";
  os << "  </g>\n";
}

}  // namespace

std::string render_folding_ascii(const Folding& f) {
  std::vector<std::string> rows(f.k + 1, std::string(f.n, ' '));
  for (int x = 0; x < f.n; ++x) {
    const int a = f.heights[x], b = f.heights[x + 1];
    if (b > a) rows[a][x] = '/';
    else if (b < a) rows[b][x] = '\\';
    else rows[a][x] = '_';
  }
  std::string out;
  for (int r = f.k; r >= 0; --r) {
    auto line = rtrim(rows[r]);
    if (r == f.k && line.empty()) continue;
    out += line + '\n';
  }
  return out;
}

std::string render_folding_svg(const Folding& f) {
  std::ostringstream os;
  svg_open(os, f.n, f.k);
  grid(os, f.n, f.k);
  auto y = [&](int h) { return f.k - h; };
  os << "  <polyline class=\"folding\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.05\" points=\"";
  for (int x = 0; x <= f.n; ++x) os << (x ? " " : "") << x << ',' << y(f.heights[x]);
  os << "\"/>\n";
  for (int x = 0; x < f.n; ++x)
    if (f.heights[x] == f.heights[x + 1])
      os << "  <line class=\"rest\" x1=\"" << x << "\" y1=\"" << y(f.heights[x]) << "\" x2=\""
         << x + 1 << "\" y2=\"" << y(f.heights[x]) << "\" stroke=\"#c00000\" stroke-width=\"0.12\"/>\n";
  for (int x = 0; x <= f.n; ++x) {
    os << "  <circle cx=\"" << x << "\" cy=\"" << y(f.heights[x]) << "\" r=\"0.08\"/>\n";
    os << "  <text class=\"label\" x=\"" << x << "\" y=\"" << num(y(f.heights[x]) + 0.4)
       << "\" font-size=\"0.3\" text-anchor=\"middle\">" << x << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_trajectory_ascii(const TrajectoryDiagram& d) {
  const int w = 2 * d.l + 1, h = 2 * d.k + 1;
  std::vector<std::string> g(h, std::string(w, ' '));
  auto at = [&](int x2, int y2) -> char& { return g[y2][x2]; };
  for (int x = 0; x < w; ++x) at(x, 0) = at(x, h - 1) = '-';
  for (int y = 0; y < h; ++y) at(0, y) = at(w - 1, y) = '|';
  at(0, 0) = at(w - 1, 0) = at(0, h - 1) = at(w - 1, h - 1) = '+';
  for (int i = 0; i + 1 < static_cast<int>(d.points.size()); ++i) {
    const Point& p = d.points[i];
    const Point& q = d.points[i + 1];
    const int dx = q.x - p.x, dy = q.y - p.y;
    char c = dx == 0 && dy == 0 ? 'o' : dy == 0 ? '=' : dx == 0 ? 'H' : dx == dy ? '/' : '\\';
    at(p.x + q.x, p.y + q.y) = c;
  }
  for (const auto& p : d.points) at(2 * p.x, 2 * p.y) = 'o';
  for (const auto& c : d.crossings) at(c.at.x2, c.at.y2) = 'X';
  std::string out;
  for (int y = h - 1; y >= 0; --y) out += rtrim(g[y]) + '\n';
  return out;
}

std::string render_trajectory_svg(const TrajectoryDiagram& d) {
  std::ostringstream os;
  svg_open(os, d.l, d.k);
  grid(os, d.l, d.k);
  auto y = [&](int v) { return d.k - v; };
  os << "  <rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << d.l << "\" height=\"" << d.k
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.04\"/>\n";
  os << "  <polyline class=\"trajectory\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.05\" points=\"";
  for (std::size_t i = 0; i < d.points.size(); ++i)
    os << (i ? " " : "") << d.points[i].x << ',' << y(d.points[i].y);
  os << "\"/>\n";
  for (const auto& b : d.bounces) {
    if (!b.is_rest) continue;
    const Point& p = d.points[b.element];
    const Point& q = d.points[b.last];
    os << "  <line class=\"rest\" x1=\"" << p.x << "\" y1=\"" << y(p.y) << "\" x2=\"" << q.x
       << "\" y2=\"" << y(q.y) << "\" stroke=\"#c00000\" stroke-width=\"0.12\"/>\n";
  }
  for (const auto& c : d.crossings)
    os << "  <circle class=\"crossing\" cx=\"" << half(c.at.x2) << "\" cy=\""
       << half(2 * d.k - c.at.y2) << "\" r=\"0.15\" fill=\"none\" stroke=\"#0000c0\" stroke-width=\"0.04\"/>\n";
  std::map<Point, std::string> labels;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    auto& s = labels[d.points[i]];
    s += (s.empty() ? "" : ",") + std::to_string(i);
  }
  for (const auto& [p, text] : labels) {
    os << "  <circle cx=\"" << p.x << "\" cy=\"" << y(p.y) << "\" r=\"0.08\"/>\n";
    os << "  <text class=\"label\" x=\"" << num(p.x + 0.12) << "\" y=\"" << num(y(p.y) - 0.12)
       << "\" font-size=\"0.3\">" << text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace linecon

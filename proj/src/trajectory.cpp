#include "linecon/trajectory.hpp"

#include <algorithm>
#include <map>

#include "linecon/errors.hpp"

namespace linecon {

Folding folding(const Congruence& c) {
  if (c.is_total()) throw DomainError("folding of the total congruence");
  Folding f{c.n(), c.step(), {}};
  for (int x = 0; x <= c.n(); ++x) f.heights.push_back(height(c, x));
  return f;
}

namespace {

long long cross(long long ax, long long ay, long long bx, long long by) { return ax * by - ay * bx; }

struct Seg {
  HalfPoint a, b;
  bool degenerate() const { return a == b; }
};

HalfPoint doubled(const Point& p) { return {2 * p.x, 2 * p.y}; }

bool on_segment(const Seg& s, const HalfPoint& p) {
  if (cross(s.b.x2 - s.a.x2, s.b.y2 - s.a.y2, p.x2 - s.a.x2, p.y2 - s.a.y2) != 0) return false;
  return std::min(s.a.x2, s.b.x2) <= p.x2 && p.x2 <= std::max(s.a.x2, s.b.x2) &&
         std::min(s.a.y2, s.b.y2) <= p.y2 && p.y2 <= std::max(s.a.y2, s.b.y2);
}

// Shared piece of two collinear segments; false unless it has positive length.
bool collinear_overlap(const Seg& s, const Seg& t, HalfPoint& from, HalfPoint& to) {
  std::vector<HalfPoint> shared;
  for (const auto& p : {s.a, s.b})
    if (on_segment(t, p)) shared.push_back(p);
  for (const auto& p : {t.a, t.b})
    if (on_segment(s, p)) shared.push_back(p);
  if (shared.empty()) return false;
  auto [lo, hi] = std::minmax_element(shared.begin(), shared.end());
  from = *lo;
  to = *hi;
  return from != to;
}

enum class Hit { None, Point, Overlap };

Hit intersect(const Seg& s, const Seg& t, HalfPoint& out, HalfPoint& out2) {
  const long long d1x = s.b.x2 - s.a.x2, d1y = s.b.y2 - s.a.y2;
  const long long d2x = t.b.x2 - t.a.x2, d2y = t.b.y2 - t.a.y2;
  const long long ex = t.a.x2 - s.a.x2, ey = t.a.y2 - s.a.y2;
  const long long den = cross(d1x, d1y, d2x, d2y);
  if (den == 0) {
    if (cross(ex, ey, d1x, d1y) != 0) return Hit::None;
    if (collinear_overlap(s, t, out, out2)) return Hit::Overlap;
    // collinear, touching in at most one point
    for (const auto& p : {t.a, t.b})
      if (p == s.a || p == s.b) {
        out = p;
        return Hit::Point;
      }
    return Hit::None;
  }
  long long tn = cross(ex, ey, d2x, d2y), un = cross(ex, ey, d1x, d1y);
  long long d = den;
  if (d < 0) {
    d = -d;
    tn = -tn;
    un = -un;
  }
  if (tn < 0 || tn > d || un < 0 || un > d) return Hit::None;
  const long long px = s.a.x2 * d + tn * d1x, py = s.a.y2 * d + tn * d1y;
  if (px % d != 0 || py % d != 0) throw ContractViolation("crossing off the half-unit grid");
  out = {static_cast<int>(px / d), static_cast<int>(py / d)};
  return Hit::Point;
}

struct Contact {
  unsigned sides;
  int first, last;
  bool rest;
};

void collect_contacts(const Congruence& c, unsigned low_side, unsigned high_side,
                      std::vector<Contact>& out) {
  for (int x = 1; x < c.n(); ++x) {
    if (!is_extreme(c, x)) continue;
    auto side = rest_side(c, x);
    if (side == RestSide::Right) continue;
    const unsigned s = height(c, x) == 0 ? low_side : high_side;
    const bool rest = side == RestSide::Left;
    out.push_back({s, x, rest ? x + 1 : x, rest});
  }
}

}  // namespace

TrajectoryDiagram build_trajectory(const Congruence& th, const Congruence& dl) {
  if (th.n() != dl.n()) throw DomainError("congruences live on different lines");
  if (th.is_total() || dl.is_total()) throw DomainError("trajectory of a total congruence");
  if (th.step() > dl.step()) throw DomainError("trajectory needs step(th) <= step(dl)");
  TrajectoryDiagram d;
  d.n = th.n();
  d.k = th.step();
  d.l = dl.step();
  for (int x = 0; x <= d.n; ++x) d.points.push_back({height(dl, x), height(th, x)});

  std::vector<Contact> contacts;
  collect_contacts(th, kBottom, kTop, contacts);
  collect_contacts(dl, kLeft, kRight, contacts);
  std::sort(contacts.begin(), contacts.end(),
            [](const Contact& a, const Contact& b) { return a.first < b.first; });
  std::vector<Contact> merged;
  for (const auto& c : contacts) {
    if (!merged.empty() && c.first <= merged.back().last) {
      auto& m = merged.back();
      m.sides |= c.sides;
      m.last = std::max(m.last, c.last);
      m.rest = m.rest || c.rest;
    } else {
      merged.push_back(c);
    }
  }
  for (const auto& m : merged) {
    const Point& p = d.points[m.first];
    const Point& q = d.points[m.last];
    d.bounces.push_back({m.sides, m.first, m.last, {p.x + q.x, p.y + q.y}, m.rest});
  }

  std::vector<Seg> segs;
  for (int i = 0; i < d.n; ++i) segs.push_back({doubled(d.points[i]), doubled(d.points[i + 1])});
  std::map<HalfPoint, Crossing> found;
  for (int i = 0; i < d.n; ++i) {
    if (segs[i].degenerate()) continue;
    for (int j = i + 1; j < d.n; ++j) {
      if (segs[j].degenerate()) continue;
      // segments joined through P(i+1) = ... = P(j) are consecutive on the trajectory
      bool consecutive = true;
      for (int m = i + 1; m < j && consecutive; ++m) consecutive = segs[m].degenerate();
      HalfPoint at, to;
      Hit hit = intersect(segs[i], segs[j], at, to);
      if (hit == Hit::Overlap) {
        d.overlaps.push_back({i, j, at, to});
        continue;
      }
      if (hit != Hit::Point) continue;
      if (consecutive && at == segs[i].b) continue;
      if (at.x2 <= 0 || at.x2 >= 2 * d.l || at.y2 <= 0 || at.y2 >= 2 * d.k) continue;
      auto& c = found[at];
      c.at = at;
      c.segments.emplace_back(i, j);
    }
  }
  // points on a shared piece are not isolated intersections
  for (auto& [at, c] : found) {
    bool isolated = std::none_of(d.overlaps.begin(), d.overlaps.end(), [&](const Overlap& o) {
      return on_segment({o.from, o.to}, at);
    });
    if (isolated) d.crossings.push_back(std::move(c));
  }
  return d;
}

CrossingCounts crossing_counts(const TrajectoryDiagram& d) {
  CrossingCounts c;
  for (const auto& x : d.crossings) (x.at.integral() ? c.i : c.h)++;
  return c;
}

}  // namespace linecon

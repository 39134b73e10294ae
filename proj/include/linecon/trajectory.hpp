#pragma once

#include <utility>
#include <vector>

#include "linecon/congruence.hpp"

namespace linecon {

/// Height profile of a congruence: heights[x] is the element of [0, step]
/// related to x.
struct Folding {
  int n = 0;
  int k = 0;
  std::vector<int> heights;
};

/// Throws DomainError on Total.
Folding folding(const Congruence& c);

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A point with coordinates stored doubled, so half units are exact.
struct HalfPoint {
  int x2 = 0;
  int y2 = 0;
  bool integral() const { return x2 % 2 == 0 && y2 % 2 == 0; }
  friend bool operator==(const HalfPoint&, const HalfPoint&) = default;
  friend auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

enum Side : unsigned { kBottom = 1, kTop = 2, kLeft = 4, kRight = 8 };

/// A contact of the trajectory with the border. A rest bounce spans the
/// two elements of the rest and is centered at their midpoint; a bounce at
/// a corner carries two side flags.
struct Bounce {
  unsigned sides = 0;
  int element = 0;      // first element of the contact
  int last = 0;         // last element (element + 1 for rests)
  HalfPoint center;
  bool is_rest = false;

  bool corner() const { return (sides & (kBottom | kTop)) && (sides & (kLeft | kRight)); }
};

/// An isolated interior self-intersection, with every pair of segments
/// meeting there (segment i joins P(i) and P(i+1)).
struct Crossing {
  HalfPoint at;
  std::vector<std::pair<int, int>> segments;
};

/// Two segments sharing a piece of positive length, from..to.
struct Overlap {
  int first = 0;
  int second = 0;
  HalfPoint from;
  HalfPoint to;
};

/// Trajectory of a pair (th, dl) with step(th) = k <= step(dl) = l:
/// P(x) = (height under dl, height under th) inside the l x k rectangle.
struct TrajectoryDiagram {
  int n = 0;
  int k = 0;
  int l = 0;
  std::vector<Point> points;
  std::vector<Bounce> bounces;
  std::vector<Crossing> crossings;
  std::vector<Overlap> overlaps;

  int segment_count() const { return static_cast<int>(points.size()) - 1; }
};

/// Throws DomainError on Total arguments, mismatched lines, or
/// step(th) > step(dl).
TrajectoryDiagram build_trajectory(const Congruence& th, const Congruence& dl);

struct CrossingCounts {
  int i = 0;  // integral coordinates
  int h = 0;  // half-integral coordinates
  int total() const { return i + h; }
  friend bool operator==(const CrossingCounts&, const CrossingCounts&) = default;
};

CrossingCounts crossing_counts(const TrajectoryDiagram& d);

}  // namespace linecon

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stringob/rational.hpp"

namespace stringob::geometry {

using Polyline = std::vector<Point>;

/// Sign of the turn a -> b -> c: +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// p lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

/// p lies on [a, b] but is neither endpoint.
bool in_segment_interior(const Point& p, const Point& a, const Point& b);

enum class Contact {
  none,
  proper,    // single point interior to both segments, transversal
  touching,  // single point, at least one of the segments ends there
  overlap,   // collinear with a common piece of positive length
};

struct SegmentContact {
  Contact kind = Contact::none;
  /// Set for proper and touching contacts.
  std::optional<Point> point;
};

SegmentContact classify_contact(const Point& a, const Point& b, const Point& c, const Point& d);

/// Closed-set intersection test; degenerate segments (a == b) are points.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Parameter t in [0, 1] with p = a + t (b - a); requires p on [a, b] and a != b.
Rational segment_parameter(const Point& p, const Point& a, const Point& b);

/// Squared Euclidean distance from p to the closed segment [a, b].
Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b);

inline Rational squared_distance(const Point& a, const Point& b) {
  Point d = a - b;
  return dot(d, d);
}

/// Set-level test on polylines; a one-point polyline is a point.
bool polylines_intersect(std::span<const Point> p, std::span<const Point> q);

/// Lexicographically least point of the intersection of two polylines.
std::optional<Point> least_common_point(std::span<const Point> p, std::span<const Point> q);

/// Strict interior test for a simple polygon; boundary points count as outside.
bool strictly_inside_polygon(const Point& p, std::span<const Point> polygon);

/// p lies on the closed boundary of the polygon.
bool on_polygon_boundary(const Point& p, std::span<const Point> polygon);

/// Rational point exactly on the circle of the given radius, at an angle close
/// to `degrees` (tangent half-angle parametrization, t rounded to 1/denominator).
Point rational_circle_point(double degrees, const Rational& radius, long denominator = 1000000);

}  // namespace stringob::geometry

#include "stringob/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stringob::geometry {

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(cross(b - a, c - a));
}

namespace {

bool within_box(const Point& p, const Point& a, const Point& b) {
  const Rational& lox = a.x < b.x ? a.x : b.x;
  const Rational& hix = a.x < b.x ? b.x : a.x;
  const Rational& loy = a.y < b.y ? a.y : b.y;
  const Rational& hiy = a.y < b.y ? b.y : a.y;
  return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

// Cheap rejection before any orientation test.
bool boxes_disjoint(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto [ax0, ax1] = std::minmax(a.x, b.x);
  auto [cx0, cx1] = std::minmax(c.x, d.x);
  if (ax1 < cx0 || cx1 < ax0) return true;
  auto [ay0, ay1] = std::minmax(a.y, b.y);
  auto [cy0, cy1] = std::minmax(c.y, d.y);
  return ay1 < cy0 || cy1 < ay0;
}

}  // namespace

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return orientation(a, b, p) == 0 && within_box(p, a, b);
}

bool in_segment_interior(const Point& p, const Point& a, const Point& b) {
  return !(p == a) && !(p == b) && on_segment(p, a, b);
}

SegmentContact classify_contact(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (boxes_disjoint(a, b, c, d)) return {};
  if (a == b) {
    if (on_segment(a, c, d)) return {Contact::touching, a};
    return {};
  }
  if (c == d) {
    if (on_segment(c, a, b)) return {Contact::touching, c};
    return {};
  }
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    Point ab = b - a;
    Point cd = d - c;
    Rational t = cross(c - a, cd) / cross(ab, cd);
    return {Contact::proper, a + t * ab};
  }
  if (o1 == 0 && o2 == 0) {
    // Collinear: lexicographic order is the order along the common line.
    const Point& lo1 = a < b ? a : b;
    const Point& hi1 = a < b ? b : a;
    const Point& lo2 = c < d ? c : d;
    const Point& hi2 = c < d ? d : c;
    const Point& lo = lo1 < lo2 ? lo2 : lo1;
    const Point& hi = hi1 < hi2 ? hi1 : hi2;
    if (hi < lo) return {};
    if (lo == hi) return {Contact::touching, lo};
    return {Contact::overlap, lo};
  }
  if (o1 == 0 && within_box(c, a, b)) return {Contact::touching, c};
  if (o2 == 0 && within_box(d, a, b)) return {Contact::touching, d};
  if (o3 == 0 && within_box(a, c, d)) return {Contact::touching, a};
  if (o4 == 0 && within_box(b, c, d)) return {Contact::touching, b};
  return {};
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  return classify_contact(a, b, c, d).kind != Contact::none;
}

Rational segment_parameter(const Point& p, const Point& a, const Point& b) {
  Point ab = b - a;
  return dot(p - a, ab) / dot(ab, ab);
}

Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b) {
  if (a == b) return squared_distance(p, a);
  Rational t = segment_parameter(p, a, b);
  if (t <= 0) return squared_distance(p, a);
  if (t >= 1) return squared_distance(p, b);
  return squared_distance(p, a + t * (b - a));
}

namespace {

template <typename Visit>
void for_each_piece_pair(std::span<const Point> p, std::span<const Point> q, Visit&& visit) {
  // A one-point polyline is treated as the degenerate segment [p0, p0].
  std::size_t np = p.size() == 1 ? 1 : p.size() - 1;
  std::size_t nq = q.size() == 1 ? 1 : q.size() - 1;
  if (p.empty() || q.empty()) return;
  for (std::size_t i = 0; i < np; ++i) {
    const Point& a = p[i];
    const Point& b = p.size() == 1 ? p[0] : p[i + 1];
    for (std::size_t j = 0; j < nq; ++j) {
      const Point& c = q[j];
      const Point& d = q.size() == 1 ? q[0] : q[j + 1];
      if (!visit(a, b, c, d)) return;
    }
  }
}

}  // namespace

bool polylines_intersect(std::span<const Point> p, std::span<const Point> q) {
  bool found = false;
  for_each_piece_pair(p, q, [&](const Point& a, const Point& b, const Point& c, const Point& d) {
    found = segments_intersect(a, b, c, d);
    return !found;
  });
  return found;
}

std::optional<Point> least_common_point(std::span<const Point> p, std::span<const Point> q) {
  std::optional<Point> best;
  for_each_piece_pair(p, q, [&](const Point& a, const Point& b, const Point& c, const Point& d) {
    SegmentContact contact = classify_contact(a, b, c, d);
    if (contact.kind != Contact::none && (!best || *contact.point < *best)) best = contact.point;
    return true;
  });
  return best;
}

bool on_polygon_boundary(const Point& p, std::span<const Point> polygon) {
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (on_segment(p, polygon[i], polygon[(i + 1) % polygon.size()])) return true;
  }
  return false;
}

bool strictly_inside_polygon(const Point& p, std::span<const Point> polygon) {
  if (polygon.size() < 3 || on_polygon_boundary(p, polygon)) return false;
  bool inside = false;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const Point& vi = polygon[i];
    const Point& vj = polygon[j];
    if ((vi.y > p.y) != (vj.y > p.y)) {
      Rational x = vi.x + (p.y - vi.y) * (vj.x - vi.x) / (vj.y - vi.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

Point rational_circle_point(double degrees, const Rational& radius, long denominator) {
  double deg = std::fmod(degrees, 360.0);
  if (deg > 180.0) deg -= 360.0;
  if (deg <= -180.0) deg += 360.0;
  bool flip = false;
  if (deg > 90.0) {
    deg -= 180.0;
    flip = true;
  } else if (deg < -90.0) {
    deg += 180.0;
    flip = true;
  }
  Rational t = rational_from_double(std::tan(deg * std::numbers::pi / 360.0), denominator);
  Rational denom = 1 + t * t;
  Rational x = radius * (1 - t * t) / denom;
  Rational y = radius * 2 * t / denom;
  if (flip) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

}  // namespace stringob::geometry

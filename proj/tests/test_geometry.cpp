#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stringob/geometry.hpp"

using namespace stringob;
using namespace stringob::geometry;

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("segment contact classification") {
  Point o(0, 0), a(2, 0), b(0, 2), c(2, 2), m(1, 0);
  auto x = classify_contact(o, c, a, b);
  CHECK(x.kind == Contact::proper);
  CHECK(*x.point == Point(1, 1));

  CHECK(classify_contact(o, a, o, b).kind == Contact::touching);     // shared endpoint
  CHECK(classify_contact(o, a, m, Point(1, 5)).kind == Contact::touching);  // T-junction
  CHECK(*classify_contact(o, a, m, Point(1, 5)).point == m);
  CHECK(classify_contact(o, a, m, Point(3, 0)).kind == Contact::overlap);
  CHECK(classify_contact(o, a, a, Point(3, 0)).kind == Contact::touching);  // collinear, one point
  CHECK(classify_contact(o, m, Point(3, 0), Point(4, 0)).kind == Contact::none);
  CHECK(classify_contact(o, a, b, c).kind == Contact::none);
  CHECK(classify_contact(m, m, o, a).kind == Contact::touching);  // degenerate segment
  CHECK(classify_contact(b, b, o, a).kind == Contact::none);
}

TEST_CASE("proper crossings agree with an integer orientation oracle") {
  std::mt19937_64 rng(17);
  auto coord = [&] { return static_cast<long>(rng() % 9); };
  int proper = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    long v[8];
    for (long& x : v) x = coord();
    Point a(v[0], v[1]), b(v[2], v[3]), c(v[4], v[5]), d(v[6], v[7]);
    if (a == b || c == d) continue;
    bool expected = oracle::proper_cross({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]});
    auto contact = classify_contact(a, b, c, d);
    CHECK((contact.kind == Contact::proper) == expected);
    if (expected) {
      ++proper;
      CHECK(on_segment(*contact.point, a, b));
      CHECK(on_segment(*contact.point, c, d));
    }
    // Contact of any kind is symmetric.
    CHECK(classify_contact(c, d, a, b).kind == contact.kind);
  }
  CHECK(proper > 1000);
}

TEST_CASE("polylines and polygons") {
  Polyline zig{Point(0, 0), Point(2, 2), Point(4, 0)};
  Polyline bar{Point(0, 1), Point(4, 1)};
  Polyline dot{Point(2, 2)};
  CHECK(polylines_intersect(zig, bar));
  CHECK(polylines_intersect(zig, dot));
  CHECK_FALSE(polylines_intersect(bar, dot));
  CHECK(*least_common_point(zig, bar) == Point(1, 1));

  std::vector<Point> square{Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)};
  CHECK(strictly_inside_polygon(Point(2, 2), square));
  CHECK_FALSE(strictly_inside_polygon(Point(4, 2), square));
  CHECK(on_polygon_boundary(Point(4, 2), square));
  CHECK_FALSE(strictly_inside_polygon(Point(5, 2), square));
}

TEST_CASE("distances") {
  CHECK(squared_distance_to_segment(Point(1, 3), Point(0, 0), Point(4, 0)) == 9);
  CHECK(squared_distance_to_segment(Point(-3, 4), Point(0, 0), Point(4, 0)) == 25);
  CHECK(segment_parameter(Point(1, 0), Point(0, 0), Point(4, 0)) == Rational(1, 4));
}

TEST_CASE("rational circle points lie exactly on the circle") {
  for (int deg = 0; deg < 360; deg += 7) {
    Point p = rational_circle_point(deg, Rational(1000));
    CHECK(dot(p, p) == Rational(1000000));
    CHECK(std::abs(p.x.get_d() - 1000 * std::cos(deg * M_PI / 180)) < 1e-2);
  }
}

#include "stringob/figures.hpp"

#include <numeric>

#include "stringob/generators.hpp"

namespace stringob::figures {

namespace {

Point midpoint(const Point& a, const Point& b) { return Rational(1, 2) * (a + b); }

}  // namespace

Graph finger_move_example_graph() {
  return make_graph(6, {{0, 1}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {2, 5}});
}

Drawing finger_move_example_drawing() {
  std::vector<Point> pos = {
      {Rational(0), Rational(0)},
      {Rational(0), Rational(6)},
      {Rational(394, 100), Rational(6)},
      {Rational(488, 100), Rational(255, 100)},
      {Rational(687, 100), Rational(162, 100)},
      {Rational(232, 100), Rational(0)},
  };
  return straight_line_drawing(finger_move_example_graph(), std::move(pos));
}

Drawing heawood_drawing() {
  Graph g = generators::heawood();
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  return layout_convex_order(g, order);
}

Drawing gp_drawing() {
  Graph g = generators::gp();
  const Rational inner(7, 5), outer(5, 2);
  std::vector<Point> pos(18);
  for (int i = 0; i < 5; ++i) {
    pos[i] = geometry::rational_circle_point(90.0 - 72.0 * i, inner);
    pos[5 + i] = geometry::rational_circle_point(90.0 - 72.0 * i, outer);
  }
  pos[10] = midpoint(pos[5], pos[6]);
  pos[11] = midpoint(pos[6], pos[7]);
  pos[12] = midpoint(pos[7], pos[8]);
  pos[13] = midpoint(pos[8], pos[9]);
  pos[14] = midpoint(pos[5], pos[9]);
  pos[15] = midpoint(pos[1], pos[6]);
  pos[16] = midpoint(pos[3], pos[8]);
  pos[17] = midpoint(pos[4], pos[9]);
  Drawing d = straight_line_drawing(g, std::move(pos));
  require_generic(d);
  return d;
}

Drawing c_cbar_drawing(std::size_t n) {
  Graph g = generators::c_cbar(n);
  const Rational inner(7, 5), outer(5, 2);
  const double step = 360.0 / static_cast<double>(n);
  std::mt19937_64 rng(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> pos(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
      double angle = 120.0 - step * static_cast<double>(i);
      double nudge = attempt == 0 ? 0.0 : step * 0.1 * (generators::unit_uniform(rng) - 0.5);
      pos[i] = geometry::rational_circle_point(angle + nudge, inner);
      pos[n + i] = geometry::rational_circle_point(angle, outer);
    }
    for (std::size_t i = 0; i < n; ++i) {
      pos[2 * n + i] = midpoint(pos[n + i], pos[n + (i + 1) % n]);
      pos[3 * n + i] = midpoint(pos[i], pos[n + i]);
    }
    Drawing d = straight_line_drawing(g, std::move(pos));
    if (validate_generic(d).empty()) return d;
  }
  throw std::runtime_error("no generic layout found for c_cbar");
}

}  // namespace stringob::figures

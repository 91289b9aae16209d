#include "stringob/strings.hpp"

#include <algorithm>

namespace stringob {

std::string StringViolation::describe() const {
  return "{" + std::to_string(v) + "," + std::to_string(w) + "} " +
         (missing_intersection ? "edge with disjoint curves" : "non-edge with intersecting curves");
}

StringReport verify_string_representation(const StringRepresentation& rep) {
  StringReport report;
  const std::size_t n = rep.graph.vertex_count();
  if (rep.curves.size() != n) {
    report.malformed = "expected " + std::to_string(n) + " curves, got " + std::to_string(rep.curves.size());
    return report;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (rep.curves[v].empty()) {
      report.malformed = "curve " + std::to_string(v) + " is empty";
      return report;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = v + 1; w < n; ++w) {
      bool meet = geometry::polylines_intersect(rep.curves[v], rep.curves[w]);
      bool edge = rep.graph.adjacent(v, w);
      if (meet != edge) report.violations.push_back({v, w, edge});
    }
  }
  return report;
}

namespace {

// Position of a point on a polyline: segment index and the point itself.
struct Location {
  std::size_t segment;
  Rational t;
  Point p;
};

Location locate(const Polyline& curve, const Point& p) {
  if (curve.size() == 1) return {0, 0, p};
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (geometry::on_segment(p, curve[i], curve[i + 1])) {
      Rational t = curve[i] == curve[i + 1] ? Rational(0) : geometry::segment_parameter(p, curve[i], curve[i + 1]);
      return {i, t, p};
    }
  }
  throw std::logic_error("point is not on the curve");
}

void push_point(Polyline& path, const Point& p) {
  if (path.empty() || !(path.back() == p)) path.push_back(p);
}

// The part of the curve between two of its points, walked from `from` to `to`.
Polyline subpath(const Polyline& curve, const Location& from, const Location& to) {
  Polyline path;
  push_point(path, from.p);
  if (from.segment < to.segment || (from.segment == to.segment && from.t <= to.t)) {
    for (std::size_t k = from.segment + 1; k <= to.segment; ++k) push_point(path, curve[k]);
  } else {
    for (std::size_t k = from.segment; k > to.segment; --k) push_point(path, curve[k]);
  }
  push_point(path, to.p);
  if (path.size() == 1) path.push_back(path.front());  // degenerate [p, p]
  return path;
}

// A point of the curve avoiding `avoid` when one exists: curve points first,
// then interior points of segments.
Point pick_vertex_point(const Polyline& curve, const std::vector<Point>& avoid) {
  auto free = [&](const Point& p) { return std::find(avoid.begin(), avoid.end(), p) == avoid.end(); };
  for (const Point& p : curve)
    if (free(p)) return p;
  static const Rational fractions[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4), Rational(3, 4)};
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (curve[i] == curve[i + 1]) continue;
    for (const Rational& t : fractions) {
      Point p = curve[i] + t * (curve[i + 1] - curve[i]);
      if (free(p)) return p;
    }
  }
  return curve.front();
}

}  // namespace

Drawing drawing_from_strings(const StringRepresentation& rep) {
  StringReport check = verify_string_representation(rep);
  if (!check.valid()) {
    std::string why = !check.malformed.empty() ? check.malformed : check.violations.front().describe();
    throw InvalidRepresentation("invalid string representation: " + why);
  }
  const Graph& g = rep.graph;
  const SubdivisionMap sub = barycentric_subdivision(g);
  const std::size_t n = g.vertex_count();

  std::vector<Point> edge_point;
  edge_point.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edge_point.push_back(*geometry::least_common_point(rep.curves[e.u], rep.curves[e.v]));

  Drawing d;
  d.graph = sub.star;
  d.vertex_pos.resize(n + g.edge_count());
  for (VertexId v = 0; v < n; ++v) d.vertex_pos[v] = pick_vertex_point(rep.curves[v], edge_point);
  for (EdgeId a = 0; a < g.edge_count(); ++a) d.vertex_pos[sub.edge_node(a)] = edge_point[a];

  d.edge_path.resize(sub.star.edge_count());
  for (EdgeId h = 0; h < sub.star.edge_count(); ++h) {
    const auto [v, alpha] = sub.edge_origin[h];
    const Polyline& curve = rep.curves[v];
    d.edge_path[h] = subpath(curve, locate(curve, d.vertex_pos[v]), locate(curve, edge_point[alpha]));
  }
  return d;
}

SdReport verify_sd_disjointness(const SubdivisionMap& sub, const Drawing& d) {
  if (!(d.graph == sub.star) || d.edge_path.size() != sub.star.edge_count())
    throw std::invalid_argument("drawing is not a drawing of the subdivision");
  SdReport report;
  const std::size_t m = sub.star.edge_count();
  for (EdgeId a = 0; a < m; ++a)
    for (EdgeId b = a + 1; b < m; ++b)
      if (sd_pair_condition(sub, a, b) && geometry::polylines_intersect(d.edge_path[a], d.edge_path[b]))
        report.violations.push_back({a, b});
  return report;
}

StringRepresentation strings_from_drawing(const SubdivisionMap& sub, const Drawing& d) {
  SdReport check = verify_sd_disjointness(sub, d);
  if (!check.passes()) {
    const auto& bad = check.violations.front();
    throw InvalidRepresentation("images of subdivision edges " + std::to_string(bad.a) + " and " +
                                std::to_string(bad.b) + " intersect");
  }
  const Graph& g = sub.base;
  StringRepresentation rep{g, std::vector<Polyline>(g.vertex_count())};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Polyline& curve = rep.curves[v];
    curve.push_back(d.vertex_pos[v]);
    for (EdgeId alpha : g.incident(v)) {
      const Polyline& half = d.edge_path[sub.half(v, alpha)];
      // Half-edges run from g(v) to g(alpha); walk out, then back.
      for (const Point& p : half) push_point(curve, p);
      for (auto it = half.rbegin(); it != half.rend(); ++it) push_point(curve, *it);
    }
  }
  return rep;
}

}  // namespace stringob

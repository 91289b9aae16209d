#include "stringob/drawing.hpp"

#include "stringob/generators.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>

namespace stringob {

using geometry::Contact;

namespace {

std::string describe(const Point& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

struct SegmentRef {
  EdgeId edge;
  std::size_t index;  // segment i joins path[i] and path[i + 1]
};

std::vector<SegmentRef> all_segments(const Drawing& d) {
  std::vector<SegmentRef> segs;
  for (EdgeId e = 0; e < d.edge_path.size(); ++e)
    for (std::size_t i = 0; i + 1 < d.edge_path[e].size(); ++i) segs.push_back({e, i});
  return segs;
}

}  // namespace

NonGenericDrawing::NonGenericDrawing(std::vector<Violation> violations)
    : std::invalid_argument("drawing is not in general position" +
                            (violations.empty() ? std::string() : ": " + violations.front().kind + " " +
                                                                      violations.front().detail)),
      violations_(std::move(violations)) {}

std::size_t CrossingVector::odd_count() const {
  return static_cast<std::size_t>(std::count(mod2.begin(), mod2.end(), 1));
}

Drawing straight_line_drawing(const Graph& g, std::vector<Point> positions) {
  if (positions.size() != g.vertex_count()) throw std::invalid_argument("one position per vertex required");
  Drawing d{g, std::move(positions), {}};
  d.edge_path.reserve(g.edge_count());
  for (const Edge& e : g.edges()) d.edge_path.push_back({d.vertex_pos[e.u], d.vertex_pos[e.v]});
  return d;
}

Drawing layout_moment_curve(const Graph& g) {
  std::vector<Point> pos;
  pos.reserve(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    auto x = static_cast<long>(i);
    pos.emplace_back(Rational(x), Rational(x * x));
  }
  return straight_line_drawing(g, std::move(pos));
}

Drawing layout_convex_order(const Graph& g, const std::vector<VertexId>& order) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw std::invalid_argument("order is not a permutation of the vertices");
  for (VertexId v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("order is not a permutation of the vertices");
    seen[v] = true;
  }
  const Rational radius(1000);
  std::mt19937_64 jitter_rng(0x5eed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> pos(n);
    for (std::size_t k = 0; k < n; ++k) {
      double angle = 360.0 * static_cast<double>(k) / static_cast<double>(n);
      if (attempt > 0) angle += (360.0 / static_cast<double>(n)) * 0.2 * (generators::unit_uniform(jitter_rng) - 0.5);
      pos[order[k]] = geometry::rational_circle_point(angle, radius);
    }
    Drawing d = straight_line_drawing(g, std::move(pos));
    if (validate_generic(d).empty()) return d;
  }
  throw std::runtime_error("could not place vertices in general convex position");
}

Drawing layout_random(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pos;
    pos.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      pos.emplace_back(static_cast<long>(rng() % 65536), static_cast<long>(rng() % 65536));
    Drawing d = straight_line_drawing(g, std::move(pos));
    if (validate_generic(d).empty()) return d;
  }
  throw std::runtime_error("could not sample a generic random layout");
}

std::vector<Violation> validate_generic(const Drawing& d) {
  std::vector<Violation> out;
  const Graph& g = d.graph;
  if (d.vertex_pos.size() != g.vertex_count() || d.edge_path.size() != g.edge_count()) {
    out.push_back({"malformed", "position or path count does not match the graph"});
    return out;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Polyline& path = d.edge_path[e];
    const std::string name = "edge " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
    if (path.size() < 2) {
      out.push_back({"malformed", name + " has fewer than two points"});
      continue;
    }
    if (!(path.front() == d.vertex_pos[g.edge(e).u]) || !(path.back() == d.vertex_pos[g.edge(e).v]))
      out.push_back({"endpoint mismatch", name});
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (path[i] == path[i + 1]) out.push_back({"zero-length segment", name + " at " + describe(path[i])});
  }
  if (!out.empty()) return out;

  // Vertex points and bend points, each tagged with what it is.
  struct Feature {
    Point p;
    std::string what;
  };
  std::vector<Feature> features;
  for (VertexId v = 0; v < g.vertex_count(); ++v) features.push_back({d.vertex_pos[v], "vertex " + std::to_string(v)});
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (std::size_t i = 1; i + 1 < d.edge_path[e].size(); ++i)
      features.push_back({d.edge_path[e][i], "bend of edge " + std::to_string(e)});

  std::vector<std::size_t> order(features.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return features[a].p < features[b].p; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (features[order[i]].p == features[order[i + 1]].p)
      out.push_back({"coincident points", features[order[i]].what + " and " + features[order[i + 1]].what + " at " +
                                              describe(features[order[i]].p)});
  }

  const auto segs = all_segments(d);
  auto seg_a = [&](const SegmentRef& s) -> const Point& { return d.edge_path[s.edge][s.index]; };
  auto seg_b = [&](const SegmentRef& s) -> const Point& { return d.edge_path[s.edge][s.index + 1]; };

  for (const Feature& f : features) {
    for (const SegmentRef& s : segs) {
      if (geometry::in_segment_interior(f.p, seg_a(s), seg_b(s)))
        out.push_back({"vertex on segment interior",
                       f.what + " lies inside a segment of edge " + std::to_string(s.edge)});
    }
  }

  auto is_vertex_end = [&](const SegmentRef& s, const Point& p) {
    const Polyline& path = d.edge_path[s.edge];
    return (s.index == 0 && path.front() == p) || (s.index + 2 == path.size() && path.back() == p);
  };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const SegmentRef& s = segs[i];
      const SegmentRef& t = segs[j];
      if (s.edge == t.edge && t.index == s.index + 1) continue;  // consecutive pieces share a bend
      auto contact = geometry::classify_contact(seg_a(s), seg_b(s), seg_a(t), seg_b(t));
      if (contact.kind == Contact::none || contact.kind == Contact::proper) continue;
      if (contact.kind == Contact::touching && is_vertex_end(s, *contact.point) && is_vertex_end(t, *contact.point) &&
          s.edge != t.edge)
        continue;
      out.push_back({"non-transversal intersection", "segments of edges " + std::to_string(s.edge) + " and " +
                                                         std::to_string(t.edge) + " at " + describe(*contact.point)});
    }
  }
  return out;
}

void require_generic(const Drawing& d) {
  auto violations = validate_generic(d);
  if (!violations.empty()) throw NonGenericDrawing(std::move(violations));
}

std::size_t count_crossings(const Polyline& a, const Polyline& b) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
      if (geometry::classify_contact(a[i], a[i + 1], b[j], b[j + 1]).kind == Contact::proper) ++count;
  return count;
}

std::int64_t signed_crossings(const Polyline& a, const Polyline& b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      if (geometry::classify_contact(a[i], a[i + 1], b[j], b[j + 1]).kind != Contact::proper) continue;
      total += sgn(cross(a[i + 1] - a[i], b[j + 1] - b[j]));
    }
  }
  return total;
}

CrossingVector crossing_vector(const Drawing& d, const EdgePairSet& pairs) {
  if (!(d.graph == pairs.graph())) throw std::invalid_argument("drawing and pair set refer to different graphs");
  require_generic(d);
  CrossingVector cv;
  cv.mod2.resize(pairs.size());
  cv.signed_count.resize(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    const Polyline& pa = d.edge_path[a];
    const Polyline& pb = d.edge_path[b];
    std::size_t count = 0;
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
      for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
        if (geometry::classify_contact(pa[i], pa[i + 1], pb[j], pb[j + 1]).kind != Contact::proper) continue;
        ++count;
        total += sgn(cross(pa[i + 1] - pa[i], pb[j + 1] - pb[j]));
      }
    }
    cv.mod2[k] = static_cast<std::uint8_t>(count & 1U);
    cv.signed_count[k] = total;
  }
  return cv;
}

}  // namespace stringob

#include <array>

#include "stringob/drawing.hpp"

namespace stringob {

using geometry::Contact;

namespace {

// Smallest squared distance from u to anything the finger must not reach:
// other vertices, bends, and segments that do not end at u.
Rational clearance_squared(const Drawing& d, VertexId u) {
  const Point& up = d.vertex_pos[u];
  std::optional<Rational> best;
  auto consider = [&](Rational value) {
    if (!best || value < *best) best = std::move(value);
  };
  for (VertexId v = 0; v < d.vertex_pos.size(); ++v)
    if (v != u) consider(geometry::squared_distance(up, d.vertex_pos[v]));
  for (const Polyline& path : d.edge_path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (i > 0) consider(geometry::squared_distance(up, path[i]));
      if (path[i] == up || path[i + 1] == up) continue;
      consider(geometry::squared_distance_to_segment(up, path[i], path[i + 1]));
    }
  }
  return best ? *best : Rational(1);
}

// Parameters along segment [a, b] of ω where other segments touch it.
std::vector<Rational> contact_parameters(const Drawing& d, EdgeId omega, std::size_t seg) {
  const Polyline& w = d.edge_path[omega];
  const Point& a = w[seg];
  const Point& b = w[seg + 1];
  std::vector<Rational> params;
  for (EdgeId e = 0; e < d.edge_path.size(); ++e) {
    const Polyline& path = d.edge_path[e];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (e == omega && (i == seg || i + 1 == seg || i == seg + 1)) continue;
      auto contact = geometry::classify_contact(a, b, path[i], path[i + 1]);
      if (contact.kind != Contact::none && contact.point) params.push_back(geometry::segment_parameter(*contact.point, a, b));
    }
  }
  return params;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

Drawing apply_finger_move(const Drawing& d, EdgeId omega, VertexId u, const EdgePairSet& pairs) {
  const Graph& g = d.graph;
  if (omega >= g.edge_count() || u >= g.vertex_count()) throw std::invalid_argument("finger move: id out of range");
  if (g.edge(omega).contains(u)) throw std::invalid_argument("finger move: vertex lies on the moved edge");

  const CrossingVector before = crossing_vector(d, pairs);
  std::vector<std::uint8_t> expected = before.mod2;
  for (EdgeId beta : g.incident(u)) {
    auto idx = pairs.index_of(omega, beta);
    if (idx >= 0) expected[static_cast<std::size_t>(idx)] ^= 1U;
  }

  const Point& up = d.vertex_pos[u];
  const Rational clearance = clearance_squared(d, u);
  const Polyline& w = d.edge_path[omega];
  static const std::array<Rational, 9> candidates = {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                                     Rational(1, 4), Rational(3, 4), Rational(2, 5),
                                                     Rational(3, 5), Rational(1, 5), Rational(4, 5)};

  for (std::size_t seg = 0; seg + 1 < w.size(); ++seg) {
    const Point e = w[seg + 1] - w[seg];
    const std::vector<Rational> contacts = contact_parameters(d, omega, seg);
    for (const Rational& t : candidates) {
      const Point m = w[seg] + t * e;
      const Point dir = m - up;
      const int side = sgn(cross(dir, e));
      if (side == 0) continue;  // u is on the line of this segment

      Rational gap = t < 1 - t ? t : Rational(1 - t);
      bool on_crossing = false;
      for (const Rational& c : contacts) {
        Rational dist = abs_value(c - t);
        if (dist == 0) on_crossing = true;
        if (dist < gap) gap = dist;
      }
      if (on_crossing) continue;

      // Square half-size h (in units of |dir|) keeps the whole square within a
      // third of the clearance: 18 h^2 |dir|^2 < clearance.
      const Rational dir2 = dot(dir, dir);
      Rational h(1, 4);
      while (18 * h * h * dir2 >= clearance) h /= 2;

      const Point perp(-dir.y, dir.x);
      for (int shrink = 0; shrink < 12; ++shrink, h /= 2) {
        const Rational delta = gap / Rational(4 << shrink);
        const Point m_a = w[seg] + Rational(t - delta) * e;
        const Point m_b = w[seg] + Rational(t + delta) * e;
        const Point q_right = up + h * dir - Rational(h / 2) * perp;
        const Point q_left = up + h * dir + Rational(h / 2) * perp;
        const Point c1 = up + h * dir - h * perp;
        const Point c2 = up - h * dir - h * perp;
        const Point c3 = up - h * dir + h * perp;
        const Point c4 = up + h * dir + h * perp;

        // m_a lies right of the ray u -> m exactly when side > 0.
        std::vector<Point> finger = side > 0 ? std::vector<Point>{m_a, q_right, c1, c2, c3, c4, q_left, m_b}
                                             : std::vector<Point>{m_a, q_left, c4, c3, c2, c1, q_right, m_b};

        bool swallows_vertex = false;
        for (VertexId v = 0; v < g.vertex_count() && !swallows_vertex; ++v) {
          if (v == u) continue;
          const Point& p = d.vertex_pos[v];
          swallows_vertex = geometry::strictly_inside_polygon(p, finger) || geometry::on_polygon_boundary(p, finger);
        }
        if (swallows_vertex) continue;

        Drawing moved = d;
        Polyline& path = moved.edge_path[omega];
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(seg + 1), finger.begin(), finger.end());
        if (!validate_generic(moved).empty()) continue;
        if (crossing_vector(moved, pairs).mod2 != expected) continue;
        return moved;
      }
    }
  }
  throw FingerMoveError("finger move of edge " + std::to_string(omega) + " around vertex " + std::to_string(u) +
                        " failed; re-layout the drawing");
}

Drawing subdivide_drawing(const Drawing& d, const SubdivisionMap& sub) {
  require_generic(d);
  if (!(d.graph == sub.base)) throw std::invalid_argument("subdivision map does not match the drawing");
  const std::size_t n = d.graph.vertex_count();
  const std::size_t m = d.graph.edge_count();
  static const std::array<Rational, 9> candidates = {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                                     Rational(1, 4), Rational(3, 4), Rational(2, 5),
                                                     Rational(3, 5), Rational(1, 5), Rational(4, 5)};

  Drawing out;
  out.graph = sub.star;
  out.vertex_pos.resize(n + m);
  out.edge_path.resize(sub.star.edge_count());
  std::copy(d.vertex_pos.begin(), d.vertex_pos.end(), out.vertex_pos.begin());

  for (EdgeId alpha = 0; alpha < m; ++alpha) {
    const Polyline& w = d.edge_path[alpha];
    std::optional<std::pair<std::size_t, Point>> spot;
    for (std::size_t seg = 0; seg + 1 < w.size() && !spot; ++seg) {
      // A point on a crossing-free part of the segment: no other segment meets it there.
      auto contacts = contact_parameters(d, alpha, seg);
      for (const Rational& t : candidates) {
        if (std::find(contacts.begin(), contacts.end(), t) != contacts.end()) continue;
        spot.emplace(seg, w[seg] + t * (w[seg + 1] - w[seg]));
        break;
      }
      // Fall back to the midpoint of the widest crossing-free interval.
      if (!spot) {
        contacts.push_back(0);
        contacts.push_back(1);
        std::sort(contacts.begin(), contacts.end());
        std::size_t best = 0;
        for (std::size_t i = 1; i + 1 < contacts.size(); ++i)
          if (contacts[i + 1] - contacts[i] > contacts[best + 1] - contacts[best]) best = i;
        Rational t = (contacts[best] + contacts[best + 1]) / 2;
        spot.emplace(seg, w[seg] + t * (w[seg + 1] - w[seg]));
      }
    }
    const auto& [seg, point] = *spot;
    out.vertex_pos[sub.edge_node(alpha)] = point;

    Polyline low_half(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(seg + 1));
    low_half.push_back(point);
    Polyline high_half(w.rbegin(), w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - seg - 1));
    high_half.push_back(point);
    out.edge_path[sub.halves[alpha].first] = std::move(low_half);
    out.edge_path[sub.halves[alpha].second] = std::move(high_half);
  }
  return out;
}

}  // namespace stringob

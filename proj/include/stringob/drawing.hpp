#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "stringob/geometry.hpp"
#include "stringob/graph.hpp"

namespace stringob {

using geometry::Polyline;

/// Piecewise-linear drawing: a point per vertex and a polyline per edge,
/// traversed from the low endpoint to the high endpoint.
struct Drawing {
  Graph graph;
  std::vector<Point> vertex_pos;
  std::vector<Polyline> edge_path;
};

struct Violation {
  std::string kind;
  std::string detail;
};

/// Thrown by operations that require a drawing in general position.
class NonGenericDrawing : public std::invalid_argument {
 public:
  explicit NonGenericDrawing(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class FingerMoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-pair crossing data of a drawing over an indexed pair set.
struct CrossingVector {
  std::vector<std::uint8_t> mod2;
  std::vector<std::int64_t> signed_count;

  std::size_t size() const { return mod2.size(); }
  std::size_t odd_count() const;
};

/// Straight-line drawing from vertex positions.
Drawing straight_line_drawing(const Graph& g, std::vector<Point> positions);

/// Vertex i at (i, i^2).
Drawing layout_moment_curve(const Graph& g);

/// Vertices at rational points of a circle in the given cyclic order.
/// Throws std::invalid_argument if `order` is not a permutation.
Drawing layout_convex_order(const Graph& g, const std::vector<VertexId>& order);

/// Seeded random integer positions, re-sampled until the drawing is generic.
Drawing layout_random(const Graph& g, std::uint64_t seed);

/// Empty iff the drawing is piecewise linear and in general position.
std::vector<Violation> validate_generic(const Drawing& d);

/// Throws NonGenericDrawing when validation fails.
void require_generic(const Drawing& d);

/// Number of proper crossings between two polylines.
std::size_t count_crossings(const Polyline& a, const Polyline& b);

/// Sum of crossing signs, sign = orientation of (direction of a, direction of b).
std::int64_t signed_crossings(const Polyline& a, const Polyline& b);

/// Crossing parities and signed counts over `pairs`; `d.graph` must equal
/// `pairs.graph()`. Throws NonGenericDrawing.
CrossingVector crossing_vector(const Drawing& d, const EdgePairSet& pairs);

/// Reroutes `omega` around `u` along a thin finger and returns the new drawing.
/// The result is generic and its parity vector over `pairs` changes by the
/// finger-move vector of (omega, u).
Drawing apply_finger_move(const Drawing& d, EdgeId omega, VertexId u, const EdgePairSet& pairs);

/// Drawing of G* with each edge node placed on a crossing-free point of its edge.
Drawing subdivide_drawing(const Drawing& d, const SubdivisionMap& sub);

struct SvgOptions {
  double size = 640.0;
  bool labels = true;
  /// When set, crossings of pairs in this set with odd parity are marked.
  const EdgePairSet* highlight = nullptr;
};

std::string export_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace stringob

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stringob/drawing.hpp"
#include "stringob/graph.hpp"

namespace stringob {

/// One polyline per vertex; a single point is a degenerate curve.
struct StringRepresentation {
  Graph graph;
  std::vector<Polyline> curves;
};

struct StringViolation {
  VertexId v;
  VertexId w;
  /// True: vw is an edge but the curves are disjoint. False: vw is not an
  /// edge but the curves meet.
  bool missing_intersection;

  std::string describe() const;
};

struct StringReport {
  std::vector<StringViolation> violations;
  std::string malformed;  // non-empty if the curves cannot be checked at all
  bool valid() const { return violations.empty() && malformed.empty(); }
};

StringReport verify_string_representation(const StringRepresentation& rep);

class InvalidRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Drawing of G* whose half-edge (v, alpha) runs inside curve v from a point
/// g(v) on it to g(alpha), the least common point of the two curves of alpha.
/// The result is usually not generic. Throws InvalidRepresentation.
Drawing drawing_from_strings(const StringRepresentation& rep);

struct SdViolation {
  EdgeId a;  // G*-edges, a < b
  EdgeId b;
};

struct SdReport {
  std::vector<SdViolation> violations;
  bool passes() const { return violations.empty(); }
};

/// Set-level test that the images of every P_sd pair are disjoint.
/// Genericity is not required.
SdReport verify_sd_disjointness(const SubdivisionMap& sub, const Drawing& d);

/// Curve of v traces g(v) and then each half-edge (v, alpha) out and back.
/// Throws InvalidRepresentation if the drawing fails verify_sd_disjointness.
StringRepresentation strings_from_drawing(const SubdivisionMap& sub, const Drawing& d);

}  // namespace stringob

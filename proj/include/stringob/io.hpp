#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "stringob/drawing.hpp"
#include "stringob/graph.hpp"
#include "stringob/obstruction.hpp"
#include "stringob/strings.hpp"

namespace stringob::io {

using nlohmann::json;

/// Unreadable or malformed input.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

json rational_to_json(const Rational& q);
/// Accepts "num/den", "num" or a JSON integer.
Rational rational_from_json(const json& j);
json point_to_json(const Point& p);
Point point_from_json(const json& j);
json polyline_to_json(const Polyline& path);
Polyline polyline_from_json(const json& j);

/// {"n": int, "edges": [[u, v], ...]} with u < v, sorted.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"vertices": [[x, y], ...], "edges": [[[x, y], ...], ...]} plus the graph
/// itself under "graph" so that a file is self-contained.
json drawing_to_json(const Drawing& d);
/// Uses `graph` when given, the embedded "graph" object otherwise.
Drawing drawing_from_json(const json& j, const Graph* graph = nullptr);

/// {"n": int, "curves": [[[x, y], ...], ...]}; the graph's edges are written
/// under "edges" as well.
json strings_to_json(const StringRepresentation& rep);
/// Uses `graph` when given, the embedded "edges" otherwise.
StringRepresentation strings_from_json(const json& j, const Graph* graph = nullptr);

/// Report keys: kind, mode, vanishes, rank, witness, certificate, pair_count,
/// row_count, millis. Integer-mode witness entries carry the coefficient as a
/// third element; the integer certificate lists [pairIndex, "num/den"].
json report_to_json(const ObstructionReport& report);

}  // namespace stringob::io

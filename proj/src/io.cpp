#include "stringob/io.hpp"

#include <fstream>
#include <sstream>

namespace stringob::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

const json& require_array(const json& j, const char* what) {
  if (!j.is_array()) throw IoError(std::string(what) + " must be an array");
  return j;
}

std::size_t as_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw IoError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

json edges_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

Graph graph_from_parts(const json& n_value, const json& edge_list) {
  std::size_t n = as_count(n_value, "\"n\"");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const json& e : require_array(edge_list, "\"edges\"")) {
    if (!e.is_array() || e.size() != 2) throw IoError("every edge must be a pair [u, v]");
    edges.emplace_back(static_cast<VertexId>(as_count(e[0], "edge endpoint")),
                       static_cast<VertexId>(as_count(e[1], "edge endpoint")));
  }
  try {
    return make_graph(n, std::move(edges));
  } catch (const GraphError& err) {
    throw IoError(err.what());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw IoError(path.string() + ": " + err.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw IoError("rational must be a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& err) {
    throw IoError(std::string("bad rational: ") + err.what());
  }
}

json point_to_json(const Point& p) { return {rational_to_json(p.x), rational_to_json(p.y)}; }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw IoError("point must be [x, y]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json polyline_to_json(const Polyline& path) {
  json out = json::array();
  for (const Point& p : path) out.push_back(point_to_json(p));
  return out;
}

Polyline polyline_from_json(const json& j) {
  Polyline path;
  for (const json& p : require_array(j, "polyline")) path.push_back(point_from_json(p));
  return path;
}

json graph_to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", edges_to_json(g)}}; }

Graph graph_from_json(const json& j) { return graph_from_parts(require(j, "n"), require(j, "edges")); }

json drawing_to_json(const Drawing& d) {
  json vertices = json::array();
  for (const Point& p : d.vertex_pos) vertices.push_back(point_to_json(p));
  json edges = json::array();
  for (const Polyline& path : d.edge_path) edges.push_back(polyline_to_json(path));
  return {{"graph", graph_to_json(d.graph)}, {"vertices", vertices}, {"edges", edges}};
}

Drawing drawing_from_json(const json& j, const Graph* graph) {
  Drawing d;
  d.graph = graph != nullptr ? *graph : graph_from_json(require(j, "graph"));
  for (const json& p : require_array(require(j, "vertices"), "\"vertices\"")) d.vertex_pos.push_back(point_from_json(p));
  for (const json& path : require_array(require(j, "edges"), "\"edges\"")) d.edge_path.push_back(polyline_from_json(path));
  if (d.vertex_pos.size() != d.graph.vertex_count()) throw IoError("vertex count does not match the graph");
  if (d.edge_path.size() != d.graph.edge_count()) throw IoError("edge count does not match the graph");
  return d;
}

json strings_to_json(const StringRepresentation& rep) {
  json curves = json::array();
  for (const Polyline& c : rep.curves) curves.push_back(polyline_to_json(c));
  return {{"n", rep.graph.vertex_count()}, {"edges", edges_to_json(rep.graph)}, {"curves", curves}};
}

StringRepresentation strings_from_json(const json& j, const Graph* graph) {
  StringRepresentation rep;
  rep.graph = graph != nullptr ? *graph : graph_from_parts(require(j, "n"), require(j, "edges"));
  if (as_count(require(j, "n"), "\"n\"") != rep.graph.vertex_count()) throw IoError("\"n\" does not match the graph");
  for (const json& c : require_array(require(j, "curves"), "\"curves\"")) rep.curves.push_back(polyline_from_json(c));
  if (rep.curves.size() != rep.graph.vertex_count()) throw IoError("one curve per vertex required");
  return rep;
}

json report_to_json(const ObstructionReport& report) {
  json out;
  out["kind"] = to_string(report.kind);
  out["mode"] = to_string(report.mode);
  out["vanishes"] = report.vanishes;
  out["rank"] = report.rank;
  if (report.witness) {
    json witness = json::array();
    for (const WitnessTerm& t : *report.witness) {
      json term = {t.move.edge, t.move.vertex};
      if (report.mode == Mode::integer) term.push_back(t.coefficient.get_str());
      witness.push_back(term);
    }
    out["witness"] = witness;
  } else {
    out["witness"] = nullptr;
  }
  if (report.certificate) {
    out["certificate"] = *report.certificate;
  } else if (report.integer_certificate) {
    json cert = json::array();
    for (const auto& [col, q] : *report.integer_certificate) cert.push_back({col, format_rational(q)});
    out["certificate"] = cert;
  } else {
    out["certificate"] = nullptr;
  }
  out["pair_count"] = report.pair_count;
  out["row_count"] = report.row_count;
  out["millis"] = report.millis;
  return out;
}

}  // namespace stringob::io

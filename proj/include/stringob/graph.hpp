#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace stringob {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;  // low endpoint
  VertexId v;  // high endpoint

  bool contains(VertexId w) const { return u == w || v == w; }
  bool disjoint_from(const Edge& o) const { return !contains(o.u) && !contains(o.v); }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Malformed input graph (loop, duplicate edge, endpoint out of range).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with a canonically sorted edge list.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  bool adjacent(VertexId a, VertexId b) const;
  /// Index of edge {a, b}, or -1.
  std::int64_t find_edge(VertexId a, VertexId b) const;
  /// Edge ids incident to v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_[v]; }
  std::size_t degree(VertexId v) const { return incident_[v].size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph make_graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::uint64_t> adjacency_;  // n x n bit matrix
  std::size_t adjacency_stride_ = 0;
};

/// Validates and canonicalizes; throws GraphError.
Graph make_graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges);

/// Barycentric subdivision G*: vertex ids 0..n-1 are the original vertices,
/// n + e is the node of original edge e. Every G*-edge joins v to n + e for v in e.
struct SubdivisionMap {
  struct Origin {
    bool is_edge;
    std::uint32_t id;  // original vertex or original edge id
  };
  struct EdgeOrigin {
    VertexId vertex;
    EdgeId edge;
  };

  Graph base;
  Graph star;
  std::vector<Origin> vertex_origin;    // per G*-vertex
  std::vector<EdgeOrigin> edge_origin;  // per G*-edge
  /// G*-edge id of (v, alpha) for both endpoints of each original edge,
  /// ordered as (low endpoint, high endpoint).
  std::vector<std::pair<EdgeId, EdgeId>> halves;

  VertexId edge_node(EdgeId alpha) const { return static_cast<VertexId>(base.vertex_count() + alpha); }
  EdgeId half(VertexId v, EdgeId alpha) const;
};

SubdivisionMap barycentric_subdivision(const Graph& g);

enum class PairKind { delta, s, sd };

const char* to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view name);

/// Canonically indexed set of unordered pairs {alpha, beta} (alpha < beta) of
/// disjoint edges of `graph()`. For kind sd the edges are G*-edges and the
/// subdivision map is bundled.
class EdgePairSet {
 public:
  using Pair = std::pair<EdgeId, EdgeId>;

  PairKind kind() const { return kind_; }
  /// The graph whose edges the pairs refer to (G* for kind sd).
  const Graph& graph() const { return *graph_; }
  /// The graph the set was constructed from.
  const Graph& base() const { return subdivision_ ? subdivision_->base : *graph_; }
  const SubdivisionMap* subdivision() const { return subdivision_.get(); }

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Position of {a, b} (either order), or -1.
  std::int64_t index_of(EdgeId a, EdgeId b) const;

  friend EdgePairSet pair_set(const Graph& g, PairKind kind);

 private:
  PairKind kind_ = PairKind::delta;
  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const SubdivisionMap> subdivision_;
  std::vector<Pair> pairs_;
  std::vector<std::int32_t> lookup_;  // m x m, -1 for absent
};

EdgePairSet pair_set(const Graph& g, PairKind kind);

/// Membership condition of the given kind for two edges of `g` (kind delta or s),
/// or two G*-edges of `sub` (kind sd).
bool pair_condition(const Graph& g, PairKind kind, const Edge& a, const Edge& b);
bool sd_pair_condition(const SubdivisionMap& sub, EdgeId a, EdgeId b);

}  // namespace stringob

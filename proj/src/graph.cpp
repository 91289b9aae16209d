#include "stringob/graph.hpp"

#include <algorithm>
#include <string>

namespace stringob {

Graph make_graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
    if (a >= n || b >= n)
      throw GraphError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} has an endpoint >= n = " + std::to_string(n));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");

  g.incident_.assign(n, {});
  g.adjacency_stride_ = (n + 63) / 64;
  g.adjacency_.assign(n * g.adjacency_stride_, 0);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.incident_[u].push_back(e);
    g.incident_[v].push_back(e);
    g.adjacency_[u * g.adjacency_stride_ + v / 64] |= std::uint64_t{1} << (v % 64);
    g.adjacency_[v * g.adjacency_stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  return g;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  return (adjacency_[a * adjacency_stride_ + b / 64] >> (b % 64)) & 1U;
}

std::int64_t Graph::find_edge(VertexId a, VertexId b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return it - edges_.begin();
}

EdgeId SubdivisionMap::half(VertexId v, EdgeId alpha) const {
  const Edge& e = base.edge(alpha);
  if (v == e.u) return halves[alpha].first;
  if (v == e.v) return halves[alpha].second;
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

SubdivisionMap barycentric_subdivision(const Graph& g) {
  SubdivisionMap sub;
  sub.base = g;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::pair<VertexId, VertexId>> star_edges;
  star_edges.reserve(2 * m);
  for (EdgeId e = 0; e < m; ++e) {
    auto node = static_cast<VertexId>(n + e);
    star_edges.emplace_back(g.edge(e).u, node);
    star_edges.emplace_back(g.edge(e).v, node);
  }
  sub.star = make_graph(n + m, std::move(star_edges));

  sub.vertex_origin.resize(n + m);
  for (std::uint32_t v = 0; v < n; ++v) sub.vertex_origin[v] = {false, v};
  for (std::uint32_t e = 0; e < m; ++e) sub.vertex_origin[n + e] = {true, e};

  sub.edge_origin.resize(2 * m);
  sub.halves.assign(m, {0, 0});
  for (EdgeId s = 0; s < sub.star.edge_count(); ++s) {
    const Edge& se = sub.star.edge(s);
    EdgeId alpha = se.v - static_cast<VertexId>(n);
    sub.edge_origin[s] = {se.u, alpha};
    if (se.u == g.edge(alpha).u)
      sub.halves[alpha].first = s;
    else
      sub.halves[alpha].second = s;
  }
  return sub;
}

const char* to_string(PairKind kind) {
  switch (kind) {
    case PairKind::delta: return "delta";
    case PairKind::s: return "s";
    case PairKind::sd: return "sd";
  }
  return "?";
}

PairKind parse_pair_kind(std::string_view name) {
  if (name == "delta") return PairKind::delta;
  if (name == "s") return PairKind::s;
  if (name == "sd") return PairKind::sd;
  throw std::invalid_argument("unknown pair kind: " + std::string(name));
}

bool pair_condition(const Graph& g, PairKind kind, const Edge& a, const Edge& b) {
  if (!a.disjoint_from(b)) return false;
  if (kind == PairKind::delta) return true;
  if (kind != PairKind::s) throw std::invalid_argument("pair_condition: use sd_pair_condition");
  for (VertexId x : {a.u, a.v})
    for (VertexId y : {b.u, b.v})
      if (g.adjacent(x, y)) return false;
  return true;
}

bool sd_pair_condition(const SubdivisionMap& sub, EdgeId a, EdgeId b) {
  auto [v, alpha] = sub.edge_origin[a];
  auto [w, beta] = sub.edge_origin[b];
  return v != w && !sub.base.adjacent(v, w);
}

std::int64_t EdgePairSet::index_of(EdgeId a, EdgeId b) const {
  const std::size_t m = graph_->edge_count();
  if (a >= m || b >= m) return -1;
  return lookup_[static_cast<std::size_t>(a) * m + b];
}

EdgePairSet pair_set(const Graph& g, PairKind kind) {
  EdgePairSet set;
  set.kind_ = kind;
  if (kind == PairKind::sd) {
    auto sub = std::make_shared<SubdivisionMap>(barycentric_subdivision(g));
    set.graph_ = std::shared_ptr<const Graph>(sub, &sub->star);
    set.subdivision_ = sub;
  } else {
    set.graph_ = std::make_shared<Graph>(g);
  }
  const Graph& h = *set.graph_;
  const std::size_t m = h.edge_count();
  set.lookup_.assign(m * m, -1);
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = a + 1; b < m; ++b) {
      bool member = kind == PairKind::sd
                        ? sd_pair_condition(*set.subdivision_, a, b) && h.edge(a).disjoint_from(h.edge(b))
                        : pair_condition(h, kind, h.edge(a), h.edge(b));
      if (!member) continue;
      auto idx = static_cast<std::int32_t>(set.pairs_.size());
      set.pairs_.emplace_back(a, b);
      set.lookup_[a * m + b] = idx;
      set.lookup_[b * m + a] = idx;
    }
  }
  return set;
}

}  // namespace stringob

#include "stringob/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stringob/embedded_data.hpp"
#include "stringob/geometry.hpp"
#include "stringob/io.hpp"

namespace stringob {
namespace generators {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

Graph heawood() { return io::graph_from_json(nlohmann::json::parse(embedded::heawood)); }
Graph gp() { return io::graph_from_json(nlohmann::json::parse(embedded::gp)); }
Graph c_cbar_transcribed() { return io::graph_from_json(nlohmann::json::parse(embedded::c_cbar_6)); }

Graph c_cbar(std::size_t n) {
  if (n < 5) throw std::invalid_argument("c_cbar requires n >= 5");
  EdgeList edges;
  auto V = [](std::size_t x) { return static_cast<VertexId>(x); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // cycle neighbours
      edges.emplace_back(V(i), V(j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t outer = n + i;
    std::size_t next = n + (i + 1) % n;
    std::size_t mid = 2 * n + i;
    edges.emplace_back(V(outer), V(mid));
    edges.emplace_back(V(mid), V(next));
    std::size_t spoke_mid = 3 * n + i;
    edges.emplace_back(V(i), V(spoke_mid));
    edges.emplace_back(V(spoke_mid), V(outer));
  }
  return make_graph(4 * n, std::move(edges));
}

Graph complete(std::size_t n) {
  EdgeList edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  EdgeList edges;
  for (VertexId i = 0; i < m; ++i)
    for (VertexId j = 0; j < n; ++j) edges.emplace_back(i, static_cast<VertexId>(m + j));
  return make_graph(m + n, std::move(edges));
}

Graph path(std::size_t n) {
  EdgeList edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  EdgeList edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return make_graph(n, std::move(edges));
}

Graph grid(std::size_t rows, std::size_t cols) {
  EdgeList edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return make_graph(rows * cols, std::move(edges));
}

Graph wheel(std::size_t n) {
  if (n < 3) throw std::invalid_argument("wheel requires n >= 3");
  EdgeList edges;
  for (VertexId i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, static_cast<VertexId>(i % n + 1));
  }
  return make_graph(n + 1, std::move(edges));
}

Graph empty(std::size_t n) { return make_graph(n, {}); }

Graph subdivide(const Graph& g, std::size_t k) {
  EdgeList edges;
  std::size_t next = g.vertex_count();
  for (const Edge& e : g.edges()) {
    VertexId prev = e.u;
    for (std::size_t i = 0; i < k; ++i) {
      auto w = static_cast<VertexId>(next++);
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, e.v);
  }
  return make_graph(next, std::move(edges));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gnp(std::size_t n, double p, std::mt19937_64& rng) {
  EdgeList edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (unit_uniform(rng) < p) edges.emplace_back(i, j);
  return make_graph(n, std::move(edges));
}

Graph random_planar(std::size_t n, std::mt19937_64& rng, std::size_t edge_attempts) {
  // Integer points with no three collinear, so straight segments meet only at
  // shared endpoints or proper crossings.
  std::vector<Point> pts;
  while (pts.size() < n) {
    Point p(static_cast<long>(rng() % 1000), static_cast<long>(rng() % 1000));
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      if (pts[i] == p) ok = false;
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
        if (geometry::orientation(pts[i], pts[j], p) == 0) ok = false;
    }
    if (ok) pts.push_back(std::move(p));
  }
  std::vector<std::pair<VertexId, VertexId>> candidates;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
  for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[rng() % i]);
  if (edge_attempts != 0 && edge_attempts < candidates.size()) candidates.resize(edge_attempts);

  EdgeList edges;
  for (auto [a, b] : candidates) {
    bool crosses = false;
    for (auto [c, d] : edges) {
      if (a == c || a == d || b == c || b == d) continue;
      if (geometry::segments_intersect(pts[a], pts[b], pts[c], pts[d])) {
        crosses = true;
        break;
      }
    }
    if (!crosses) edges.emplace_back(a, b);
  }
  return make_graph(n, std::move(edges));
}

}  // namespace generators

namespace {

std::size_t need(std::span<const long> params, std::size_t i, std::string_view family) {
  if (i >= params.size() || params[i] < 0)
    throw std::invalid_argument("family " + std::string(family) + " needs a non-negative parameter #" +
                                std::to_string(i + 1));
  return static_cast<std::size_t>(params[i]);
}

}  // namespace

Graph generate(std::string_view family, std::span<const long> params) {
  using namespace generators;
  if (family == "heawood") return heawood();
  if (family == "gp") return gp();
  if (family == "c_cbar") return c_cbar(need(params, 0, family));
  if (family == "complete") return complete(need(params, 0, family));
  if (family == "complete_bipartite")
    return complete_bipartite(need(params, 0, family), need(params, 1, family));
  if (family == "path") return path(need(params, 0, family));
  if (family == "cycle") return cycle(need(params, 0, family));
  if (family == "grid") return grid(need(params, 0, family), need(params, 1, family));
  if (family == "wheel") return wheel(need(params, 0, family));
  if (family == "empty") return empty(need(params, 0, family));
  if (family == "gnp") {
    std::mt19937_64 rng(params.size() > 2 ? static_cast<std::uint64_t>(params[2]) : 1);
    return gnp(need(params, 0, family), static_cast<double>(need(params, 1, family)) / 1000.0, rng);
  }
  if (family == "random_planar") {
    std::mt19937_64 rng(params.size() > 1 ? static_cast<std::uint64_t>(params[1]) : 1);
    return random_planar(need(params, 0, family), rng);
  }
  throw std::invalid_argument("unknown graph family: " + std::string(family));
}

Graph generate_from_tokens(std::span<const std::string> tokens) {
  if (tokens.empty()) throw std::invalid_argument("missing graph family");
  if (tokens[0] == "subdivide") {
    if (tokens.size() < 3) throw std::invalid_argument("usage: subdivide <k> <family> [params...]");
    long k = std::stol(tokens[1]);
    if (k < 0) throw std::invalid_argument("subdivide needs k >= 0");
    return generators::subdivide(generate_from_tokens(tokens.subspan(2)), static_cast<std::size_t>(k));
  }
  if (tokens[0] == "gnp") {
    if (tokens.size() < 3) throw std::invalid_argument("usage: gnp <n> <p> [seed]");
    long n = std::stol(tokens[1]);
    double p = std::stod(tokens[2]);
    if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(tokens.size() > 3 ? std::stoull(tokens[3]) : 1);
    return generators::gnp(static_cast<std::size_t>(n), p, rng);
  }
  std::vector<long> params;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    std::size_t used = 0;
    long value = std::stol(tokens[i], &used);
    if (used != tokens[i].size()) throw std::invalid_argument("bad parameter: " + tokens[i]);
    params.push_back(value);
  }
  return generate(tokens[0], params);
}

}  // namespace stringob

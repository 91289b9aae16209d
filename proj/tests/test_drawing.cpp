#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stringob/drawing.hpp"
#include "stringob/figures.hpp"
#include "stringob/generators.hpp"

using namespace stringob;

namespace {

// Proper crossings of a straight-line integer drawing, pair by pair.
std::vector<std::uint8_t> oracle_parity(const Drawing& d, const EdgePairSet& pairs) {
  auto ip = [](const Point& p) { return oracle::IPoint{p.x.get_num().get_si(), p.y.get_num().get_si()}; };
  std::vector<std::uint8_t> out;
  for (const auto& [a, b] : pairs.pairs()) {
    const Edge& ea = d.graph.edge(a);
    const Edge& eb = d.graph.edge(b);
    out.push_back(oracle::proper_cross(ip(d.vertex_pos[ea.u]), ip(d.vertex_pos[ea.v]), ip(d.vertex_pos[eb.u]),
                                       ip(d.vertex_pos[eb.v])));
  }
  return out;
}

std::size_t total_crossings(const Drawing& d, const EdgePairSet& pairs) {
  std::size_t total = 0;
  for (const auto& [a, b] : pairs.pairs()) total += count_crossings(d.edge_path[a], d.edge_path[b]);
  return total;
}

}  // namespace

TEST_CASE("complete graphs on the moment curve have C(n,4) crossings") {
  for (std::size_t n = 4; n <= 9; ++n) {
    Graph g = generators::complete(n);
    Drawing d = layout_moment_curve(g);
    CHECK(validate_generic(d).empty());
    EdgePairSet delta = pair_set(g, PairKind::delta);
    CHECK(total_crossings(d, delta) == oracle::binomial(n, 4));
    CHECK(crossing_vector(d, delta).mod2 == oracle_parity(d, delta));
  }
}

TEST_CASE("crossing vectors match the oracle on random integer layouts") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = generators::gnp(10, 0.4, rng);
    Drawing d = layout_random(g, 100 + trial);
    EdgePairSet delta = pair_set(g, PairKind::delta);
    CHECK(crossing_vector(d, delta).mod2 == oracle_parity(d, delta));
  }
}

TEST_CASE("Heawood figure layout has exactly 7 odd P_s pairs") {
  Drawing d = figures::heawood_drawing();
  REQUIRE(d.graph == generators::heawood());
  EdgePairSet s = pair_set(d.graph, PairKind::s);
  CrossingVector cv = crossing_vector(d, s);
  CHECK(cv.odd_count() == 7);
  CHECK(total_crossings(d, s) == 7);
}

TEST_CASE("GP and C*C-bar figure layouts have no P_s crossings") {
  {
    Drawing d = figures::gp_drawing();
    REQUIRE(d.graph == generators::gp());
    CHECK(total_crossings(d, pair_set(d.graph, PairKind::s)) == 0);
  }
  for (std::size_t n = 5; n <= 10; ++n) {
    Drawing d = figures::c_cbar_drawing(n);
    REQUIRE(d.graph == generators::c_cbar(n));
    CHECK(validate_generic(d).empty());
    CHECK(total_crossings(d, pair_set(d.graph, PairKind::s)) == 0);
  }
}

TEST_CASE("general-position violations are reported") {
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  auto kinds = [](const Drawing& d) {
    std::vector<std::string> out;
    for (const Violation& v : validate_generic(d)) out.push_back(v.kind);
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const std::string& k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };

  Drawing overlap = straight_line_drawing(g, {Point(0, 0), Point(4, 0), Point(2, 0), Point(6, 0)});
  CHECK(has(kinds(overlap), "non-transversal intersection"));

  Drawing through = straight_line_drawing(g, {Point(0, 0), Point(4, 0), Point(2, 0), Point(2, 5)});
  CHECK(has(kinds(through), "vertex on segment interior"));

  Drawing same = straight_line_drawing(g, {Point(0, 0), Point(4, 0), Point(0, 0), Point(2, 5)});
  CHECK(has(kinds(same), "coincident points"));

  Drawing bad_end = straight_line_drawing(g, {Point(0, 0), Point(4, 0), Point(1, 1), Point(2, 5)});
  bad_end.edge_path[0].back() = Point(5, 5);
  CHECK(has(kinds(bad_end), "endpoint mismatch"));

  Drawing zero = straight_line_drawing(g, {Point(0, 0), Point(4, 0), Point(1, 1), Point(2, 5)});
  zero.edge_path[1].insert(zero.edge_path[1].begin() + 1, Point(1, 1));
  CHECK(has(kinds(zero), "zero-length segment"));

  Drawing fine = straight_line_drawing(g, {Point(0, 0), Point(4, 0), Point(2, -1), Point(2, 5)});
  CHECK(validate_generic(fine).empty());
  CHECK_THROWS_AS(crossing_vector(overlap, pair_set(g, PairKind::delta)), NonGenericDrawing);
}

TEST_CASE("the illustrated finger move toggles exactly the pairs of edge 12 with edges at vertex 4") {
  Drawing d = figures::finger_move_example_drawing();
  const Graph& g = d.graph;
  EdgePairSet delta = pair_set(g, PairKind::delta);
  const EdgeId e12 = static_cast<EdgeId>(g.find_edge(0, 1));
  const VertexId v4 = 3;
  Drawing moved = apply_finger_move(d, e12, v4, delta);
  CHECK(validate_generic(moved).empty());

  auto before = crossing_vector(d, delta).mod2;
  auto after = crossing_vector(moved, delta).mod2;
  std::set<std::pair<std::string, std::string>> toggled;
  auto label = [&](EdgeId e) { return std::to_string(g.edge(e).u + 1) + std::to_string(g.edge(e).v + 1); };
  for (std::size_t k = 0; k < delta.size(); ++k)
    if (before[k] != after[k]) toggled.insert({label(delta[k].first), label(delta[k].second)});
  std::set<std::pair<std::string, std::string>> expected{{"12", "34"}, {"12", "45"}, {"12", "46"}};
  CHECK(toggled == expected);
  // Only the moved edge changed.
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != e12) CHECK(moved.edge_path[e] == d.edge_path[e]);
}

TEST_CASE("random finger moves change parity by the finger-move vector") {
  std::mt19937_64 rng(21);
  int applied = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = generators::gnp(8, 0.45, rng);
    if (g.edge_count() == 0) continue;
    Drawing d = layout_random(g, trial);
    EdgePairSet delta = pair_set(g, PairKind::delta);
    for (int step = 0; step < 3; ++step) {
      EdgeId w = static_cast<EdgeId>(rng() % g.edge_count());
      VertexId u = static_cast<VertexId>(rng() % g.vertex_count());
      if (g.edge(w).contains(u)) continue;
      auto expected = crossing_vector(d, delta).mod2;
      for (EdgeId b : g.incident(u))
        if (auto k = delta.index_of(w, b); k >= 0) expected[static_cast<std::size_t>(k)] ^= 1U;
      d = apply_finger_move(d, w, u, delta);
      CHECK(crossing_vector(d, delta).mod2 == expected);
      ++applied;
    }
  }
  CHECK(applied > 40);
  Drawing d = layout_moment_curve(generators::path(3));
  CHECK_THROWS_AS(apply_finger_move(d, 0, 1, pair_set(d.graph, PairKind::delta)), std::invalid_argument);
}

TEST_CASE("subdividing a drawing preserves crossing totals of every disjoint pair") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = generators::gnp(8, 0.5, rng);
    SubdivisionMap sub = barycentric_subdivision(g);
    Drawing d = layout_random(g, trial);
    if (trial % 3 == 0 && g.edge_count() > 0) {
      // Bent edges too.
      for (EdgeId w = 0; w < g.edge_count(); ++w) {
        VertexId u = static_cast<VertexId>(rng() % g.vertex_count());
        if (!g.edge(w).contains(u)) d = apply_finger_move(d, w, u, pair_set(g, PairKind::delta));
      }
    }
    Drawing ds = subdivide_drawing(d, sub);
    CHECK(ds.graph == sub.star);
    CHECK(validate_generic(ds).empty());
    const EdgePairSet disjoint = pair_set(g, PairKind::delta);
    for (const auto& [a, b] : disjoint.pairs()) {
      std::size_t parts = 0;
      for (EdgeId x : {sub.halves[a].first, sub.halves[a].second})
        for (EdgeId y : {sub.halves[b].first, sub.halves[b].second})
          parts += count_crossings(ds.edge_path[x], ds.edge_path[y]);
      CHECK(parts == count_crossings(d.edge_path[a], d.edge_path[b]));
    }
  }
}

TEST_CASE("svg export marks the crossings of odd pairs") {
  Drawing d = figures::heawood_drawing();
  EdgePairSet s = pair_set(d.graph, PairKind::s);
  std::string svg = export_svg(d, {.highlight = &s});
  auto count = [&](const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++c;
    return c;
  };
  CHECK(count("class=\"edge\"") == 21);
  CHECK(count("class=\"vertex\"") == 14);
  CHECK(count("class=\"crossing\"") == 7);
  CHECK(svg == export_svg(d, {.highlight = &s}));
}

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stringob/graph.hpp"

namespace stringob {

/// Named graph families. Heawood, GP and C*C̄6 come from the shipped
/// transcription data; c_cbar(n) follows the same rule for every n >= 5:
/// complement of an n-cycle inside, an n-cycle outside, every outer cycle
/// edge and every spoke subdivided once.
namespace generators {

Graph heawood();
Graph gp();
/// Vertex ids: inner 0..n-1, outer n..2n-1, outer-cycle midpoints 2n..3n-1
/// (2n+i between outer i and i+1), spoke midpoints 3n..4n-1.
Graph c_cbar(std::size_t n);
Graph c_cbar_transcribed();  // the n = 6 data file
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph grid(std::size_t rows, std::size_t cols);
/// Hub 0 joined to the cycle 1..n.
Graph wheel(std::size_t n);
Graph empty(std::size_t n);
/// Replaces every edge by a path with k interior vertices (new ids after the old ones).
Graph subdivide(const Graph& g, std::size_t k);

/// Erdős–Rényi G(n, p) driven by the given engine.
Graph gnp(std::size_t n, double p, std::mt19937_64& rng);
/// Planar graph built by greedily adding non-crossing straight segments
/// between random points; `edge_attempts` candidate pairs are tried.
Graph random_planar(std::size_t n, std::mt19937_64& rng, std::size_t edge_attempts = 0);

/// Uniform double in [0, 1) from the raw engine output (platform independent).
double unit_uniform(std::mt19937_64& rng);

}  // namespace generators

/// Dispatch by family name; params are integers except gnp's p (given as a
/// probability in thousandths, e.g. 200 for 0.2). Throws std::invalid_argument.
Graph generate(std::string_view family, std::span<const long> params);

/// Parses CLI-style "family p1 p2 ..." tokens, including "subdivide k family ...".
Graph generate_from_tokens(std::span<const std::string> tokens);

}  // namespace stringob

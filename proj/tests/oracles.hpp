#pragma once

// Deliberately naive reference implementations. None of them use the
// library's solvers or geometry; they work from first principles on small
// inputs only.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline bool shares(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

inline bool has_edge(const EdgeList& edges, int a, int b) {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

/// Disjoint edge pairs (i < j as indices into `edges`).
inline std::vector<std::pair<int, int>> delta_pairs(const EdgeList& edges) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(edges.size()); ++j)
      if (!shares(edges[i], edges[j])) out.emplace_back(i, j);
  return out;
}

/// Disjoint pairs with no edge between an endpoint of one and an endpoint of the other.
inline std::vector<std::pair<int, int>> s_pairs(const EdgeList& edges) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : delta_pairs(edges)) {
    const auto& a = edges[i];
    const auto& b = edges[j];
    bool linked = false;
    for (int x : {a.first, a.second})
      for (int y : {b.first, b.second}) linked = linked || has_edge(edges, x, y);
    if (!linked) out.emplace_back(i, j);
  }
  return out;
}

/// Rank over GF(2) by textbook elimination on byte rows.
inline std::size_t rank_mod2(std::vector<std::vector<std::uint8_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

/// Is target a GF(2) sum of some subset of rows? Enumerates all 2^rows subsets.
inline bool in_span_mod2_bruteforce(const std::vector<std::vector<std::uint8_t>>& rows,
                                    const std::vector<std::uint8_t>& target) {
  const std::size_t r = rows.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<std::uint8_t> sum(target.size(), 0);
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1U)
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] ^= rows[i][k];
    if (sum == target) return true;
  }
  return false;
}

/// Integer combination with every coefficient in [-bound, bound], if one exists.
inline std::optional<std::vector<long>> in_lattice_box(const std::vector<std::vector<long>>& rows,
                                                       const std::vector<long>& target, long bound) {
  const std::size_t r = rows.size();
  std::vector<long> coeff(r, -bound);
  if (r == 0) {
    bool zero = std::all_of(target.begin(), target.end(), [](long v) { return v == 0; });
    return zero ? std::optional<std::vector<long>>(coeff) : std::nullopt;
  }
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < target.size() && ok; ++k) {
      long s = 0;
      for (std::size_t i = 0; i < r; ++i) s += coeff[i] * rows[i][k];
      ok = s == target[k];
    }
    if (ok) return coeff;
    std::size_t i = 0;
    while (i < r && coeff[i] == bound) coeff[i++] = -bound;
    if (i == r) return std::nullopt;
    ++coeff[i];
  }
}

/// Integer-coordinate straight segments: proper crossing test with 128-bit
/// orientation products.
struct IPoint {
  long long x, y;
};

inline int orient(IPoint a, IPoint b, IPoint c) {
  __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

inline bool proper_cross(IPoint a, IPoint b, IPoint c, IPoint d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

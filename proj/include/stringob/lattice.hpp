#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stringob/rational.hpp"

namespace stringob::lattice {

struct Entry {
  std::uint32_t col;
  Integer value;
};

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<Entry>;

/// Hermite normal form of the lattice spanned by integer rows: echelon rows
/// with positive pivots and every entry above a pivot reduced into [0, pivot).
/// Each basis row records its expression in terms of the input rows.
class HermiteBasis {
 public:
  HermiteBasis(const std::vector<SparseRow>& rows, std::size_t cols);

  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<SparseRow>& rows() const { return basis_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  /// Input-row coefficients producing basis row i.
  const SparseRow& transform(std::size_t i) const { return transforms_[i]; }

  struct Membership {
    bool member = false;
    /// Coefficient per input row (dense), present iff member.
    std::optional<std::vector<Integer>> witness;
    /// Rational functional y with y . row integral for every input row and
    /// y . target not integral; present iff not member.
    std::optional<std::vector<std::pair<std::uint32_t, Rational>>> certificate;
  };

  Membership solve(const std::vector<Integer>& target) const;

 private:
  std::size_t cols_;
  std::size_t input_rows_;
  std::vector<SparseRow> basis_;
  std::vector<SparseRow> transforms_;
  std::vector<std::uint32_t> pivots_;
};

/// a - k * b on sparse rows.
SparseRow subtract_multiple(const SparseRow& a, const Integer& k, const SparseRow& b);

/// Value of the dense functional y on a sparse row.
Rational apply(const std::vector<Rational>& y, const SparseRow& row);

}  // namespace stringob::lattice

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stringob/simd/bitops.hpp"

namespace stringob::gf2 {

using simd::Word;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) {
    Word mask = Word{1} << (i % 64);
    words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
  }
  void flip(std::size_t i) { words_[i / 64] ^= Word{1} << (i % 64); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  std::size_t count() const;
  bool any() const;
  bool dot(const BitVector& other) const;
  /// Indices of set bits, ascending.
  std::vector<std::size_t> ones() const;

  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

/// Row-major bit-packed matrix; every row starts on a word boundary.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  bool test(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] |= Word{1} << (c % 64); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Echelon basis of a GF(2) row space built one input row at a time. Each
/// stored row remembers which input rows (by tag) were summed into it, so a
/// vector in the span can be expressed in terms of the inputs.
///
/// A row is reduced by the stored row owning its lowest set column until that
/// column has no owner; the column then becomes the row's pivot. Inserting in
/// input order therefore prefers the lowest column, then the lowest row.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, std::size_t tags);

  /// Returns true if the row was independent of the basis (rank grew).
  bool insert(std::span<const Word> row, std::size_t tag);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_pivot(std::size_t col) const { return owner_[col] >= 0; }

  struct Reduction {
    /// Zero on every pivot column; zero overall iff the input is in the span.
    BitVector residual;
    /// Tags whose rows sum to input + residual.
    BitVector combination;
  };
  Reduction reduce(const BitVector& v) const;

  /// y with b . y = 0 for every stored row b, y[free_col] = 1 and y zero on
  /// every other non-pivot column.
  BitVector kernel_vector(std::size_t free_col) const;

 private:
  const Word* stored(std::size_t i) const { return rows_.data() + i * stride_; }

  std::size_t cols_;
  std::size_t tags_;
  std::size_t col_words_;
  std::size_t tag_words_;
  std::size_t stride_;
  std::vector<Word> rows_;
  std::vector<std::int64_t> owner_;  // column -> stored row, -1 if free
  std::vector<std::size_t> pivots_;  // pivot column of stored row i
  std::vector<Word> scratch_;
};

/// Outcome of a span-membership question.
struct SpanResult {
  bool member = false;
  /// Tags of input rows summing to the target (when member).
  std::vector<std::size_t> combination;
  /// Columns of a functional vanishing on every row but not on the target
  /// (when not a member).
  std::vector<std::size_t> certificate;
};

/// Answers "is target in the row span?" from a finished basis.
SpanResult span_membership(const EchelonBasis& basis, const BitVector& target);

/// Same for an explicit matrix; row r carries tag r.
SpanResult solve_span(const BitMatrix& rows, const BitVector& target);

}  // namespace stringob::gf2

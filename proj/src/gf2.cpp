#include "stringob/gf2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stringob::gf2 {

namespace {

// Next set bit at index >= from, or npos.
std::size_t next_set(const Word* words, std::size_t from, std::size_t word_count) {
  std::size_t w = from / 64;
  if (w >= word_count) return simd::npos;
  Word masked = words[w] & (~Word{0} << (from % 64));
  if (masked != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(masked));
  return simd::active().first_set(words, w + 1, word_count);
}

}  // namespace

std::size_t BitVector::count() const { return simd::active().popcount(words_.data(), words_.size()); }

bool BitVector::any() const { return simd::active().first_set(words_.data(), 0, words_.size()) != simd::npos; }

bool BitVector::dot(const BitVector& other) const {
  if (other.bits_ != bits_) throw std::invalid_argument("BitVector::dot size mismatch");
  return simd::active().dot(words_.data(), other.words_.data(), words_.size());
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = next_set(words_.data(), 0, words_.size()); i != simd::npos;
       i = next_set(words_.data(), i + 1, words_.size()))
    out.push_back(i);
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.bits_ != bits_) throw std::invalid_argument("BitVector xor size mismatch");
  simd::active().xor_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

EchelonBasis::EchelonBasis(std::size_t cols, std::size_t tags)
    : cols_(cols),
      tags_(tags),
      col_words_(words_for(cols)),
      tag_words_(words_for(tags)),
      stride_(col_words_ + tag_words_),
      owner_(cols, -1),
      scratch_(stride_, 0) {}

bool EchelonBasis::insert(std::span<const Word> row, std::size_t tag) {
  if (row.size() < col_words_ || (tags_ != 0 && tag >= tags_))
    throw std::invalid_argument("EchelonBasis::insert: bad row or tag");
  const auto& k = simd::active();
  std::copy(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(col_words_), scratch_.begin());
  std::fill(scratch_.begin() + static_cast<std::ptrdiff_t>(col_words_), scratch_.end(), 0);
  if (tags_ != 0) scratch_[col_words_ + tag / 64] |= Word{1} << (tag % 64);

  std::size_t from = 0;
  for (;;) {
    std::size_t c = k.first_set(scratch_.data(), from, col_words_);
    if (c == simd::npos) return false;
    std::int64_t owner = owner_[c];
    if (owner < 0) {
      owner_[c] = static_cast<std::int64_t>(pivots_.size());
      pivots_.push_back(c);
      rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
      return true;
    }
    from = c / 64;
    const Word* b = stored(static_cast<std::size_t>(owner));
    k.xor_into(scratch_.data() + from, b + from, col_words_ - from);
    if (tag_words_ != 0) k.xor_into(scratch_.data() + col_words_, b + col_words_, tag_words_);
  }
}

EchelonBasis::Reduction EchelonBasis::reduce(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("EchelonBasis::reduce size mismatch");
  const auto& k = simd::active();
  Reduction out{v, BitVector(tags_)};
  Word* r = out.residual.words().data();
  Word* comb = out.combination.words().data();
  std::size_t c = next_set(r, 0, col_words_);
  while (c != simd::npos) {
    std::int64_t owner = owner_[c];
    if (owner >= 0) {
      const Word* b = stored(static_cast<std::size_t>(owner));
      std::size_t from = c / 64;
      k.xor_into(r + from, b + from, col_words_ - from);
      if (tag_words_ != 0) k.xor_into(comb, b + col_words_, tag_words_);
      c = next_set(r, c, col_words_);
    } else {
      c = next_set(r, c + 1, col_words_);
    }
  }
  return out;
}

BitVector EchelonBasis::kernel_vector(std::size_t free_col) const {
  if (free_col >= cols_ || is_pivot(free_col)) throw std::invalid_argument("kernel_vector needs a free column");
  const auto& k = simd::active();
  BitVector y(cols_);
  y.set(free_col);
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
  for (std::size_t i : order) {
    if (k.dot(stored(i), y.words().data(), col_words_)) y.set(pivots_[i]);
  }
  return y;
}

SpanResult span_membership(const EchelonBasis& basis, const BitVector& target) {
  auto reduction = basis.reduce(target);
  SpanResult out;
  out.member = !reduction.residual.any();
  if (out.member)
    out.combination = reduction.combination.ones();
  else
    out.certificate = basis.kernel_vector(reduction.residual.ones().front()).ones();
  return out;
}

SpanResult solve_span(const BitMatrix& rows, const BitVector& target) {
  if (target.size() != rows.cols()) throw std::invalid_argument("solve_span size mismatch");
  EchelonBasis basis(rows.cols(), rows.rows());
  for (std::size_t r = 0; r < rows.rows(); ++r) basis.insert(rows.row(r), r);
  return span_membership(basis, target);
}

}  // namespace stringob::gf2

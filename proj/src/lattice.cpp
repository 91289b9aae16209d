#include "stringob/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringob::lattice {

SparseRow subtract_multiple(const SparseRow& a, const Integer& k, const SparseRow& b) {
  if (k == 0) return a;
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, Integer(-k * b[j].value)});
      ++j;
    } else {
      Integer v = a[i].value - k * b[j].value;
      if (v != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Rational apply(const std::vector<Rational>& y, const SparseRow& row) {
  Rational total = 0;
  for (const Entry& e : row) total += y[e.col] * e.value;
  return total;
}

namespace {

const Integer* entry_at(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::uint32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void negate(SparseRow& row) {
  for (Entry& e : row) e.value = -e.value;
}

}  // namespace

HermiteBasis::HermiteBasis(const std::vector<SparseRow>& rows, std::size_t cols)
    : cols_(cols), input_rows_(rows.size()) {
  struct Work {
    SparseRow row;
    SparseRow transform;
  };
  std::vector<Work> active;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    if (rows[i].back().col >= cols) throw std::invalid_argument("HermiteBasis: column out of range");
    active.push_back({rows[i], SparseRow{{static_cast<std::uint32_t>(i), Integer(1)}}});
  }

  for (std::uint32_t c = 0; c < cols && !active.empty(); ++c) {
    std::vector<std::size_t> at_c;
    for (std::size_t i = 0; i < active.size(); ++i)
      if (active[i].row.front().col == c) at_c.push_back(i);
    if (at_c.empty()) continue;

    // Euclid on the leading entries until a single row leads at column c.
    while (at_c.size() > 1) {
      std::size_t p = at_c.front();
      for (std::size_t i : at_c)
        if (abs(active[i].row.front().value) < abs(active[p].row.front().value)) p = i;
      const Integer lead = active[p].row.front().value;
      std::vector<std::size_t> still;
      for (std::size_t i : at_c) {
        if (i == p) {
          still.push_back(i);
          continue;
        }
        Integer k = trunc_div(active[i].row.front().value, lead);
        active[i].row = subtract_multiple(active[i].row, k, active[p].row);
        active[i].transform = subtract_multiple(active[i].transform, k, active[p].transform);
        if (!active[i].row.empty() && active[i].row.front().col == c) still.push_back(i);
      }
      at_c = std::move(still);
    }

    std::size_t p = at_c.front();
    Work pivot = std::move(active[p]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(p));
    std::erase_if(active, [](const Work& w) { return w.row.empty(); });
    if (pivot.row.front().value < 0) {
      negate(pivot.row);
      negate(pivot.transform);
    }
    const Integer& h = pivot.row.front().value;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Integer* above = entry_at(basis_[b], c);
      if (above == nullptr) continue;
      Integer k = floor_div(*above, h);
      if (k == 0) continue;
      basis_[b] = subtract_multiple(basis_[b], k, pivot.row);
      transforms_[b] = subtract_multiple(transforms_[b], k, pivot.transform);
    }
    basis_.push_back(std::move(pivot.row));
    transforms_.push_back(std::move(pivot.transform));
    pivots_.push_back(c);
  }
}

HermiteBasis::Membership HermiteBasis::solve(const std::vector<Integer>& target) const {
  if (target.size() != cols_) throw std::invalid_argument("HermiteBasis::solve size mismatch");
  std::vector<Rational> residual(target.begin(), target.end());
  std::vector<Rational> coeff(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const SparseRow& row = basis_[i];
    coeff[i] = residual[pivots_[i]] / Rational(row.front().value);
    if (coeff[i] == 0) continue;
    for (const Entry& e : row) residual[e.col] -= coeff[i] * e.value;
  }

  Membership out;
  auto free_col = std::find_if(residual.begin(), residual.end(), [](const Rational& q) { return q != 0; });
  auto fractional = std::find_if(coeff.begin(), coeff.end(), [](const Rational& q) { return q.get_den() != 1; });
  out.member = free_col == residual.end() && fractional == coeff.end();

  if (out.member) {
    std::vector<Integer> x(input_rows_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (coeff[i] == 0) continue;
      Integer k = coeff[i].get_num();
      for (const Entry& e : transforms_[i]) x[e.col] += k * e.value;
    }
    out.witness = std::move(x);
    return out;
  }

  // Back-substitute y against the basis rows in decreasing pivot order.
  // Off the rational span: y kills every basis row, y[free] = 1.
  // In the span but off the lattice: y is dual to basis row `dual`.
  std::vector<Rational> y(cols_, 0);
  std::optional<std::size_t> dual;
  if (free_col != residual.end()) {
    y[static_cast<std::size_t>(free_col - residual.begin())] = 1;
  } else {
    dual = static_cast<std::size_t>(fractional - coeff.begin());
  }
  for (std::size_t i = basis_.size(); i-- > 0;) {
    const SparseRow& row = basis_[i];
    Rational rest = 0;
    for (std::size_t j = 1; j < row.size(); ++j) rest += y[row[j].col] * row[j].value;
    Rational want = (dual && *dual == i) ? Rational(1) : Rational(0);
    y[pivots_[i]] = (want - rest) / Rational(row.front().value);
  }
  if (!dual) {
    Rational value = 0;
    for (std::size_t c = 0; c < cols_; ++c) value += y[c] * target[c];
    // Scale so that y . target = 1/2.
    Rational scale = Rational(1, 2) / value;
    for (Rational& q : y) q *= scale;
  }
  std::vector<std::pair<std::uint32_t, Rational>> cert;
  for (std::uint32_t c = 0; c < cols_; ++c)
    if (y[c] != 0) cert.emplace_back(c, y[c]);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace stringob::lattice

#include "stringob/obstruction.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace stringob {

FingerMoveSystem::FingerMoveSystem(std::shared_ptr<const EdgePairSet> pairs) : pairs_(std::move(pairs)) {
  const Graph& h = pairs_->graph();
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();
  row_index_.assign(n * m, -1);
  for (EdgeId omega = 0; omega < m; ++omega) {
    for (VertexId u = 0; u < n; ++u) {
      if (h.edge(omega).contains(u)) continue;
      std::vector<SignedEntry> row;
      for (EdgeId beta : h.incident(u)) {
        auto idx = pairs_->index_of(omega, beta);
        if (idx < 0) continue;
        int order = omega < beta ? 1 : -1;
        int end = h.edge(beta).v == u ? 1 : -1;
        row.push_back({static_cast<std::uint32_t>(idx), static_cast<std::int8_t>(order * end)});
      }
      std::sort(row.begin(), row.end(), [](const SignedEntry& a, const SignedEntry& b) { return a.col < b.col; });
      row_index_[static_cast<std::size_t>(omega) * n + u] = static_cast<std::int64_t>(moves_.size());
      moves_.push_back({omega, u});
      rows_.push_back(std::move(row));
    }
  }
}

std::int64_t FingerMoveSystem::row_of(EdgeId omega, VertexId u) const {
  const std::size_t n = pairs_->graph().vertex_count();
  if (omega >= pairs_->graph().edge_count() || u >= n) return -1;
  return row_index_[static_cast<std::size_t>(omega) * n + u];
}

gf2::BitVector FingerMoveSystem::mod2_row(std::size_t r) const {
  gf2::BitVector v(col_count());
  for (const SignedEntry& e : rows_[r]) v.set(e.col);
  return v;
}

gf2::BitMatrix FingerMoveSystem::mod2_matrix() const {
  gf2::BitMatrix mat(row_count(), col_count());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const SignedEntry& e : rows_[r]) mat.set(r, e.col);
  return mat;
}

std::vector<std::vector<std::int8_t>> FingerMoveSystem::signed_matrix() const {
  std::vector<std::vector<std::int8_t>> mat(row_count(), std::vector<std::int8_t>(col_count(), 0));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const SignedEntry& e : rows_[r]) mat[r][e.col] = e.sign;
  return mat;
}

gf2::BitVector finger_move_vector(const EdgePairSet& pairs, EdgeId omega, VertexId u) {
  const Graph& h = pairs.graph();
  if (omega >= h.edge_count() || u >= h.vertex_count()) throw std::invalid_argument("finger move id out of range");
  if (h.edge(omega).contains(u)) throw std::invalid_argument("finger move vertex lies on the edge");
  gf2::BitVector v(pairs.size());
  for (EdgeId beta : h.incident(u)) {
    auto idx = pairs.index_of(omega, beta);
    if (idx >= 0) v.set(static_cast<std::size_t>(idx));
  }
  return v;
}

FingerMoveSystem build_system(const Graph& g, PairKind kind) {
  return FingerMoveSystem(std::make_shared<EdgePairSet>(pair_set(g, kind)));
}

const char* to_string(Mode mode) { return mode == Mode::mod2 ? "mod2" : "integer"; }

Mode parse_mode(std::string_view name) {
  if (name == "mod2") return Mode::mod2;
  if (name == "integer") return Mode::integer;
  throw std::invalid_argument("unknown mode: " + std::string(name));
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void check_sizes(const FingerMoveSystem& sys, const CrossingVector& o) {
  if (o.mod2.size() != sys.col_count() || o.signed_count.size() != sys.col_count())
    throw std::invalid_argument("crossing vector is not indexed by the system's pair set");
}

}  // namespace

ObstructionReport decide_mod2(const FingerMoveSystem& sys, const CrossingVector& o) {
  check_sizes(sys, o);
  const auto start = Clock::now();
  const std::size_t cols = sys.col_count();
  gf2::EchelonBasis basis(cols, sys.row_count());
  std::vector<gf2::Word> buffer(gf2::words_for(cols), 0);
  for (std::size_t r = 0; r < sys.row_count(); ++r) {
    const auto& row = sys.signed_row(r);
    if (row.empty()) continue;  // zero rows keep their ids but never enter the basis
    for (const SignedEntry& e : row) buffer[e.col / 64] |= gf2::Word{1} << (e.col % 64);
    basis.insert(buffer, r);
    for (const SignedEntry& e : row) buffer[e.col / 64] = 0;
  }

  gf2::BitVector target(cols);
  for (std::size_t c = 0; c < cols; ++c)
    if (o.mod2[c]) target.set(c);
  gf2::SpanResult span = gf2::span_membership(basis, target);

  ObstructionReport report;
  report.kind = sys.pairs().kind();
  report.mode = Mode::mod2;
  report.rank = basis.rank();
  report.pair_count = cols;
  report.row_count = sys.row_count();
  report.vanishes = span.member;
  if (span.member) {
    std::vector<WitnessTerm> witness;
    for (std::size_t r : span.combination) witness.push_back({sys.moves()[r], Integer(1)});
    report.witness = std::move(witness);
  } else {
    report.certificate = std::move(span.certificate);
  }
  report.millis = millis_since(start);
  return report;
}

ObstructionReport decide_integer(const FingerMoveSystem& sys, const CrossingVector& o) {
  check_sizes(sys, o);
  const auto start = Clock::now();
  std::vector<lattice::SparseRow> rows(sys.row_count());
  for (std::size_t r = 0; r < sys.row_count(); ++r)
    for (const SignedEntry& e : sys.signed_row(r)) rows[r].push_back({e.col, Integer(e.sign)});
  lattice::HermiteBasis basis(rows, sys.col_count());
  std::vector<Integer> target(o.signed_count.size());
  for (std::size_t c = 0; c < target.size(); ++c) target[c] = Integer(static_cast<long>(o.signed_count[c]));
  auto result = basis.solve(target);

  ObstructionReport report;
  report.kind = sys.pairs().kind();
  report.mode = Mode::integer;
  report.rank = basis.rank();
  report.pair_count = sys.col_count();
  report.row_count = sys.row_count();
  report.vanishes = result.member;
  if (result.member) {
    std::vector<WitnessTerm> witness;
    for (std::size_t r = 0; r < result.witness->size(); ++r)
      if ((*result.witness)[r] != 0) witness.push_back({sys.moves()[r], (*result.witness)[r]});
    report.witness = std::move(witness);
  } else {
    report.integer_certificate = std::move(result.certificate);
  }
  report.millis = millis_since(start);
  return report;
}

ObstructionReport decide(const FingerMoveSystem& sys, const CrossingVector& o, Mode mode) {
  return mode == Mode::mod2 ? decide_mod2(sys, o) : decide_integer(sys, o);
}

bool verify_witness(const FingerMoveSystem& sys, const CrossingVector& o, const ObstructionReport& report) {
  if (!report.witness) return false;
  const std::size_t cols = sys.col_count();
  std::vector<Integer> sum(cols, 0);
  for (const WitnessTerm& t : *report.witness) {
    auto r = sys.row_of(t.move.edge, t.move.vertex);
    if (r < 0) return false;
    for (const SignedEntry& e : sys.signed_row(static_cast<std::size_t>(r)))
      sum[e.col] += report.mode == Mode::mod2 ? Integer(1) : Integer(t.coefficient * e.sign);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (report.mode == Mode::mod2) {
      if ((mpz_odd_p(sum[c].get_mpz_t()) != 0) != (o.mod2[c] != 0)) return false;
    } else if (sum[c] != Integer(static_cast<long>(o.signed_count[c]))) {
      return false;
    }
  }
  return true;
}

bool verify_certificate(const FingerMoveSystem& sys, const CrossingVector& o, const ObstructionReport& report) {
  const std::size_t cols = sys.col_count();
  if (report.mode == Mode::mod2) {
    if (!report.certificate) return false;
    std::vector<std::uint8_t> y(cols, 0);
    for (std::size_t c : *report.certificate) {
      if (c >= cols) return false;
      y[c] = 1;
    }
    for (std::size_t r = 0; r < sys.row_count(); ++r) {
      unsigned parity = 0;
      for (const SignedEntry& e : sys.signed_row(r)) parity ^= y[e.col];
      if (parity != 0) return false;
    }
    unsigned parity = 0;
    for (std::size_t c = 0; c < cols; ++c) parity ^= (y[c] & o.mod2[c]);
    return parity == 1;
  }
  if (!report.integer_certificate) return false;
  std::vector<Rational> y(cols, 0);
  for (const auto& [c, q] : *report.integer_certificate) {
    if (c >= cols) return false;
    y[c] = q;
  }
  for (std::size_t r = 0; r < sys.row_count(); ++r) {
    Rational value = 0;
    for (const SignedEntry& e : sys.signed_row(r)) value += y[e.col] * e.sign;
    if (value.get_den() != 1) return false;
  }
  Rational value = 0;
  for (std::size_t c = 0; c < cols; ++c) value += y[c] * static_cast<long>(o.signed_count[c]);
  return value.get_den() != 1;
}

namespace {

Drawing make_layout(const Graph& h, const ObstructionOptions& options) {
  switch (options.layout) {
    case Layout::moment: return layout_moment_curve(h);
    case Layout::convex: {
      std::vector<VertexId> order(h.vertex_count());
      std::iota(order.begin(), order.end(), 0);
      return layout_convex_order(h, order);
    }
    case Layout::random: return layout_random(h, options.seed);
  }
  throw std::invalid_argument("unknown layout");
}

}  // namespace

ObstructionReport obstruction_from_drawing(const Drawing& d, const Graph& g, PairKind kind, Mode mode) {
  const auto start = Clock::now();
  auto pairs = std::make_shared<EdgePairSet>(pair_set(g, kind));
  if (!(d.graph == pairs->graph())) throw std::invalid_argument("drawing does not match the obstruction's graph");
  CrossingVector o = crossing_vector(d, *pairs);
  FingerMoveSystem sys(pairs);
  ObstructionReport report = decide(sys, o, mode);
  report.millis = millis_since(start);
  return report;
}

ObstructionReport obstruction(const Graph& g, PairKind kind, const ObstructionOptions& options) {
  const auto start = Clock::now();
  auto pairs = std::make_shared<EdgePairSet>(pair_set(g, kind));
  Drawing d = make_layout(pairs->graph(), options);
  CrossingVector o = crossing_vector(d, *pairs);
  FingerMoveSystem sys(pairs);
  ObstructionReport report = decide(sys, o, options.mode);
  report.millis = millis_since(start);
  return report;
}

ObstructionReport string_obstruction(const Graph& g, Mode mode) {
  return obstruction(g, PairKind::s, {.mode = mode});
}

ObstructionReport subdivided_obstruction(const Graph& g, Mode mode) {
  return obstruction(g, PairKind::sd, {.mode = mode});
}

ObstructionReport planarity_obstruction(const Graph& g, Mode mode) {
  return obstruction(g, PairKind::delta, {.mode = mode});
}

}  // namespace stringob

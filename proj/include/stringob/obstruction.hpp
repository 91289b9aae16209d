#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stringob/drawing.hpp"
#include "stringob/gf2.hpp"
#include "stringob/graph.hpp"
#include "stringob/lattice.hpp"

namespace stringob {

/// A finger move: edge ω rerouted around vertex u (u not on ω).
struct FingerMove {
  EdgeId edge;
  VertexId vertex;
  friend bool operator==(const FingerMove&, const FingerMove&) = default;
};

/// One entry of a signed finger-move row.
struct SignedEntry {
  std::uint32_t col;
  std::int8_t sign;
};

/// Finger-move vectors of a graph over an indexed pair set. Row (ω, u) is
/// non-zero exactly on the pairs {ω, β} with u ∈ β. The signed variant uses
///   sign = (ω is the lower edge of the pair ? +1 : -1) * (u is β's high end ? +1 : -1),
/// which is (up to a per-row sign) the change of the signed crossing count
/// produced by the geometric finger move.
class FingerMoveSystem {
 public:
  explicit FingerMoveSystem(std::shared_ptr<const EdgePairSet> pairs);

  const EdgePairSet& pairs() const { return *pairs_; }
  std::shared_ptr<const EdgePairSet> pairs_ptr() const { return pairs_; }

  std::size_t row_count() const { return moves_.size(); }
  std::size_t col_count() const { return pairs_->size(); }
  const std::vector<FingerMove>& moves() const { return moves_; }
  /// Row of a given finger move, or -1.
  std::int64_t row_of(EdgeId omega, VertexId u) const;

  const std::vector<SignedEntry>& signed_row(std::size_t r) const { return rows_[r]; }
  gf2::BitVector mod2_row(std::size_t r) const;
  gf2::BitMatrix mod2_matrix() const;
  std::vector<std::vector<std::int8_t>> signed_matrix() const;

 private:
  std::shared_ptr<const EdgePairSet> pairs_;
  std::vector<FingerMove> moves_;
  std::vector<std::vector<SignedEntry>> rows_;
  std::vector<std::int64_t> row_index_;  // omega * n + u
};

/// φ_{ω,u} over the pair set's index. Throws std::invalid_argument if u ∈ ω.
gf2::BitVector finger_move_vector(const EdgePairSet& pairs, EdgeId omega, VertexId u);

FingerMoveSystem build_system(const Graph& g, PairKind kind);

enum class Mode { mod2, integer };
const char* to_string(Mode mode);
Mode parse_mode(std::string_view name);

struct WitnessTerm {
  FingerMove move;
  Integer coefficient;  // 1 in mod-2 mode
};

struct ObstructionReport {
  PairKind kind = PairKind::delta;
  Mode mode = Mode::mod2;
  bool vanishes = false;
  std::size_t rank = 0;
  std::size_t pair_count = 0;
  std::size_t row_count = 0;
  std::int64_t millis = 0;
  /// Finger moves whose vectors sum to the crossing vector (present iff vanishes).
  std::optional<std::vector<WitnessTerm>> witness;
  /// Mod 2: pair indices of a functional that kills every finger move and
  /// pairs to 1 with the crossing vector (present iff not vanishing).
  std::optional<std::vector<std::size_t>> certificate;
  /// Integer mode: rational functional, integral on every signed finger move
  /// and non-integral on the signed crossing vector.
  std::optional<std::vector<std::pair<std::uint32_t, Rational>>> integer_certificate;
};

/// Decides o ∈ span_GF(2)(Φ). Throws std::invalid_argument on an index mismatch.
ObstructionReport decide_mod2(const FingerMoveSystem& sys, const CrossingVector& o);

/// Decides o ∈ span_Z(signed Φ) via a Hermite basis.
ObstructionReport decide_integer(const FingerMoveSystem& sys, const CrossingVector& o);

ObstructionReport decide(const FingerMoveSystem& sys, const CrossingVector& o, Mode mode);

/// Direct re-checks by multiplication.
bool verify_witness(const FingerMoveSystem& sys, const CrossingVector& o, const ObstructionReport& report);
bool verify_certificate(const FingerMoveSystem& sys, const CrossingVector& o, const ObstructionReport& report);

/// Layout choice for the composed obstructions.
enum class Layout { moment, convex, random };

struct ObstructionOptions {
  Mode mode = Mode::mod2;
  Layout layout = Layout::moment;
  std::uint64_t seed = 1;
};

/// Obstruction of g modified for pair_set(g, kind), computed from one layout.
/// For kind sd the layout is of G*.
ObstructionReport obstruction(const Graph& g, PairKind kind, const ObstructionOptions& options = {});

/// Same, from a caller-supplied drawing (of g, or of G* for kind sd).
ObstructionReport obstruction_from_drawing(const Drawing& d, const Graph& g, PairKind kind, Mode mode);

ObstructionReport string_obstruction(const Graph& g, Mode mode = Mode::mod2);
ObstructionReport subdivided_obstruction(const Graph& g, Mode mode = Mode::mod2);
ObstructionReport planarity_obstruction(const Graph& g, Mode mode = Mode::mod2);

}  // namespace stringob

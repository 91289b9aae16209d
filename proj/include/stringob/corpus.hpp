#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stringob/graph.hpp"

namespace stringob::corpus {

enum class Check { ob_eq_equivalence, layout_independence, integer_vs_mod2, finger_move_postcondition };

const char* to_string(Check check);
Check parse_check(std::string_view name);

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t n_min = 3;
  std::size_t n_max = 12;
  std::vector<double> edge_probability{0.2, 0.4, 0.6};
  std::vector<Check> checks{Check::ob_eq_equivalence};
  std::size_t finger_moves_per_instance = 1;
};

/// {"seed", "count", "n_range": [lo, hi], "edge_probability": [...], "checks": [...],
///  "finger_moves_per_instance"}; absent keys keep their defaults.
CorpusSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const CorpusSpec& spec);

struct Instance {
  std::size_t index;
  std::uint64_t seed;  // drives the graph and every random choice for it
  double p;
  Graph graph;
};

/// Instance i depends only on (spec.seed, i).
Instance make_instance(const CorpusSpec& spec, std::size_t index);

struct CheckOutcome {
  Check check = Check::ob_eq_equivalence;
  bool passed = true;
  std::size_t trials = 0;
  std::string detail;
};

struct InstanceResult {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0;
  std::vector<CheckOutcome> outcomes;
  /// Mod 2 obstruction vanishes while the integer one does not.
  bool research_flag = false;
};

InstanceResult run_instance(const CorpusSpec& spec, const Instance& instance);

struct Summary {
  CorpusSpec spec;
  std::vector<InstanceResult> results;  // in instance order
  bool passed() const;
  std::size_t failures(Check check) const;
  std::size_t trials(Check check) const;
};

/// Worker count from STRINGOB_THREADS, else the hardware concurrency.
std::size_t worker_count();

/// Evaluates every instance on a bounded pool; results are merged in order.
Summary run(const CorpusSpec& spec, std::size_t workers = worker_count());

nlohmann::json summary_to_json(const Summary& summary);

}  // namespace stringob::corpus

#pragma once

#include <string>
#include <vector>

#include "factfeel/stats.hpp"
#include "factfeel/types.hpp"

namespace factfeel {

struct BalanceConfig {
  // FACT:FEEL proportion to preserve; defaults to 1:1 until overridden with
  // the initial training ratio.
  double ratio_fact = 1.0;
  double ratio_feel = 1.0;
  std::uint64_t seed = 0;

  double ratio() const { return ratio_fact / ratio_feel; }
};

struct IterationLog {
  int iteration = 0;
  std::size_t new_fact_patterns = 0;
  std::size_t new_feel_patterns = 0;
  std::size_t total_patterns = 0;
  std::size_t docs_labeled_fact = 0;
  std::size_t docs_labeled_feel = 0;
  std::size_t docs_absorbed = 0;
  std::string note;
};

struct BootstrapState {
  std::vector<Document> labeled;  // grows per iteration
  std::vector<Document> pool;     // remaining unannotated documents
  PatternSet fact_set{Label::Fact};
  PatternSet feel_set{Label::Feel};
  int iteration = 0;
  std::vector<IterationLog> log;

  const PatternSet& set_for(Label cls) const {
    return cls == Label::Fact ? fact_set : feel_set;
  }
};

// theta_n rule: the label whose set matches at least theta_n distinct
// patterns, unless both classes qualify (then no label).
std::optional<Label> classify_by_patterns(const DocumentPatterns& doc,
                                          const PatternSet& fact_set,
                                          const PatternSet& feel_set,
                                          const PerClassThresholds& t);

std::optional<Label> classify_by_patterns(const Document& doc,
                                          const PatternSet& fact_set,
                                          const PatternSet& feel_set,
                                          const PerClassThresholds& t,
                                          DocumentPatternCache& cache);

struct BalanceResult {
  std::vector<Document> kept_fact;
  std::vector<Document> kept_feel;
  std::vector<Document> returned;  // back to the pool
};

// Keeps the largest subset pair matching cfg's target ratio within +-1
// document; selection is a pure function of (seed, iteration, ids).
BalanceResult balance(std::vector<Document> new_fact,
                      std::vector<Document> new_feel,
                      const BalanceConfig& cfg, int iteration);

// Runs the learn/classify/balance/absorb loop. Iteration 0 learns from the
// initial labeled set only; iterations 1..n consume the pool.
BootstrapState run_bootstrap(BootstrapState state, int iterations,
                             const PerClassThresholds& thresholds,
                             const BalanceConfig& cfg,
                             DocumentPatternCache& cache);

// State directory round-trip: patterns.csv, bootstrap_log.csv, labeled.jsonl,
// pool.jsonl, state.json.
void save_state(const BootstrapState& state, const PerClassThresholds& t,
                const std::string& dir);
BootstrapState load_state(const std::string& dir, PerClassThresholds* t = nullptr);

}  // namespace factfeel

#pragma once

#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "factfeel/templates.hpp"
#include "factfeel/types.hpp"

namespace factfeel {

struct PatternCounts {
  std::uint64_t count_fact = 0;
  std::uint64_t count_feel = 0;

  std::uint64_t freq() const { return count_fact + count_feel; }
  double p(Label cls) const {
    if (freq() == 0) return 0.0;
    auto c = cls == Label::Fact ? count_fact : count_feel;
    return static_cast<double>(c) / static_cast<double>(freq());
  }
  double p_fact() const { return p(Label::Fact); }
  double p_feel() const { return p(Label::Feel); }

  PatternCounts& operator+=(const PatternCounts& o) {
    count_fact += o.count_fact;
    count_feel += o.count_feel;
    return *this;
  }

  friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

using PatternTable = std::map<PatternInstance, PatternCounts>;

struct Thresholds {
  int theta_f = 3;       // minimum frequency
  double theta_p = 0.70; // minimum class-conditional probability
  int theta_n = 3;       // distinct patterns required to label a document
};

struct PerClassThresholds {
  Thresholds fact{3, 0.70, 3};
  Thresholds feel{3, 0.55, 3};
  const Thresholds& for_class(Label cls) const {
    return cls == Label::Fact ? fact : feel;
  }
};

// Parsed pattern instances for one document, computed once and shared.
struct DocumentPatterns {
  std::vector<PatternInstance> instances;
  std::set<PatternInstance> distinct;
};

// Cache of document id -> instances; parse work may run on several workers,
// results are independent of worker count.
class DocumentPatternCache {
 public:
  explicit DocumentPatternCache(const Lexicon& lex, int workers = 0)
      : lex_(lex), workers_(workers) {}

  const DocumentPatterns& get(const Document& doc);
  void warm(const std::vector<const Document*>& docs);

 private:
  const Lexicon& lex_;
  int workers_;
  std::unordered_map<std::string, DocumentPatterns> cache_;
};

// One selected pattern with the statistics snapshot taken at selection time.
struct SelectedPattern {
  PatternInstance pattern;
  PatternCounts counts;
  int iteration_added = 0;
};

struct PatternSet {
  Label cls = Label::Fact;
  std::vector<SelectedPattern> patterns;  // selection order
  std::set<PatternInstance> members;

  bool contains(const PatternInstance& p) const { return members.count(p) > 0; }
  std::size_t size() const { return patterns.size(); }

  // Adds patterns not already present; returns how many were new.
  std::size_t absorb(const std::vector<SelectedPattern>& fresh);

  // Members added at iteration <= iter.
  std::set<PatternInstance> members_through(int iter) const;
};

// Aggregates instance counts over labeled documents (multiplicity preserved).
PatternTable compute_stats(const std::vector<const Document*>& labeled,
                           DocumentPatternCache& cache);

// Exactly the rows with freq >= theta_f and p_class >= theta_p, ordered by
// (descending p_class, descending freq, display).
std::vector<SelectedPattern> select_patterns(const PatternTable& table,
                                             Label cls, const Thresholds& t);

struct TuningGrid {
  std::vector<int> theta_f = {2, 3, 5, 10};
  std::vector<double> theta_p = {.55, .60, .65, .70, .75, .80, .90};
  std::vector<int> theta_n = {2, 3, 4};
};

// Per class, the grid point maximizing one-vs-rest precision on dev subject
// to recall >= recall_floor; ties toward higher recall, then lower theta_p.
PerClassThresholds tune_thresholds(const std::vector<const Document*>& dev,
                                   const PatternTable& train_table,
                                   const TuningGrid& grid,
                                   DocumentPatternCache& cache,
                                   double recall_floor = 0.05);

// Pattern table CSV round-trip
// (form,display,freq,count_fact,count_feel,p_fact,p_feel).
void save_pattern_table(const PatternTable& table, const std::string& path);

}  // namespace factfeel

#pragma once

#include <map>
#include <string>
#include <vector>

#include "factfeel/bootstrap.hpp"

namespace factfeel {

struct TopPatternRow {
  int rank = 0;
  double probability = 0.0;
  std::uint64_t frequency = 0;
  TemplateForm form = TemplateForm::NPPrepNP;
  std::string display;
};

// Rows sorted by (descending probability, descending frequency, display),
// min(k, |set|) of them.
std::vector<TopPatternRow> top_patterns(const PatternSet& set, std::size_t k);

// Maps each template form onto a histogram group ("NP Prep", "Adj Noun", ...).
class FormGrouping {
 public:
  static FormGrouping defaults();
  // File format: one "Group Name: Form1 Form2 ..." per line, '#' comments.
  static FormGrouping load(const std::string& path);

  const std::string& group_of(TemplateForm f) const;
  std::vector<std::string> group_order() const { return order_; }
  std::string describe() const;

 private:
  std::map<std::string, std::string> by_form_;  // form name -> group
  std::vector<std::string> order_;
};

enum class HistogramWeighting { Unique, Instance };

struct FormHistogramCell {
  std::size_t unique_count = 0;
  double unique_share = 0.0;  // percent
  std::uint64_t instance_count = 0;
  double instance_share = 0.0;  // percent
};

struct FormHistogram {
  // class name ("FACT", "FEEL", "ALL") -> group -> cell; shares sum to 100
  // per class and weighting.
  std::map<std::string, std::map<std::string, FormHistogramCell>> cells;
};

// Instance counts come from the pattern occurrence table over the final
// labeled set when provided, else from the selection-time snapshots.
FormHistogram form_histogram(const PatternSet& fact_set,
                             const PatternSet& feel_set,
                             const FormGrouping& grouping,
                             const PatternTable* occurrence = nullptr);

// Per class: preposition -> percent share among that class's NPPrepNP
// patterns, unique-pattern weighted, descending share.
struct PrepDistribution {
  std::vector<std::pair<std::string, double>> fact;
  std::vector<std::pair<std::string, double>> feel;
};

PrepDistribution prep_distribution(const PatternSet& fact_set,
                                   const PatternSet& feel_set);

// Writes top_patterns_fact.csv, top_patterns_feel.csv, form_histogram.csv,
// prep_distribution.csv, and report.md into dir.
void write_analysis(const BootstrapState& state, const FormGrouping& grouping,
                    const PatternTable* occurrence, std::size_t top_k,
                    const std::string& dir);

}  // namespace factfeel

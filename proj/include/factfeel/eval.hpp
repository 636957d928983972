#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "factfeel/bootstrap.hpp"

namespace factfeel {

struct ClassOutcome {
  std::size_t true_positives = 0;
  std::size_t predicted_positives = 0;
  std::size_t gold_positives = 0;

  // absent when there are no predictions (not zero)
  std::optional<double> precision() const {
    if (predicted_positives == 0) return std::nullopt;
    return static_cast<double>(true_positives) /
           static_cast<double>(predicted_positives);
  }
  double recall() const {
    if (gold_positives == 0) return 0.0;
    return static_cast<double>(true_positives) /
           static_cast<double>(gold_positives);
  }
};

struct EvalRow {
  std::string name;  // "Iter 0" .. "Iter N", or "NB"
  ClassOutcome fact;
  ClassOutcome feel;
  std::optional<double> accuracy;  // reported in addition to P/R
};

struct EvalReport {
  std::vector<EvalRow> rows;
};

// Pattern-based classification on the test split with the cumulative sets of
// one iteration. Unlabeled predictions count against recall only.
EvalRow evaluate_patterns(const std::vector<const Document*>& test,
                          const PatternSet& fact_set,
                          const PatternSet& feel_set,
                          const PerClassThresholds& thresholds,
                          DocumentPatternCache& cache,
                          const std::string& name = "patterns");

// One row per iteration recorded in the state (cumulative sets).
EvalReport evaluate_state(const std::vector<const Document*>& test,
                          const BootstrapState& state,
                          const PerClassThresholds& thresholds,
                          DocumentPatternCache& cache);

// Binary-presence unigram Naive Bayes with add-alpha smoothing.
struct NBModel {
  double alpha = 1.0;
  double log_prior_fact = 0.0;
  double log_prior_feel = 0.0;
  // log P(term | class); terms outside the vocabulary are ignored
  std::unordered_map<std::string, double> log_lik_fact;
  std::unordered_map<std::string, double> log_lik_feel;
  std::size_t vocabulary_size = 0;

  struct Scores {
    double fact = 0.0;
    double feel = 0.0;
  };
  Scores score(const Document& doc) const;
};

std::vector<std::string> unigrams(const std::string& text);

NBModel nb_train(const std::vector<const Document*>& train, double alpha);

// alpha maximizing dev accuracy; ties toward the smaller alpha.
double nb_tune(const std::vector<const Document*>& train,
               const std::vector<const Document*>& dev,
               const std::vector<double>& alpha_grid);

// Never abstains; ties go to FACT.
Label nb_predict(const NBModel& model, const Document& doc);

EvalRow evaluate_nb(const std::vector<const Document*>& test,
                    const NBModel& model);

void save_eval_report(const EvalReport& report, const std::string& path);

}  // namespace factfeel

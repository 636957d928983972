#include "factfeel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "factfeel/csv.hpp"
#include "factfeel/parser.hpp"

namespace factfeel {

EvalRow evaluate_patterns(const std::vector<const Document*>& test,
                          const PatternSet& fact_set,
                          const PatternSet& feel_set,
                          const PerClassThresholds& thresholds,
                          DocumentPatternCache& cache,
                          const std::string& name) {
  if (test.empty()) throw std::runtime_error("evaluate_patterns: empty test set");
  cache.warm(test);

  EvalRow row;
  row.name = name;
  std::size_t correct = 0, decided = 0;
  for (const Document* doc : test) {
    if (!doc->label)
      throw std::runtime_error("evaluate_patterns: unlabeled test document " +
                               doc->id);
    if (*doc->label == Label::Fact) ++row.fact.gold_positives;
    else ++row.feel.gold_positives;

    auto predicted =
        classify_by_patterns(cache.get(*doc), fact_set, feel_set, thresholds);
    if (!predicted) continue;
    ++decided;
    ClassOutcome& out = *predicted == Label::Fact ? row.fact : row.feel;
    ++out.predicted_positives;
    if (*predicted == *doc->label) {
      ++out.true_positives;
      ++correct;
    }
  }
  row.accuracy = decided > 0 ? std::optional<double>(
                                   static_cast<double>(correct) /
                                   static_cast<double>(test.size()))
                             : std::nullopt;
  return row;
}

EvalReport evaluate_state(const std::vector<const Document*>& test,
                          const BootstrapState& state,
                          const PerClassThresholds& thresholds,
                          DocumentPatternCache& cache) {
  EvalReport report;
  for (int iter = 0; iter <= state.iteration; ++iter) {
    PatternSet fact{Label::Fact};
    PatternSet feel{Label::Feel};
    for (const auto& sp : state.fact_set.patterns)
      if (sp.iteration_added <= iter) {
        fact.patterns.push_back(sp);
        fact.members.insert(sp.pattern);
      }
    for (const auto& sp : state.feel_set.patterns)
      if (sp.iteration_added <= iter) {
        feel.patterns.push_back(sp);
        feel.members.insert(sp.pattern);
      }
    report.rows.push_back(evaluate_patterns(test, fact, feel, thresholds, cache,
                                            "Iter " + std::to_string(iter)));
  }
  return report;
}

std::vector<std::string> unigrams(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& sentence : tokenize(text))
    for (const auto& token : sentence) {
      bool alpha = std::any_of(token.normalized.begin(), token.normalized.end(),
                               [](unsigned char c) { return std::isalnum(c); });
      if (alpha) out.push_back(token.normalized);
    }
  return out;
}

NBModel nb_train(const std::vector<const Document*>& train, double alpha) {
  if (alpha <= 0.0) throw std::runtime_error("nb_train: alpha must be > 0");
  NBModel model;
  model.alpha = alpha;

  std::size_t n_fact = 0, n_feel = 0;
  std::map<std::string, std::size_t> df_fact, df_feel;
  for (const Document* doc : train) {
    if (!doc->label)
      throw std::runtime_error("nb_train: unlabeled document " + doc->id);
    bool fact = *doc->label == Label::Fact;
    (fact ? n_fact : n_feel)++;
    std::set<std::string> present;
    for (auto& t : unigrams(doc->text)) present.insert(std::move(t));
    for (const auto& t : present) (fact ? df_fact : df_feel)[t]++;
  }
  std::size_t n = n_fact + n_feel;
  if (n == 0) throw std::runtime_error("nb_train: empty training set");

  std::set<std::string> vocab;
  for (const auto& [t, _] : df_fact) vocab.insert(t);
  for (const auto& [t, _] : df_feel) vocab.insert(t);
  model.vocabulary_size = vocab.size();

  // class priors; a class absent from training keeps -inf out by flooring
  model.log_prior_fact =
      n_fact > 0 ? std::log(static_cast<double>(n_fact) / n)
                 : -std::numeric_limits<double>::infinity();
  model.log_prior_feel =
      n_feel > 0 ? std::log(static_cast<double>(n_feel) / n)
                 : -std::numeric_limits<double>::infinity();

  double total_fact = 0, total_feel = 0;
  for (const auto& [t, c] : df_fact) total_fact += static_cast<double>(c);
  for (const auto& [t, c] : df_feel) total_feel += static_cast<double>(c);
  const double v = static_cast<double>(vocab.size());
  for (const auto& t : vocab) {
    double cf = df_fact.count(t) ? static_cast<double>(df_fact.at(t)) : 0.0;
    double cl = df_feel.count(t) ? static_cast<double>(df_feel.at(t)) : 0.0;
    model.log_lik_fact[t] = std::log((cf + alpha) / (total_fact + alpha * v));
    model.log_lik_feel[t] = std::log((cl + alpha) / (total_feel + alpha * v));
  }
  return model;
}

NBModel::Scores NBModel::score(const Document& doc) const {
  Scores s{log_prior_fact, log_prior_feel};
  std::set<std::string> present;
  for (auto& t : unigrams(doc.text)) present.insert(std::move(t));
  for (const auto& t : present) {
    auto itf = log_lik_fact.find(t);
    if (itf == log_lik_fact.end()) continue;  // out of vocabulary
    s.fact += itf->second;
    s.feel += log_lik_feel.at(t);
  }
  return s;
}

Label nb_predict(const NBModel& model, const Document& doc) {
  auto s = model.score(doc);
  return s.feel > s.fact ? Label::Feel : Label::Fact;
}

double nb_tune(const std::vector<const Document*>& train,
               const std::vector<const Document*>& dev,
               const std::vector<double>& alpha_grid) {
  if (alpha_grid.empty()) throw std::runtime_error("nb_tune: empty alpha grid");
  auto grid = alpha_grid;
  std::sort(grid.begin(), grid.end());
  double best_alpha = grid.front();
  double best_acc = -1.0;
  for (double alpha : grid) {
    NBModel model = nb_train(train, alpha);
    std::size_t correct = 0;
    for (const Document* doc : dev)
      if (nb_predict(model, *doc) == doc->label) ++correct;
    double acc = dev.empty() ? 0.0
                             : static_cast<double>(correct) /
                                   static_cast<double>(dev.size());
    if (acc > best_acc) {  // strict: ties keep the smaller alpha
      best_acc = acc;
      best_alpha = alpha;
    }
  }
  return best_alpha;
}

EvalRow evaluate_nb(const std::vector<const Document*>& test,
                    const NBModel& model) {
  EvalRow row;
  row.name = "NB";
  std::size_t correct = 0;
  for (const Document* doc : test) {
    if (!doc->label)
      throw std::runtime_error("evaluate_nb: unlabeled test document " +
                               doc->id);
    if (*doc->label == Label::Fact) ++row.fact.gold_positives;
    else ++row.feel.gold_positives;
    Label predicted = nb_predict(model, *doc);
    ClassOutcome& out = predicted == Label::Fact ? row.fact : row.feel;
    ++out.predicted_positives;
    if (predicted == *doc->label) {
      ++out.true_positives;
      ++correct;
    }
  }
  row.accuracy = test.empty() ? std::nullopt
                              : std::optional<double>(
                                    static_cast<double>(correct) /
                                    static_cast<double>(test.size()));
  return row;
}

void save_eval_report(const EvalReport& report, const std::string& path) {
  csv::Writer out(path);
  out.row({"row", "fact_precision", "fact_recall", "feel_precision",
           "feel_recall", "accuracy", "fact_tp", "fact_predicted", "fact_gold",
           "feel_tp", "feel_predicted", "feel_gold"});
  auto fmt = [](std::optional<double> v) -> std::string {
    if (!v) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *v);
    return buf;
  };
  for (const auto& row : report.rows) {
    out.row({row.name, fmt(row.fact.precision()), fmt(row.fact.recall()),
             fmt(row.feel.precision()), fmt(row.feel.recall()),
             fmt(row.accuracy), std::to_string(row.fact.true_positives),
             std::to_string(row.fact.predicted_positives),
             std::to_string(row.fact.gold_positives),
             std::to_string(row.feel.true_positives),
             std::to_string(row.feel.predicted_positives),
             std::to_string(row.feel.gold_positives)});
  }
}

}  // namespace factfeel

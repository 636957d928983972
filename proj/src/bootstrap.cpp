#include "factfeel/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "factfeel/corpus.hpp"
#include "factfeel/csv.hpp"
#include "factfeel/hashing.hpp"

namespace factfeel {

std::optional<Label> classify_by_patterns(const DocumentPatterns& doc,
                                          const PatternSet& fact_set,
                                          const PatternSet& feel_set,
                                          const PerClassThresholds& t) {
  int fact_hits = 0, feel_hits = 0;
  for (const auto& p : doc.distinct) {
    if (fact_set.contains(p)) ++fact_hits;
    if (feel_set.contains(p)) ++feel_hits;
  }
  bool fact_ok = fact_hits >= t.fact.theta_n;
  bool feel_ok = feel_hits >= t.feel.theta_n;
  if (fact_ok && feel_ok) return std::nullopt;
  if (fact_ok) return Label::Fact;
  if (feel_ok) return Label::Feel;
  return std::nullopt;
}

std::optional<Label> classify_by_patterns(const Document& doc,
                                          const PatternSet& fact_set,
                                          const PatternSet& feel_set,
                                          const PerClassThresholds& t,
                                          DocumentPatternCache& cache) {
  return classify_by_patterns(cache.get(doc), fact_set, feel_set, t);
}

namespace {

// Deterministic pick of k documents; the rest are returned.
void pick(std::vector<Document>& docs, std::size_t k, std::uint64_t seed,
          int iteration, std::vector<Document>& kept,
          std::vector<Document>& returned) {
  std::sort(docs.begin(), docs.end(), [&](const Document& a, const Document& b) {
    auto ka = order_key(seed, a.id, static_cast<std::uint64_t>(iteration));
    auto kb = order_key(seed, b.id, static_cast<std::uint64_t>(iteration));
    return ka != kb ? ka < kb : a.id < b.id;
  });
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i < k) kept.push_back(std::move(docs[i]));
    else returned.push_back(std::move(docs[i]));
  }
}

}  // namespace

BalanceResult balance(std::vector<Document> new_fact,
                      std::vector<Document> new_feel,
                      const BalanceConfig& cfg, int iteration) {
  if (cfg.ratio_fact <= 0.0 || cfg.ratio_feel <= 0.0)
    throw std::runtime_error("balance: target ratio components must be positive");

  BalanceResult out;
  const std::size_t nf = new_fact.size();
  const std::size_t nl = new_feel.size();
  if (nf == 0 || nl == 0) {
    // one side empty: nothing can be balanced, everything goes back
    for (auto& d : new_fact) out.returned.push_back(std::move(d));
    for (auto& d : new_feel) out.returned.push_back(std::move(d));
    return out;
  }

  const double r = cfg.ratio();  // fact documents per feel document
  std::size_t keep_fact, keep_feel;
  std::size_t want_fact = static_cast<std::size_t>(
      std::floor(static_cast<double>(nl) * r));
  if (want_fact <= nf) {
    keep_fact = want_fact;
    keep_feel = nl;
  } else {
    keep_fact = nf;
    keep_feel = static_cast<std::size_t>(
        std::floor(static_cast<double>(nf) / r));
  }
  pick(new_fact, keep_fact, cfg.seed, iteration, out.kept_fact, out.returned);
  pick(new_feel, keep_feel, cfg.seed, iteration, out.kept_feel, out.returned);
  return out;
}

BootstrapState run_bootstrap(BootstrapState state, int iterations,
                             const PerClassThresholds& thresholds,
                             const BalanceConfig& cfg,
                             DocumentPatternCache& cache) {
  auto labeled_ptrs = [&] {
    std::vector<const Document*> ptrs;
    for (const auto& d : state.labeled) ptrs.push_back(&d);
    return ptrs;
  };

  auto learn = [&](int iter) {
    auto table = compute_stats(labeled_ptrs(), cache);
    auto fact_rows = select_patterns(table, Label::Fact, thresholds.fact);
    auto feel_rows = select_patterns(table, Label::Feel, thresholds.feel);
    for (auto& sp : fact_rows) sp.iteration_added = iter;
    for (auto& sp : feel_rows) sp.iteration_added = iter;
    IterationLog row;
    row.iteration = iter;
    row.new_fact_patterns = state.fact_set.absorb(fact_rows);
    row.new_feel_patterns = state.feel_set.absorb(feel_rows);
    row.total_patterns = state.fact_set.size() + state.feel_set.size();
    return row;
  };

  if (state.iteration == 0 && state.fact_set.size() == 0 &&
      state.feel_set.size() == 0) {
    state.log.push_back(learn(0));
  }

  for (int iter = state.iteration + 1; iter <= iterations; ++iter) {
    if (state.pool.empty()) {
      // keep one log row per requested iteration even when nothing is left
      IterationLog row;
      row.iteration = iter;
      row.total_patterns = state.fact_set.size() + state.feel_set.size();
      row.note = "pool exhausted";
      state.log.push_back(row);
      state.iteration = iter;
      continue;
    }

    // classify the pool with the current cumulative sets
    std::vector<const Document*> pool_ptrs;
    for (const auto& d : state.pool) pool_ptrs.push_back(&d);
    cache.warm(pool_ptrs);

    std::vector<Document> new_fact, new_feel, undecided;
    for (auto& d : state.pool) {
      auto label = classify_by_patterns(cache.get(d), state.fact_set,
                                        state.feel_set, thresholds);
      if (label == Label::Fact) new_fact.push_back(std::move(d));
      else if (label == Label::Feel) new_feel.push_back(std::move(d));
      else undecided.push_back(std::move(d));
    }
    std::size_t labeled_fact = new_fact.size();
    std::size_t labeled_feel = new_feel.size();

    auto balanced =
        balance(std::move(new_fact), std::move(new_feel), cfg, iter);

    state.pool = std::move(undecided);
    for (auto& d : balanced.returned) state.pool.push_back(std::move(d));

    std::size_t absorbed = balanced.kept_fact.size() + balanced.kept_feel.size();
    for (auto& d : balanced.kept_fact) {
      d.label = Label::Fact;
      state.labeled.push_back(std::move(d));
    }
    for (auto& d : balanced.kept_feel) {
      d.label = Label::Feel;
      state.labeled.push_back(std::move(d));
    }

    IterationLog row = learn(iter);
    row.docs_labeled_fact = labeled_fact;
    row.docs_labeled_feel = labeled_feel;
    row.docs_absorbed = absorbed;
    state.log.push_back(row);
    state.iteration = iter;
  }
  return state;
}

namespace {

void save_docs(const std::vector<Document>& docs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  for (const auto& d : docs) {
    nlohmann::json j;
    j["id"] = d.id;
    j["text"] = d.text;
    if (d.score) j["score"] = *d.score;
    if (d.label) j["label"] = to_string(*d.label);
    if (d.split) j["split"] = to_string(*d.split);
    out << j.dump() << '\n';
  }
}

std::string fmt_prob(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void save_state(const BootstrapState& state, const PerClassThresholds& t,
                const std::string& dir) {
  std::filesystem::create_directories(dir);

  {
    csv::Writer out(dir + "/patterns.csv");
    out.row({"class", "iteration_added", "form", "display", "freq",
             "count_fact", "count_feel", "p_fact", "p_feel"});
    for (const PatternSet* set : {&state.fact_set, &state.feel_set}) {
      for (const auto& sp : set->patterns) {
        out.row({to_string(set->cls), std::to_string(sp.iteration_added),
                 form_name(sp.pattern.form), sp.pattern.display(),
                 std::to_string(sp.counts.freq()),
                 std::to_string(sp.counts.count_fact),
                 std::to_string(sp.counts.count_feel),
                 fmt_prob(sp.counts.p_fact()), fmt_prob(sp.counts.p_feel())});
      }
    }
  }
  {
    csv::Writer out(dir + "/bootstrap_log.csv");
    out.row({"iteration", "new_fact_patterns", "new_feel_patterns",
             "total_patterns", "docs_labeled_fact", "docs_labeled_feel",
             "docs_absorbed", "note"});
    for (const auto& row : state.log) {
      out.row({std::to_string(row.iteration),
               std::to_string(row.new_fact_patterns),
               std::to_string(row.new_feel_patterns),
               std::to_string(row.total_patterns),
               std::to_string(row.docs_labeled_fact),
               std::to_string(row.docs_labeled_feel),
               std::to_string(row.docs_absorbed), row.note});
    }
  }
  save_docs(state.labeled, dir + "/labeled.jsonl");
  save_docs(state.pool, dir + "/pool.jsonl");
  {
    nlohmann::json j;
    j["iteration"] = state.iteration;
    j["thresholds"] = {
        {"fact",
         {{"theta_f", t.fact.theta_f},
          {"theta_p", t.fact.theta_p},
          {"theta_n", t.fact.theta_n}}},
        {"feel",
         {{"theta_f", t.feel.theta_f},
          {"theta_p", t.feel.theta_p},
          {"theta_n", t.feel.theta_n}}}};
    std::ofstream out(dir + "/state.json", std::ios::binary);
    out << j.dump(2) << '\n';
  }
}

BootstrapState load_state(const std::string& dir, PerClassThresholds* t) {
  BootstrapState state;
  state.labeled =
      load_corpus(dir + "/labeled.jsonl", CorpusFormat::Jsonl).documents;
  state.pool = load_corpus(dir + "/pool.jsonl", CorpusFormat::Jsonl).documents;

  auto rows = csv::read_file(dir + "/patterns.csv");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() < 9) throw std::runtime_error("bad patterns.csv row");
    SelectedPattern sp;
    sp.iteration_added = std::stoi(r[1]);
    sp.pattern = pattern_from_csv(r[2], r[3]);
    sp.counts.count_fact = std::stoull(r[5]);
    sp.counts.count_feel = std::stoull(r[6]);
    PatternSet& set =
        label_from_string(r[0]) == Label::Fact ? state.fact_set : state.feel_set;
    set.patterns.push_back(sp);
    set.members.insert(sp.pattern);
  }

  std::ifstream in(dir + "/state.json", std::ios::binary);
  if (in) {
    nlohmann::json j;
    in >> j;
    state.iteration = j.value("iteration", 0);
    if (t && j.contains("thresholds")) {
      auto read = [&](const char* key, Thresholds& out) {
        const auto& tj = j["thresholds"][key];
        out.theta_f = tj.value("theta_f", out.theta_f);
        out.theta_p = tj.value("theta_p", out.theta_p);
        out.theta_n = tj.value("theta_n", out.theta_n);
      };
      read("fact", t->fact);
      read("feel", t->feel);
    }
  }
  return state;
}

}  // namespace factfeel

#include "factfeel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "factfeel/csv.hpp"

namespace factfeel {

const DocumentPatterns& DocumentPatternCache::get(const Document& doc) {
  auto it = cache_.find(doc.id);
  if (it != cache_.end()) return it->second;
  DocumentPatterns dp;
  dp.instances = instantiate_document(doc.text, lex_);
  dp.distinct.insert(dp.instances.begin(), dp.instances.end());
  return cache_.emplace(doc.id, std::move(dp)).first->second;
}

void DocumentPatternCache::warm(const std::vector<const Document*>& docs) {
  std::vector<const Document*> missing;
  for (const Document* d : docs)
    if (!cache_.count(d->id)) missing.push_back(d);
  if (missing.empty()) return;

  int workers = workers_ > 0
                    ? workers_
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(missing.size())));

  std::vector<DocumentPatterns> results(missing.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < missing.size(); ++i) {
      results[i].instances = instantiate_document(missing[i]->text, lex_);
      results[i].distinct.insert(results[i].instances.begin(),
                                 results[i].instances.end());
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < missing.size();
             i = next.fetch_add(1)) {
          results[i].instances = instantiate_document(missing[i]->text, lex_);
          results[i].distinct.insert(results[i].instances.begin(),
                                     results[i].instances.end());
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  // merge in document order: cache contents independent of worker count
  for (std::size_t i = 0; i < missing.size(); ++i)
    cache_.emplace(missing[i]->id, std::move(results[i]));
}

std::size_t PatternSet::absorb(const std::vector<SelectedPattern>& fresh) {
  std::size_t added = 0;
  for (const auto& sp : fresh) {
    if (members.insert(sp.pattern).second) {
      patterns.push_back(sp);
      ++added;
    }
  }
  return added;
}

std::set<PatternInstance> PatternSet::members_through(int iter) const {
  std::set<PatternInstance> out;
  for (const auto& sp : patterns)
    if (sp.iteration_added <= iter) out.insert(sp.pattern);
  return out;
}

PatternTable compute_stats(const std::vector<const Document*>& labeled,
                           DocumentPatternCache& cache) {
  cache.warm(labeled);
  PatternTable table;
  for (const Document* doc : labeled) {
    if (!doc->label)
      throw std::runtime_error("compute_stats: unlabeled document " + doc->id);
    const auto& dp = cache.get(*doc);
    for (const auto& inst : dp.instances) {
      auto& counts = table[inst];
      if (*doc->label == Label::Fact) ++counts.count_fact;
      else ++counts.count_feel;
    }
  }
  return table;
}

std::vector<SelectedPattern> select_patterns(const PatternTable& table,
                                             Label cls, const Thresholds& t) {
  std::vector<SelectedPattern> out;
  for (const auto& [pattern, counts] : table) {
    if (counts.freq() < static_cast<std::uint64_t>(t.theta_f)) continue;
    if (counts.p(cls) < t.theta_p) continue;
    out.push_back({pattern, counts, 0});
  }
  std::sort(out.begin(), out.end(),
            [cls](const SelectedPattern& a, const SelectedPattern& b) {
              double pa = a.counts.p(cls), pb = b.counts.p(cls);
              if (pa != pb) return pa > pb;
              if (a.counts.freq() != b.counts.freq())
                return a.counts.freq() > b.counts.freq();
              return a.pattern.display() < b.pattern.display();
            });
  return out;
}

namespace {

struct TuningOutcome {
  double precision = -1.0;
  double recall = -1.0;
  bool has_predictions = false;
};

TuningOutcome score_point(const std::vector<const Document*>& dev,
                          const std::set<PatternInstance>& selected,
                          Label cls, int theta_n,
                          DocumentPatternCache& cache) {
  std::size_t tp = 0, predicted = 0, gold = 0;
  for (const Document* doc : dev) {
    bool is_gold = doc->label == cls;
    if (is_gold) ++gold;
    const auto& dp = cache.get(*doc);
    int hits = 0;
    for (const auto& p : dp.distinct)
      if (selected.count(p) && ++hits >= theta_n) break;
    if (hits >= theta_n) {
      ++predicted;
      if (is_gold) ++tp;
    }
  }
  TuningOutcome out;
  out.has_predictions = predicted > 0;
  out.precision = predicted > 0
                      ? static_cast<double>(tp) / static_cast<double>(predicted)
                      : 0.0;
  out.recall =
      gold > 0 ? static_cast<double>(tp) / static_cast<double>(gold) : 0.0;
  return out;
}

}  // namespace

PerClassThresholds tune_thresholds(const std::vector<const Document*>& dev,
                                   const PatternTable& train_table,
                                   const TuningGrid& grid,
                                   DocumentPatternCache& cache,
                                   double recall_floor) {
  if (grid.theta_f.empty() || grid.theta_p.empty() || grid.theta_n.empty())
    throw std::runtime_error("tune_thresholds: empty grid");
  cache.warm(dev);

  PerClassThresholds result;
  for (Label cls : {Label::Fact, Label::Feel}) {
    Thresholds best{};
    TuningOutcome best_out;
    bool best_meets_floor = false;
    bool have_best = false;
    for (int tf : grid.theta_f) {
      for (double tp : grid.theta_p) {
        Thresholds t{tf, tp, 0};
        auto selected_rows = select_patterns(train_table, cls, t);
        std::set<PatternInstance> selected;
        for (const auto& sp : selected_rows) selected.insert(sp.pattern);
        for (int tn : grid.theta_n) {
          t.theta_n = tn;
          auto out = score_point(dev, selected, cls, tn, cache);
          bool meets = out.recall >= recall_floor;
          auto better = [&] {
            if (!have_best) return true;
            if (meets != best_meets_floor) return meets;
            if (meets) {
              if (out.precision != best_out.precision)
                return out.precision > best_out.precision;
              if (out.recall != best_out.recall)
                return out.recall > best_out.recall;
              return t.theta_p < best.theta_p;
            }
            // nothing meets the floor yet: chase recall, then precision
            if (out.recall != best_out.recall)
              return out.recall > best_out.recall;
            return out.precision > best_out.precision;
          };
          if (better()) {
            best = t;
            best_out = out;
            best_meets_floor = meets;
            have_best = true;
          }
        }
      }
    }
    if (cls == Label::Fact) result.fact = best;
    else result.feel = best;
  }
  return result;
}

void save_pattern_table(const PatternTable& table, const std::string& path) {
  csv::Writer out(path);
  out.row({"form", "display", "freq", "count_fact", "count_feel", "p_fact",
           "p_feel"});
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  for (const auto& [pattern, counts] : table) {
    out.row({form_name(pattern.form), pattern.display(),
             std::to_string(counts.freq()), std::to_string(counts.count_fact),
             std::to_string(counts.count_feel), fmt(counts.p_fact()),
             fmt(counts.p_feel())});
  }
}

}  // namespace factfeel

#include "factfeel/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "factfeel/analysis.hpp"
#include "factfeel/bootstrap.hpp"
#include "factfeel/eval.hpp"
#include "factfeel/log.hpp"

namespace factfeel {

namespace fs = std::filesystem;

int run_pipeline(const RunConfig& config) {
  const std::string out = config.out;
  fs::create_directories(out);
  fs::remove(out + "/FAILED");

  nlohmann::json manifest;
  manifest["config"] = nlohmann::json::parse(config.to_json());
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                static_cast<unsigned long long>(config.config_hash()));
  manifest["config_hash"] = hash_buf;
  manifest["stages"] = nlohmann::json::array();

  auto write_manifest = [&] {
    std::ofstream mf(out + "/run.json", std::ios::binary);
    mf << manifest.dump(2) << '\n';
  };

  Lexicon file_lexicon = config.lexicon_dir.empty()
                             ? Lexicon::builtin()
                             : Lexicon::load(config.lexicon_dir);
  const Lexicon& lexicon =
      config.lexicon_dir.empty() ? Lexicon::builtin() : file_lexicon;
  DocumentPatternCache cache(lexicon, config.workers);

  struct StageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string current_stage;
  auto timed = [&](const std::string& name, auto&& fn) {
    current_stage = name;
    auto start = std::chrono::steady_clock::now();
    fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    manifest["stages"].push_back({{"name", name}, {"millis", ms}});
    if (log_enabled(LogLevel::Info))
      std::cerr << "[" << name << "] done in " << ms << " ms\n";
  };

  try {
    Corpus corpus;
    timed("ingest", [&] {
      if (config.input.empty())
        throw StageFailure("no input corpus configured (key: input)");
      CorpusFormat fmt = config.format == "csv" ? CorpusFormat::Csv
                                                : CorpusFormat::Jsonl;
      corpus = load_corpus(config.input, fmt);
      corpus = split_corpus(corpus, config.ratios, config.split_seed);
      save_corpus_dir(corpus, out + "/corpus");
    });

    auto train = corpus.with_split(Split::Train);
    auto dev = corpus.with_split(Split::Dev);
    auto test = corpus.with_split(Split::Test);
    auto pool = corpus.with_split(Split::Unannotated);

    PerClassThresholds thresholds = config.thresholds;
    PatternTable train_table;
    timed("learn", [&] {
      train_table = compute_stats(train, cache);
      save_pattern_table(train_table, out + "/pattern_table.csv");
      if (config.tune) {
        if (dev.empty()) throw StageFailure("tuning requested but dev split is empty");
        thresholds = tune_thresholds(dev, train_table, config.tuning_grid,
                                     cache, config.tuning_recall_floor);
      }
    });

    BootstrapState state;
    timed("bootstrap", [&] {
      for (const Document* d : train) state.labeled.push_back(*d);
      for (const Document* d : pool) state.pool.push_back(*d);
      BalanceConfig balance_cfg;
      balance_cfg.seed = config.balance_seed;
      if (config.balance_ratio_fact > 0 && config.balance_ratio_feel > 0) {
        balance_cfg.ratio_fact = config.balance_ratio_fact;
        balance_cfg.ratio_feel = config.balance_ratio_feel;
      } else {
        auto ratio = Corpus{state.labeled}.class_ratio();
        if (ratio.feel == 0 || ratio.fact == 0)
          throw StageFailure("training split must contain both classes");
        balance_cfg.ratio_fact = static_cast<double>(ratio.fact);
        balance_cfg.ratio_feel = static_cast<double>(ratio.feel);
      }
      state = run_bootstrap(std::move(state), config.iterations, thresholds,
                            balance_cfg, cache);
      save_state(state, thresholds, out + "/bootstrap");
    });

    timed("eval", [&] {
      if (test.empty()) throw StageFailure("test split is empty");
      EvalReport report = evaluate_state(test, state, thresholds, cache);
      double alpha = config.nb_alpha_grid.size() == 1 || dev.empty()
                         ? config.nb_alpha_grid.front()
                         : nb_tune(train, dev, config.nb_alpha_grid);
      NBModel nb = nb_train(train, alpha);
      report.rows.push_back(evaluate_nb(test, nb));
      save_eval_report(report, out + "/eval.csv");
    });

    timed("analyze", [&] {
      FormGrouping grouping = config.form_grouping.empty()
                                  ? FormGrouping::defaults()
                                  : FormGrouping::load(config.form_grouping);
      // occurrence counts over the final labeled set (train + absorbed)
      std::vector<const Document*> final_labeled;
      for (const auto& d : state.labeled) final_labeled.push_back(&d);
      PatternTable occurrence = compute_stats(final_labeled, cache);
      write_analysis(state, grouping, &occurrence, config.analysis_top_k,
                     out + "/analysis");
    });
  } catch (const std::exception& e) {
    manifest["failed_stage"] = current_stage;
    manifest["error"] = e.what();
    write_manifest();
    std::ofstream marker(out + "/FAILED", std::ios::binary);
    marker << current_stage << ": " << e.what() << '\n';
    if (log_enabled(LogLevel::Error))
      std::cerr << "pipeline failed in stage '" << current_stage
                << "': " << e.what() << "\n";
    return 1;
  }

  write_manifest();
  return 0;
}

}  // namespace factfeel

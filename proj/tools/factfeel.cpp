// factfeel: learn lexico-syntactic patterns separating fact-based from
// feeling-based argumentation, bootstrap them over unannotated posts, and
// emit evaluation and analysis tables.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "factfeel/analysis.hpp"
#include "factfeel/bootstrap.hpp"
#include "factfeel/eval.hpp"
#include "factfeel/log.hpp"
#include "factfeel/pipeline.hpp"

using namespace factfeel;

namespace {

std::vector<const Document*> split_ptrs(const Corpus& corpus, Split s) {
  return corpus.with_split(s);
}

int cmd_ingest(const std::string& input, const std::string& format,
               std::uint64_t seed, const std::string& ratios_str,
               const std::string& out) {
  SplitRatios ratios;
  if (!ratios_str.empty()) {
    double t, d, e;
    if (std::sscanf(ratios_str.c_str(), "%lf,%lf,%lf", &t, &d, &e) != 3)
      throw std::runtime_error("--ratios wants three comma-separated numbers");
    ratios = {t, d, e};
  }
  CorpusFormat fmt = format == "csv" ? CorpusFormat::Csv : CorpusFormat::Jsonl;
  Corpus corpus = load_corpus(input, fmt);
  corpus = split_corpus(corpus, ratios, seed);
  save_corpus_dir(corpus, out);
  auto ratio = corpus.class_ratio();
  if (log_enabled(LogLevel::Info))
    std::cerr << "ingested " << corpus.documents.size() << " documents ("
            << ratio.fact << " FACT, " << ratio.feel << " FEEL, "
            << corpus.with_split(Split::Unannotated).size()
            << " unannotated)\n";
  return 0;
}

int cmd_parse(const std::string& text, const std::string& lexicon_dir) {
  Lexicon lex = lexicon_dir.empty() ? Lexicon::builtin()
                                    : Lexicon::load(lexicon_dir);
  for (const auto& parsed : parse_text(text, lex))
    std::cout << describe(parsed);
  return 0;
}

int cmd_patterns(const std::string& corpus_dir, const std::string& doc_id,
                 const std::string& text, const std::string& lexicon_dir) {
  Lexicon lex = lexicon_dir.empty() ? Lexicon::builtin()
                                    : Lexicon::load(lexicon_dir);
  std::string source = text;
  if (source.empty()) {
    if (corpus_dir.empty() || doc_id.empty())
      throw std::runtime_error("need --text, or --corpus with --doc");
    Corpus corpus = load_corpus_dir(corpus_dir);
    const Document* doc = corpus.find(doc_id);
    if (!doc) throw std::runtime_error("no document with id: " + doc_id);
    source = doc->text;
  }
  for (const auto& inst : instantiate_document(source, lex))
    std::cout << form_name(inst.form) << '\t' << inst.display() << '\n';
  return 0;
}

int cmd_learn(const std::string& corpus_dir, const std::string& out,
              bool tune, const RunConfig& base) {
  Lexicon lex = base.lexicon_dir.empty() ? Lexicon::builtin()
                                         : Lexicon::load(base.lexicon_dir);
  DocumentPatternCache cache(lex, base.workers);
  Corpus corpus = load_corpus_dir(corpus_dir);
  auto train = split_ptrs(corpus, Split::Train);
  auto table = compute_stats(train, cache);

  std::filesystem::create_directories(out);
  save_pattern_table(table, out + "/pattern_table.csv");

  PerClassThresholds thresholds = base.thresholds;
  if (tune) {
    auto dev = split_ptrs(corpus, Split::Dev);
    thresholds = tune_thresholds(dev, table, base.tuning_grid, cache,
                                 base.tuning_recall_floor);
    if (log_enabled(LogLevel::Info))
      std::cerr << "tuned thresholds: FACT (" << thresholds.fact.theta_f << ", "
              << thresholds.fact.theta_p << ", " << thresholds.fact.theta_n
              << ")  FEEL (" << thresholds.feel.theta_f << ", "
              << thresholds.feel.theta_p << ", " << thresholds.feel.theta_n
              << ")\n";
  }

  BootstrapState state;
  for (const Document* d : train) state.labeled.push_back(*d);
  state = run_bootstrap(std::move(state), 0, thresholds, BalanceConfig{},
                        cache);
  save_state(state, thresholds, out);
  if (log_enabled(LogLevel::Info))
    std::cerr << "learned " << state.fact_set.size() << " FACT and "
            << state.feel_set.size() << " FEEL patterns\n";
  return 0;
}

int cmd_bootstrap(const std::string& corpus_dir, const std::string& out,
                  int iterations, std::uint64_t seed, const RunConfig& base) {
  Lexicon lex = base.lexicon_dir.empty() ? Lexicon::builtin()
                                         : Lexicon::load(base.lexicon_dir);
  DocumentPatternCache cache(lex, base.workers);
  Corpus corpus = load_corpus_dir(corpus_dir);

  BootstrapState state;
  for (const Document* d : split_ptrs(corpus, Split::Train))
    state.labeled.push_back(*d);
  for (const Document* d : split_ptrs(corpus, Split::Unannotated))
    state.pool.push_back(*d);

  BalanceConfig cfg;
  cfg.seed = seed;
  if (base.balance_ratio_fact > 0 && base.balance_ratio_feel > 0) {
    cfg.ratio_fact = base.balance_ratio_fact;
    cfg.ratio_feel = base.balance_ratio_feel;
  } else {
    auto ratio = Corpus{state.labeled}.class_ratio();
    if (ratio.fact == 0 || ratio.feel == 0)
      throw std::runtime_error("training split must contain both classes");
    cfg.ratio_fact = static_cast<double>(ratio.fact);
    cfg.ratio_feel = static_cast<double>(ratio.feel);
  }

  state = run_bootstrap(std::move(state), iterations, base.thresholds, cfg,
                        cache);
  save_state(state, base.thresholds, out);
  for (const auto& row : state.log)
    if (log_enabled(LogLevel::Info))
      std::cerr << "iter " << row.iteration << ": +" << row.new_fact_patterns
              << " FACT patterns, +" << row.new_feel_patterns
              << " FEEL patterns, absorbed " << row.docs_absorbed << " docs"
              << (row.note.empty() ? "" : " (" + row.note + ")") << "\n";
  return 0;
}

int cmd_eval(const std::string& state_dir, const std::string& test_dir,
             const RunConfig& base) {
  Lexicon lex = base.lexicon_dir.empty() ? Lexicon::builtin()
                                         : Lexicon::load(base.lexicon_dir);
  DocumentPatternCache cache(lex, base.workers);
  PerClassThresholds thresholds = base.thresholds;
  BootstrapState state = load_state(state_dir, &thresholds);

  Corpus corpus = load_corpus_dir(test_dir);
  auto test = split_ptrs(corpus, Split::Test);
  EvalReport report = evaluate_state(test, state, thresholds, cache);

  auto train = split_ptrs(corpus, Split::Train);
  auto dev = split_ptrs(corpus, Split::Dev);
  if (!train.empty()) {
    double alpha = dev.empty() ? base.nb_alpha_grid.front()
                               : nb_tune(train, dev, base.nb_alpha_grid);
    report.rows.push_back(evaluate_nb(test, nb_train(train, alpha)));
  }

  save_eval_report(report, state_dir + "/eval.csv");
  if (!log_enabled(LogLevel::Info)) return 0;
  for (const auto& row : report.rows) {
    auto fmt = [](std::optional<double> v) {
      if (!v) return std::string("-");
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%.1f", *v * 100.0);
      return std::string(buf);
    };
    std::cerr << row.name << "  fact P/R " << fmt(row.fact.precision()) << "/"
              << fmt(row.fact.recall()) << "  feel P/R "
              << fmt(row.feel.precision()) << "/" << fmt(row.feel.recall())
              << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& state_dir, const std::string& out,
                const RunConfig& base) {
  Lexicon lex = base.lexicon_dir.empty() ? Lexicon::builtin()
                                         : Lexicon::load(base.lexicon_dir);
  DocumentPatternCache cache(lex, base.workers);
  BootstrapState state = load_state(state_dir);
  FormGrouping grouping = base.form_grouping.empty()
                              ? FormGrouping::defaults()
                              : FormGrouping::load(base.form_grouping);
  std::vector<const Document*> labeled;
  for (const auto& d : state.labeled) labeled.push_back(&d);
  PatternTable occurrence = compute_stats(labeled, cache);
  write_analysis(state, grouping, &occurrence, base.analysis_top_k, out);
  if (log_enabled(LogLevel::Info))
    std::cerr << "analysis written to " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fact/feel argumentation-style pattern toolkit"};
  app.require_subcommand(1);

  RunConfig base;
  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--lexicon", base.lexicon_dir, "lexicon directory override");
  app.add_option("--workers", base.workers, "parallel parse workers (0 = cores)");

  // ingest
  std::string in_input, in_format = "jsonl", in_ratios, in_out = "corpus";
  std::uint64_t in_seed = 1;
  auto* ingest = app.add_subcommand("ingest", "load, binarize, and split a corpus");
  ingest->add_option("--input", in_input)->required();
  ingest->add_option("--format", in_format)->check(CLI::IsMember({"jsonl", "csv"}));
  ingest->add_option("--seed", in_seed);
  ingest->add_option("--ratios", in_ratios, "train,dev,test (default 0.7,0.2,0.1)");
  ingest->add_option("--out", in_out);

  // parse
  std::string parse_sentence;
  auto* parse = app.add_subcommand("parse", "print the shallow parse of a sentence");
  parse->add_option("--text", parse_sentence)->required();

  // patterns
  std::string pat_corpus, pat_doc, pat_text;
  auto* patterns = app.add_subcommand("patterns", "print pattern instances of a document");
  patterns->add_option("--corpus", pat_corpus);
  patterns->add_option("--doc", pat_doc);
  patterns->add_option("--text", pat_text);

  // learn
  std::string learn_corpus = "corpus", learn_out = "state";
  bool learn_tune = false;
  auto* learn = app.add_subcommand("learn", "learn iteration-0 patterns from TRAIN");
  learn->add_option("--corpus", learn_corpus);
  learn->add_option("--out", learn_out);
  learn->add_flag("--tune", learn_tune, "grid-search thresholds on DEV");

  // bootstrap
  std::string bs_corpus = "corpus", bs_out = "state";
  int bs_iterations = 4;
  std::uint64_t bs_seed = 1;
  auto* bootstrap = app.add_subcommand("bootstrap", "run the bootstrapping loop");
  bootstrap->add_option("--corpus", bs_corpus);
  bootstrap->add_option("--iterations", bs_iterations);
  bootstrap->add_option("--seed", bs_seed);
  bootstrap->add_option("--out", bs_out);

  // eval
  std::string eval_state = "state", eval_test = "corpus";
  auto* eval = app.add_subcommand("eval", "precision/recall per iteration plus NB baseline");
  eval->add_option("--state", eval_state);
  eval->add_option("--test", eval_test);

  // analyze
  std::string an_state = "state", an_out = "analysis";
  auto* analyze = app.add_subcommand("analyze", "pattern tables, histograms, prepositions");
  analyze->add_option("--state", an_state);
  analyze->add_option("--out", an_out);

  // run
  auto* run = app.add_subcommand("run", "full pipeline from a config file");
  std::string run_input, run_out;
  run->add_option("--input", run_input, "overrides config input");
  run->add_option("--out", run_out, "overrides config out");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) base.apply(parse_config_file(config_path));
    if (app.got_subcommand(ingest))
      return cmd_ingest(in_input, in_format, in_seed, in_ratios, in_out);
    if (app.got_subcommand(parse)) return cmd_parse(parse_sentence, base.lexicon_dir);
    if (app.got_subcommand(patterns))
      return cmd_patterns(pat_corpus, pat_doc, pat_text, base.lexicon_dir);
    if (app.got_subcommand(learn))
      return cmd_learn(learn_corpus, learn_out, learn_tune, base);
    if (app.got_subcommand(bootstrap))
      return cmd_bootstrap(bs_corpus, bs_out, bs_iterations, bs_seed, base);
    if (app.got_subcommand(eval)) return cmd_eval(eval_state, eval_test, base);
    if (app.got_subcommand(analyze)) return cmd_analyze(an_state, an_out, base);
    if (app.got_subcommand(run)) {
      if (!run_input.empty()) base.input = run_input;
      if (!run_out.empty()) base.out = run_out;
      return run_pipeline(base);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

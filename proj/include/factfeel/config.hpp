#pragma once

#include <map>
#include <string>
#include <vector>

#include "factfeel/corpus.hpp"
#include "factfeel/stats.hpp"

namespace factfeel {

// Every tunable has a declared default; a run manifest records the resolved
// values verbatim.
struct RunConfig {
  std::string input;                 // raw corpus file
  std::string format = "jsonl";      // jsonl | csv
  std::string out = "runs/latest";   // artifact directory
  std::string lexicon_dir;           // empty -> built-in lexicon
  std::string form_grouping;         // empty -> built-in grouping

  SplitRatios ratios;
  std::uint64_t split_seed = 1;
  std::uint64_t balance_seed = 1;

  PerClassThresholds thresholds;     // defaults 3/0.70/3 and 3/0.55/3
  bool tune = false;                 // grid-search thresholds on dev
  TuningGrid tuning_grid;
  double tuning_recall_floor = 0.05;

  int iterations = 4;
  // 0:0 means "use the initial training ratio"
  double balance_ratio_fact = 0.0;
  double balance_ratio_feel = 0.0;

  std::vector<double> nb_alpha_grid = {0.1, 0.5, 1.0, 2.0};
  std::size_t analysis_top_k = 20;
  int workers = 0;                   // 0 -> available cores

  // key = value overlay (file first, then CLI flags)
  void apply(const std::map<std::string, std::string>& keys);

  std::string to_json() const;       // resolved config, manifest payload
  std::uint64_t config_hash() const;
};

// Parses a human-editable "key = value" document ('#' comments, blank lines
// ignored; section headers like [bootstrap] prefix the keys that follow).
std::map<std::string, std::string> parse_config_file(const std::string& path);

RunConfig load_config(const std::string& path);

}  // namespace factfeel

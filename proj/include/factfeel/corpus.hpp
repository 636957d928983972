#pragma once

#include <array>
#include <optional>
#include <string>

#include "factfeel/types.hpp"

namespace factfeel {

enum class CorpusFormat { Jsonl, Csv };

struct SplitRatios {
  double train = 0.70;
  double dev = 0.20;
  double test = 0.10;
};

// Reads one Document per record. JSONL keys: id, text, score, label.
// CSV columns: id,text,score,label (header row required).
Corpus load_corpus(const std::string& path, CorpusFormat format);

// score > 1 -> FACT, score < -1 -> FEEL, otherwise no label (the document
// is dropped from the labeled sets but stays available as unannotated data).
std::optional<Label> binarize_score(double score);

// Fills missing labels from scores, then assigns splits: labeled documents
// are partitioned per class at the given ratios, unlabeled documents all go
// to UNANNOTATED. Assignment is a pure function of (seed, ids).
Corpus split_corpus(const Corpus& corpus, const SplitRatios& ratios,
                    std::uint64_t seed);

// Corpus directory round-trip (corpus.jsonl with labels and splits filled).
void save_corpus_dir(const Corpus& corpus, const std::string& dir);
Corpus load_corpus_dir(const std::string& dir);

}  // namespace factfeel

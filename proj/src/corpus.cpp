#include "factfeel/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "factfeel/csv.hpp"
#include "factfeel/hashing.hpp"

namespace factfeel {

namespace {

using nlohmann::json;

Document doc_from_json(const json& j, std::size_t line_no) {
  if (!j.is_object() || !j.contains("id") || !j.contains("text"))
    throw std::runtime_error("malformed record at line " +
                             std::to_string(line_no) +
                             ": id and text are required");
  Document d;
  d.id = j.at("id").get<std::string>();
  d.text = j.at("text").get<std::string>();
  if (j.contains("score") && !j.at("score").is_null()) {
    double s = j.at("score").get<double>();
    if (s < -5.0 || s > 5.0)
      throw std::runtime_error("score out of range [-5,5] at line " +
                               std::to_string(line_no));
    d.score = s;
  }
  if (j.contains("label") && !j.at("label").is_null())
    d.label = label_from_string(j.at("label").get<std::string>());
  if (j.contains("split") && !j.at("split").is_null())
    d.split = split_from_string(j.at("split").get<std::string>());
  if (d.label && d.score) {
    auto expect = binarize_score(*d.score);
    if (expect != d.label)
      throw std::runtime_error("label inconsistent with score at line " +
                               std::to_string(line_no));
  }
  return d;
}

Corpus load_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  std::unordered_set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error("malformed record at line " +
                               std::to_string(line_no) + ": " + e.what());
    }
    Document d = doc_from_json(j, line_no);
    if (!seen.insert(d.id).second)
      throw std::runtime_error("duplicate document id: " + d.id);
    corpus.documents.push_back(std::move(d));
  }
  return corpus;
}

Corpus load_csv(const std::string& path) {
  auto rows = csv::read_file(path);
  if (rows.empty()) return {};
  const auto& header = rows.front();
  auto col = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  };
  int c_id = col("id"), c_text = col("text");
  int c_score = col("score"), c_label = col("label"), c_split = col("split");
  if (c_id < 0 || c_text < 0)
    throw std::runtime_error("CSV header must contain id and text columns");

  Corpus corpus;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::size_t line_no = r + 1;
    auto get = [&](int c) -> std::string {
      return (c >= 0 && c < static_cast<int>(row.size())) ? row[c] : "";
    };
    Document d;
    d.id = get(c_id);
    d.text = get(c_text);
    if (d.id.empty())
      throw std::runtime_error("malformed record at line " +
                               std::to_string(line_no) + ": missing id");
    if (c_text >= static_cast<int>(row.size()))
      throw std::runtime_error("malformed record at line " +
                               std::to_string(line_no) + ": missing text");
    if (std::string s = get(c_score); !s.empty()) {
      double v = std::stod(s);
      if (v < -5.0 || v > 5.0)
        throw std::runtime_error("score out of range [-5,5] at line " +
                                 std::to_string(line_no));
      d.score = v;
    }
    if (std::string s = get(c_label); !s.empty()) d.label = label_from_string(s);
    if (std::string s = get(c_split); !s.empty()) d.split = split_from_string(s);
    if (d.label && d.score && binarize_score(*d.score) != d.label)
      throw std::runtime_error("label inconsistent with score at line " +
                               std::to_string(line_no));
    if (!seen.insert(d.id).second)
      throw std::runtime_error("duplicate document id: " + d.id);
    corpus.documents.push_back(std::move(d));
  }
  return corpus;
}

}  // namespace

Corpus load_corpus(const std::string& path, CorpusFormat format) {
  return format == CorpusFormat::Jsonl ? load_jsonl(path) : load_csv(path);
}

std::optional<Label> binarize_score(double score) {
  if (score < -5.0 || score > 5.0)
    throw std::out_of_range("score out of range [-5,5]");
  if (score > 1.0) return Label::Fact;
  if (score < -1.0) return Label::Feel;
  return std::nullopt;
}

Corpus split_corpus(const Corpus& corpus, const SplitRatios& ratios,
                    std::uint64_t seed) {
  double sum = ratios.train + ratios.dev + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::runtime_error("split ratios must sum to 1.0");

  Corpus out = corpus;
  for (auto& d : out.documents)
    if (!d.label && d.score) d.label = binarize_score(*d.score);

  // Stratified: shuffle each class deterministically, slice by ratios.
  for (Label cls : {Label::Fact, Label::Feel}) {
    std::vector<Document*> members;
    for (auto& d : out.documents)
      if (d.label == cls) members.push_back(&d);
    std::sort(members.begin(), members.end(),
              [&](const Document* a, const Document* b) {
                auto ka = order_key(seed, a->id), kb = order_key(seed, b->id);
                return ka != kb ? ka < kb : a->id < b->id;
              });
    std::size_t n = members.size();
    std::size_t n_train = static_cast<std::size_t>(
        std::llround(ratios.train * static_cast<double>(n)));
    std::size_t n_train_dev = static_cast<std::size_t>(
        std::llround((ratios.train + ratios.dev) * static_cast<double>(n)));
    n_train = std::min(n_train, n);
    n_train_dev = std::min(std::max(n_train_dev, n_train), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < n_train) members[i]->split = Split::Train;
      else if (i < n_train_dev) members[i]->split = Split::Dev;
      else members[i]->split = Split::Test;
    }
  }
  for (auto& d : out.documents)
    if (!d.label) d.split = Split::Unannotated;
  return out;
}

void save_corpus_dir(const Corpus& corpus, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir + "/corpus.jsonl", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write corpus to: " + dir);
  for (const auto& d : corpus.documents) {
    nlohmann::json j;
    j["id"] = d.id;
    j["text"] = d.text;
    if (d.score) j["score"] = *d.score;
    if (d.label) j["label"] = to_string(*d.label);
    if (d.split) j["split"] = to_string(*d.split);
    out << j.dump() << '\n';
  }
}

Corpus load_corpus_dir(const std::string& dir) {
  return load_corpus(dir + "/corpus.jsonl", CorpusFormat::Jsonl);
}

}  // namespace factfeel

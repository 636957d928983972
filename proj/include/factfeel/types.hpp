#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace factfeel {

enum class Label { Fact, Feel };
enum class Split { Train, Dev, Test, Unannotated };

inline const char* to_string(Label l) {
  return l == Label::Fact ? "FACT" : "FEEL";
}

inline const char* to_string(Split s) {
  switch (s) {
    case Split::Train: return "TRAIN";
    case Split::Dev: return "DEV";
    case Split::Test: return "TEST";
    case Split::Unannotated: return "UNANNOTATED";
  }
  return "?";
}

inline Label label_from_string(const std::string& s) {
  if (s == "FACT") return Label::Fact;
  if (s == "FEEL") return Label::Feel;
  throw std::runtime_error("unknown label: " + s);
}

inline Split split_from_string(const std::string& s) {
  if (s == "TRAIN") return Split::Train;
  if (s == "DEV") return Split::Dev;
  if (s == "TEST") return Split::Test;
  if (s == "UNANNOTATED") return Split::Unannotated;
  throw std::runtime_error("unknown split: " + s);
}

// One forum response. Only the response text is kept; quotes are the data
// producer's problem.
struct Document {
  std::string id;
  std::string text;
  std::optional<double> score;   // scalar annotation in [-5, +5]
  std::optional<Label> label;
  std::optional<Split> split;
};

struct ClassRatio {
  std::size_t fact = 0;
  std::size_t feel = 0;
};

struct Corpus {
  std::vector<Document> documents;

  ClassRatio class_ratio() const {
    ClassRatio r;
    for (const auto& d : documents) {
      if (d.label == Label::Fact) ++r.fact;
      else if (d.label == Label::Feel) ++r.feel;
    }
    return r;
  }

  std::vector<const Document*> with_split(Split s) const {
    std::vector<const Document*> out;
    for (const auto& d : documents)
      if (d.split == s) out.push_back(&d);
    return out;
  }

  const Document* find(const std::string& id) const {
    for (const auto& d : documents)
      if (d.id == id) return &d;
    return nullptr;
  }
};

}  // namespace factfeel

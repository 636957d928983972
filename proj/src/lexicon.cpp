#include "factfeel/lexicon.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace factfeel {

namespace {

Pos pos_from_tag(const std::string& tag) {
  if (tag == "NOUN") return Pos::Noun;
  if (tag == "VERB") return Pos::Verb;
  if (tag == "AUX") return Pos::Aux;
  if (tag == "ADJ") return Pos::Adj;
  if (tag == "ADV") return Pos::Adv;
  if (tag == "PREP") return Pos::Prep;
  if (tag == "DET") return Pos::Det;
  if (tag == "PRON") return Pos::Pron;
  if (tag == "CONJ") return Pos::Conj;
  if (tag == "TO") return Pos::To;
  if (tag == "OTHER") return Pos::Other;
  throw std::runtime_error("unknown POS tag in lexicon: " + tag);
}

void parse_closed_class(std::istream& in,
                        std::unordered_map<std::string, Pos>& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("bad lexicon line (expected word<TAB>TAG): " +
                               line);
    out.emplace(line.substr(0, tab), pos_from_tag(line.substr(tab + 1)));
  }
}

void parse_word_list(std::istream& in, std::unordered_set<std::string>& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.insert(line);
  }
}

}  // namespace

const char* to_string(Pos p) {
  switch (p) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Aux: return "AUX";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Prep: return "PREP";
    case Pos::Det: return "DET";
    case Pos::Pron: return "PRON";
    case Pos::Conj: return "CONJ";
    case Pos::To: return "TO";
    case Pos::Other: return "OTHER";
  }
  return "?";
}

const char* to_string(VerbKind k) {
  switch (k) {
    case VerbKind::Active: return "ACTIVE";
    case VerbKind::Passive: return "PASSIVE";
    case VerbKind::Infinitive: return "INFINITIVE";
    case VerbKind::Auxiliary: return "AUXILIARY";
    case VerbKind::ActiveInfinitive: return "ACTIVE_INFINITIVE";
    case VerbKind::PassiveInfinitive: return "PASSIVE_INFINITIVE";
  }
  return "?";
}

void Lexicon::index() {
  for (const char* w : {"my", "your", "his", "her", "its", "our", "their",
                        "whose"})
    possessive_pronouns_.insert(w);
  for (const char* w : {"be", "is", "are", "was", "were", "been", "being",
                        "am", "isn't", "aren't", "wasn't", "weren't"})
    be_forms_.insert(w);
  for (const char* w : {"have", "has", "had", "hasn't", "haven't", "hadn't"})
    have_forms_.insert(w);
  for (const char* w :
       {"can", "could", "will", "would", "shall", "should", "may", "might",
        "must", "cannot", "can't", "won't", "couldn't", "wouldn't",
        "shouldn't", "mustn't", "do", "does", "did", "don't", "doesn't",
        "didn't"})
    modals_.insert(w);
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon instance = [] {
    Lexicon lex;
    std::istringstream cc(lexicon_data::kClosedClass);
    parse_closed_class(cc, lex.closed_);
    std::istringstream vb(lexicon_data::kVerbs);
    parse_word_list(vb, lex.verbs_);
    std::istringstream pp(lexicon_data::kParticiples);
    parse_word_list(pp, lex.participles_);
    lex.index();
    return lex;
  }();
  return instance;
}

Lexicon Lexicon::load(const std::string& dir) {
  Lexicon lex;
  auto open = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    return in;
  };
  auto cc = open(dir + "/closed_class.tsv");
  parse_closed_class(cc, lex.closed_);
  auto vb = open(dir + "/verbs.txt");
  parse_word_list(vb, lex.verbs_);
  auto pp = open(dir + "/participles.txt");
  parse_word_list(pp, lex.participles_);
  lex.index();
  return lex;
}

void Lexicon::dump_builtin(const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const char* content) {
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + dir + "/" + name);
    out << content;
  };
  write("closed_class.tsv", lexicon_data::kClosedClass);
  write("verbs.txt", lexicon_data::kVerbs);
  write("participles.txt", lexicon_data::kParticiples);
}

std::optional<Pos> Lexicon::closed_class(const std::string& word) const {
  auto it = closed_.find(word);
  if (it == closed_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_verb(const std::string& word) const {
  return verbs_.count(word) > 0;
}

bool Lexicon::is_participle(const std::string& word) const {
  if (participles_.count(word)) return true;
  return word.size() > 3 && (word.ends_with("ed") || word.ends_with("en"));
}

bool Lexicon::is_possessive_pronoun(const std::string& word) const {
  return possessive_pronouns_.count(word) > 0;
}

bool Lexicon::is_be_form(const std::string& word) const {
  return be_forms_.count(word) > 0;
}

bool Lexicon::is_have_form(const std::string& word) const {
  return have_forms_.count(word) > 0;
}

bool Lexicon::is_modal(const std::string& word) const {
  return modals_.count(word) > 0;
}

std::string Lexicon::verb_lemma(const std::string& word) const {
  if (is_be_form(word)) return "be";
  if (is_have_form(word)) return "have";
  return word;
}

}  // namespace factfeel

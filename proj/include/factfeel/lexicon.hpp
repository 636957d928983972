#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "factfeel/parser_types.hpp"

namespace factfeel {

// Word lists behind the tagger: a closed-class lexicon (word<TAB>TAG lines),
// a common-verb list, and an irregular past-participle list. A built-in
// default ships in the binary; files with the same formats can override it.
class Lexicon {
 public:
  static const Lexicon& builtin();

  // dir must contain closed_class.tsv, verbs.txt, participles.txt
  static Lexicon load(const std::string& dir);

  // Writes the built-in lists to dir in the loadable formats.
  static void dump_builtin(const std::string& dir);

  std::optional<Pos> closed_class(const std::string& word) const;
  bool is_verb(const std::string& word) const;
  bool is_participle(const std::string& word) const;
  bool is_possessive_pronoun(const std::string& word) const;
  bool is_be_form(const std::string& word) const;
  bool is_have_form(const std::string& word) const;
  bool is_modal(const std::string& word) const;

  // "is"/"was"/... -> "be", "has"/... -> "have", otherwise unchanged.
  std::string verb_lemma(const std::string& word) const;

 private:
  Lexicon() = default;
  void index();

  std::unordered_map<std::string, Pos> closed_;
  std::unordered_set<std::string> verbs_;
  std::unordered_set<std::string> participles_;
  std::unordered_set<std::string> possessive_pronouns_;
  std::unordered_set<std::string> be_forms_;
  std::unordered_set<std::string> have_forms_;
  std::unordered_set<std::string> modals_;
};

namespace lexicon_data {
extern const char* const kClosedClass;
extern const char* const kVerbs;
extern const char* const kParticiples;
}  // namespace lexicon_data

}  // namespace factfeel

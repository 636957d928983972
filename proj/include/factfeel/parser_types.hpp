#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace factfeel {

enum class Pos {
  Noun, Verb, Aux, Adj, Adv, Prep, Det, Pron, Conj, To, Other
};

const char* to_string(Pos p);

struct Token {
  std::string surface;
  std::string normalized;  // case-folded surface
  Pos pos = Pos::Other;
  int position = 0;        // sentence-relative index
};

// Half-open token index range [begin, end).
struct TokenSpan {
  int begin = 0;
  int end = 0;
  bool contains(int i) const { return i >= begin && i < end; }
  int size() const { return end - begin; }
  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

enum class VerbKind {
  Active, Passive, Infinitive, Auxiliary, ActiveInfinitive, PassiveInfinitive
};

const char* to_string(VerbKind k);

struct VerbGroup {
  int head = 0;        // token index of the content verb
  VerbKind kind = VerbKind::Active;
  TokenSpan span;
  // For the *Infinitive kinds, index of the infinitive's base verb.
  std::optional<int> infinitive_verb;
};

struct NounPhrase {
  TokenSpan span;
  int head = 0;  // token index of the head noun (or pronoun)
};

struct PrepAttachment {
  bool attachee_is_np = true;
  int attachee = 0;   // index into noun_phrases or verb_groups
  int prep_token = 0;
  int object_np = 0;  // index into noun_phrases
};

struct Possessive {
  bool possessor_is_pronoun = true;
  TokenSpan possessor;  // pronoun token, or the possessor NP span (before 's)
  int possessed_np = 0; // index into noun_phrases
};

struct ParsedSentence {
  std::vector<Token> tokens;
  std::vector<NounPhrase> noun_phrases;
  std::vector<VerbGroup> verb_groups;
  std::map<int, int> subject_of;  // verb group index -> NP index
  std::map<int, int> dobj_of;     // verb group index -> NP index
  // Predicate adjective after an auxiliary verb group, when present.
  std::map<int, int> pred_adj_of; // verb group index -> token index
  std::vector<PrepAttachment> prep_attachments;
  std::vector<Possessive> possessives;
};

}  // namespace factfeel

#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "factfeel/parser.hpp"

namespace factfeel {

// The 17 syntactic template forms plus the 7 tag n-gram forms.
enum class TemplateForm {
  SubjPassVP,
  SubjActVP,
  SubjActVPDobj,
  SubjActInfVP,
  SubjPassInfVP,
  SubjAuxVPDobj,
  SubjAuxVPAdj,
  ActVPDobj,
  InfVPDobj,
  ActInfVPDobj,
  PassInfVPDobj,
  SubjAuxVPDobjRhs,
  NPPrepNP,
  ActVPPrepNP,
  PassVPPrepNP,
  InfVPPrepNP,
  PossessiveNP,
  AdjNoun,
  AdjConjAdj,
  AdvAdv,
  AdvAdvAdv,
  AdjAdj,
  AdvAdj,
  AdvAdvAdj,
};

inline constexpr std::size_t kTemplateFormCount = 24;
inline constexpr std::size_t kSyntacticFormCount = 17;
inline constexpr std::size_t kNgramFormCount = 7;

const char* form_name(TemplateForm f);
TemplateForm form_from_name(const std::string& name);
bool is_ngram_form(TemplateForm f);

// A template form instantiated with its lexical anchors. The extracted open
// slot (<subj>/<dobj>/<np>) carries no lexical content and is not stored.
struct PatternInstance {
  TemplateForm form;
  std::vector<std::string> anchors;  // normalized, ordered

  // Canonical uppercase rendering, e.g. "RESULT OF".
  std::string display() const;

  friend auto operator<=>(const PatternInstance&,
                          const PatternInstance&) = default;
};

// Reconstructs an instance from its CSV representation.
PatternInstance pattern_from_csv(const std::string& form,
                                 const std::string& display);

// Emits one instance per (template, match site) whose syntactic
// preconditions hold, ordered by match position.
std::vector<PatternInstance> instantiate(const ParsedSentence& parsed);

// Union over all sentences of a document's text.
std::vector<PatternInstance> instantiate_document(const std::string& text,
                                                  const Lexicon& lex);

}  // namespace factfeel

#pragma once

#include <string>
#include <vector>

#include "factfeel/lexicon.hpp"
#include "factfeel/parser_types.hpp"

namespace factfeel {

// Deterministic rule-based shallow parsing: tokenize, tag, chunk, and assign
// the grammatical roles the pattern templates consume. All functions are pure.

// Splits text into sentences of raw tokens (pos not yet assigned).
// Sentence boundaries sit at terminal punctuation followed by whitespace and
// a capital letter or digit.
std::vector<std::vector<Token>> tokenize(const std::string& text);

// Fills pos for each token: closed-class lookup, then suffix rules, then
// contextual repair, then default NOUN.
void pos_tag(std::vector<Token>& tokens, const Lexicon& lex);

// Builds NPs, verb groups, and role maps over a fully tagged sentence.
ParsedSentence chunk(std::vector<Token> tokens, const Lexicon& lex);

// tokenize + pos_tag + chunk for every sentence.
std::vector<ParsedSentence> parse_text(const std::string& text,
                                       const Lexicon& lex);

// Indented human-readable rendering (debug CLI).
std::string describe(const ParsedSentence& parsed);

}  // namespace factfeel

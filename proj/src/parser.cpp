#include "factfeel/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace factfeel {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '-';
}

std::string casefold(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_terminal_punct(char c) { return c == '.' || c == '!' || c == '?'; }

bool has_alpha(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalpha(c);
  });
}

// "it's" -> {"it", "is"} and friends; other 's splits into a separate
// possessive-marker token.
const std::pair<const char*, const char*> kContractions[] = {
    {"it's", "it"},   {"that's", "that"},   {"there's", "there"},
    {"he's", "he"},   {"she's", "she"},     {"what's", "what"},
    {"who's", "who"}, {"here's", "here"},
};

Token make_token(std::string surface) {
  Token t;
  t.normalized = casefold(surface);
  t.surface = std::move(surface);
  return t;
}

void push_word(std::vector<Token>& out, const std::string& word) {
  std::string folded = casefold(word);
  for (const auto& [contr, base] : kContractions) {
    if (folded == contr) {
      out.push_back(make_token(base));
      out.push_back(make_token("is"));
      return;
    }
  }
  if (folded.size() > 2 && folded.ends_with("'s")) {
    out.push_back(make_token(word.substr(0, word.size() - 2)));
    out.push_back(make_token("'s"));
    return;
  }
  if (folded.size() > 1 && folded.ends_with('\'')) {
    out.push_back(make_token(word.substr(0, word.size() - 1)));
    out.push_back(make_token("'s"));
    return;
  }
  out.push_back(make_token(word));
}

}  // namespace

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> sentences;
  std::vector<Token> current;

  auto flush_sentence = [&] {
    if (!current.empty()) {
      for (std::size_t i = 0; i < current.size(); ++i)
        current[i].position = static_cast<int>(i);
      sentences.push_back(std::move(current));
      current.clear();
    }
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_word_char(c) && c != '\'') {
      std::size_t j = i;
      while (j < n && is_word_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      // trailing apostrophes/hyphens belong to punctuation, not the word
      while (!word.empty() && (word.back() == '-')) word.pop_back();
      push_word(current, word);
      i = j;
      continue;
    }
    // a free-standing possessive marker ("the writer 's argument")
    if (c == '\'' && i + 1 < n &&
        std::tolower(static_cast<unsigned char>(text[i + 1])) == 's' &&
        (i + 2 == n || !is_word_char(text[i + 2]))) {
      current.push_back(make_token(text.substr(i, 2)));
      i += 2;
      continue;
    }
    // punctuation (or a stray apostrophe)
    current.push_back(make_token(std::string(1, c)));
    bool terminal = is_terminal_punct(c);
    ++i;
    // collapse runs of terminal punctuation ("...", "?!")
    while (terminal && i < n && is_terminal_punct(text[i])) ++i;
    if (terminal) {
      std::size_t k = i;
      while (k < n && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      bool boundary =
          k == n || (k > i && (std::isupper(static_cast<unsigned char>(text[k])) ||
                               std::isdigit(static_cast<unsigned char>(text[k]))));
      if (boundary) flush_sentence();
    }
  }
  flush_sentence();
  return sentences;
}

void pos_tag(std::vector<Token>& tokens, const Lexicon& lex) {
  const int n = static_cast<int>(tokens.size());

  auto prev_non_adv = [&](int i) -> const Token* {
    for (int j = i - 1; j >= 0; --j)
      if (tokens[j].pos != Pos::Adv) return &tokens[j];
    return nullptr;
  };

  for (int i = 0; i < n; ++i) {
    Token& t = tokens[i];
    const std::string& w = t.normalized;

    if (w == "'s") {  // possessive marker, never part of an NP
      t.pos = Pos::Other;
      continue;
    }
    if (!has_alpha(w)) {
      t.pos = std::isdigit(static_cast<unsigned char>(w.empty() ? ' ' : w[0]))
                  ? Pos::Noun
                  : Pos::Other;
      continue;
    }
    if (auto cc = lex.closed_class(w)) {
      t.pos = *cc;
      continue;
    }
    if (lex.is_verb(w)) {
      t.pos = Pos::Verb;
      continue;
    }

    const Token* prev = prev_non_adv(i);
    auto prev_is = [&](std::initializer_list<Pos> set) {
      if (!prev) return false;
      // possessive pronouns sit in the determiner slot
      if (prev->pos == Pos::Pron && lex.is_possessive_pronoun(prev->normalized))
        return false;
      for (Pos p : set)
        if (prev->pos == p) return true;
      return false;
    };

    // suffix rules
    if (w.size() > 3 && w.ends_with("ly")) {
      t.pos = Pos::Adv;
    } else if (w.size() > 4 && w.ends_with("ing")) {
      t.pos = prev_is({Pos::Aux, Pos::To, Pos::Pron}) ? Pos::Verb : Pos::Noun;
    } else if (w.size() > 3 && (w.ends_with("ed") || w.ends_with("en"))) {
      t.pos = prev_is({Pos::Aux, Pos::To, Pos::Pron, Pos::Noun}) ? Pos::Verb
                                                                 : Pos::Adj;
    } else if (w.size() > 4 &&
               (w.ends_with("ous") || w.ends_with("ful") || w.ends_with("ible") ||
                w.ends_with("able") || w.ends_with("ive") || w.ends_with("ic") ||
                w.ends_with("al") || w.ends_with("ish"))) {
      t.pos = Pos::Adj;
    } else if (prev_is({Pos::To}) ||
               (prev_is({Pos::Aux}) && lex.is_modal(prev->normalized))) {
      // contextual repair: verb slot after "to" or a modal. A bare word
      // after be/have is more often a predicate noun ("is evidence").
      t.pos = Pos::Verb;
    } else {
      t.pos = Pos::Noun;
    }
  }

  // "to" heading a noun phrase is a preposition ("responded to the claim")
  for (int i = 0; i + 1 < n; ++i) {
    if (tokens[i].pos == Pos::To &&
        (tokens[i + 1].pos == Pos::Det ||
         (tokens[i + 1].pos == Pos::Pron &&
          lex.is_possessive_pronoun(tokens[i + 1].normalized))))
      tokens[i].pos = Pos::Prep;
  }
}

namespace {

struct GroupScan {
  bool found = false;
  VerbGroup group;
  int next = 0;
};

// Consumes a verb group starting at i, if one is present.
GroupScan scan_verb_group(const std::vector<Token>& tokens, int i,
                          const Lexicon& lex) {
  const int n = static_cast<int>(tokens.size());
  auto next_non_adv = [&](int j) {
    ++j;
    while (j < n && tokens[j].pos == Pos::Adv) ++j;
    return j;
  };
  auto make = [&](int head, VerbKind kind, int begin, int end,
                  std::optional<int> inf = std::nullopt) {
    GroupScan out;
    out.found = true;
    out.group.head = head;
    out.group.kind = kind;
    out.group.span = {begin, end};
    out.group.infinitive_verb = inf;
    out.next = end;
    return out;
  };
  // Extends "... to <verb>" after a content verb at position k.
  auto try_infinitive_tail = [&](int k) -> std::optional<int> {
    int j = next_non_adv(k);
    if (j < n && tokens[j].pos == Pos::To) {
      int v = next_non_adv(j);
      if (v < n && tokens[v].pos == Pos::Verb) return v;
    }
    return std::nullopt;
  };

  const Token& t = tokens[i];

  if (t.pos == Pos::To) {
    int v = next_non_adv(i);
    if (v < n && tokens[v].pos == Pos::Verb)
      return make(v, VerbKind::Infinitive, i, v + 1, v);
    return {};
  }

  if (t.pos == Pos::Aux) {
    int aux = i;
    if (lex.is_modal(t.normalized)) {
      int j = next_non_adv(i);
      if (j >= n) return {};
      if (tokens[j].pos == Pos::Aux &&
          (lex.is_be_form(tokens[j].normalized) ||
           lex.is_have_form(tokens[j].normalized))) {
        aux = j;
      } else if (tokens[j].pos == Pos::Verb) {
        if (auto inf = try_infinitive_tail(j))
          return make(j, VerbKind::ActiveInfinitive, i, *inf + 1, inf);
        return make(j, VerbKind::Active, i, j + 1);
      } else {
        return {};
      }
    }
    const std::string& auxw = tokens[aux].normalized;
    bool be = lex.is_be_form(auxw);
    bool have = lex.is_have_form(auxw);
    if (!be && !have) return {};
    int k = next_non_adv(aux);
    if (k < n && tokens[k].pos == Pos::Verb) {
      const std::string& vw = tokens[k].normalized;
      if (be && lex.is_participle(vw)) {
        if (auto inf = try_infinitive_tail(k))
          return make(k, VerbKind::PassiveInfinitive, i, *inf + 1, inf);
        return make(k, VerbKind::Passive, i, k + 1);
      }
      if (have && lex.is_participle(vw)) {
        if (auto inf = try_infinitive_tail(k))
          return make(k, VerbKind::ActiveInfinitive, i, *inf + 1, inf);
        return make(k, VerbKind::Active, i, k + 1);
      }
      if (be && vw.ends_with("ing")) {
        if (auto inf = try_infinitive_tail(k))
          return make(k, VerbKind::ActiveInfinitive, i, *inf + 1, inf);
        return make(k, VerbKind::Active, i, k + 1);
      }
    }
    return make(aux, VerbKind::Auxiliary, i, aux + 1);
  }

  if (t.pos == Pos::Verb) {
    if (auto inf = try_infinitive_tail(i))
      return make(i, VerbKind::ActiveInfinitive, i, *inf + 1, inf);
    return make(i, VerbKind::Active, i, i + 1);
  }

  return {};
}

}  // namespace

ParsedSentence chunk(std::vector<Token> tokens, const Lexicon& lex) {
  ParsedSentence s;
  s.tokens = std::move(tokens);
  const int n = static_cast<int>(s.tokens.size());
  auto pos_at = [&](int i) { return s.tokens[i].pos; };

  // verb groups
  for (int i = 0; i < n;) {
    auto scan = scan_verb_group(s.tokens, i, lex);
    if (scan.found) {
      s.verb_groups.push_back(scan.group);
      i = scan.next;
    } else {
      ++i;
    }
  }
  auto in_group = [&](int i) {
    for (const auto& g : s.verb_groups)
      if (g.span.contains(i)) return true;
    return false;
  };

  // noun phrases: (DET | possessive PRON)? ADJ* NOUN+, or a bare pronoun
  for (int i = 0; i < n;) {
    if (in_group(i)) {
      ++i;
      continue;
    }
    Pos p = pos_at(i);
    if (p == Pos::Pron && !lex.is_possessive_pronoun(s.tokens[i].normalized)) {
      s.noun_phrases.push_back({{i, i + 1}, i});
      ++i;
      continue;
    }
    bool starter = p == Pos::Det || p == Pos::Adj || p == Pos::Noun ||
                   (p == Pos::Pron &&
                    lex.is_possessive_pronoun(s.tokens[i].normalized));
    if (!starter) {
      ++i;
      continue;
    }
    int j = i;
    if (pos_at(j) == Pos::Det || pos_at(j) == Pos::Pron) ++j;
    while (j < n && !in_group(j) && pos_at(j) == Pos::Adj) ++j;
    int first_noun = j;
    while (j < n && !in_group(j) && pos_at(j) == Pos::Noun) ++j;
    if (j > first_noun) {
      s.noun_phrases.push_back({{i, j}, j - 1});
      i = j;
    } else {
      ++i;
    }
  }

  auto np_starting_at = [&](int pos) -> int {
    for (std::size_t k = 0; k < s.noun_phrases.size(); ++k)
      if (s.noun_phrases[k].span.begin == pos) return static_cast<int>(k);
    return -1;
  };
  auto np_ending_at = [&](int pos) -> int {
    for (std::size_t k = 0; k < s.noun_phrases.size(); ++k)
      if (s.noun_phrases[k].span.end == pos) return static_cast<int>(k);
    return -1;
  };

  // subjects: nearest preceding NP not inside a prepositional phrase
  for (std::size_t v = 0; v < s.verb_groups.size(); ++v) {
    const auto& g = s.verb_groups[v];
    int best = -1;
    for (std::size_t k = 0; k < s.noun_phrases.size(); ++k) {
      const auto& np = s.noun_phrases[k];
      if (np.span.end > g.span.begin) continue;
      int before = np.span.begin - 1;
      if (before >= 0 && pos_at(before) == Pos::Prep) continue;  // PP object
      if (best < 0 || np.span.end > s.noun_phrases[best].span.end)
        best = static_cast<int>(k);
    }
    if (best >= 0) s.subject_of[static_cast<int>(v)] = best;
  }

  // direct objects and predicate adjectives
  for (std::size_t v = 0; v < s.verb_groups.size(); ++v) {
    const auto& g = s.verb_groups[v];
    if (g.kind == VerbKind::Passive) continue;
    int j = g.span.end;
    while (j < n && pos_at(j) == Pos::Adv) ++j;
    if (j >= n) continue;
    if (int np = np_starting_at(j); np >= 0)
      s.dobj_of[static_cast<int>(v)] = np;
    if (g.kind == VerbKind::Auxiliary && pos_at(j) == Pos::Adj)
      s.pred_adj_of[static_cast<int>(v)] = j;
  }

  // prepositional attachments
  for (int p = 0; p < n; ++p) {
    if (pos_at(p) != Pos::Prep) continue;
    int obj = np_starting_at(p + 1);
    if (obj < 0) continue;
    if (int np = np_ending_at(p); np >= 0) {
      s.prep_attachments.push_back({true, np, p, obj});
      continue;
    }
    for (std::size_t v = 0; v < s.verb_groups.size(); ++v) {
      if (s.verb_groups[v].span.end == p) {
        s.prep_attachments.push_back({false, static_cast<int>(v), p, obj});
        break;
      }
    }
  }

  // possessives: possessive pronoun inside an NP, or NP + 's + NP
  for (std::size_t k = 0; k < s.noun_phrases.size(); ++k) {
    const auto& np = s.noun_phrases[k];
    int first = np.span.begin;
    if (pos_at(first) == Pos::Pron &&
        lex.is_possessive_pronoun(s.tokens[first].normalized) &&
        np.span.size() > 1) {
      s.possessives.push_back({true, {first, first + 1}, static_cast<int>(k)});
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (s.tokens[i].normalized != "'s") continue;
    int possessor = np_ending_at(i);
    int possessed = np_starting_at(i + 1);
    if (possessor >= 0 && possessed >= 0)
      s.possessives.push_back(
          {false, s.noun_phrases[possessor].span, possessed});
  }

  return s;
}

std::vector<ParsedSentence> parse_text(const std::string& text,
                                       const Lexicon& lex) {
  std::vector<ParsedSentence> out;
  for (auto& sentence : tokenize(text)) {
    pos_tag(sentence, lex);
    out.push_back(chunk(std::move(sentence), lex));
  }
  return out;
}

std::string describe(const ParsedSentence& s) {
  std::ostringstream out;
  out << "tokens:\n";
  for (const auto& t : s.tokens)
    out << "  " << t.position << "\t" << t.surface << "\t" << to_string(t.pos)
        << "\n";
  auto span_text = [&](TokenSpan sp) {
    std::string txt;
    for (int i = sp.begin; i < sp.end; ++i) {
      if (!txt.empty()) txt += ' ';
      txt += s.tokens[i].surface;
    }
    return txt;
  };
  out << "noun_phrases:\n";
  for (const auto& np : s.noun_phrases)
    out << "  [" << np.span.begin << "," << np.span.end << ") \""
        << span_text(np.span) << "\" head=" << s.tokens[np.head].surface
        << "\n";
  out << "verb_groups:\n";
  for (std::size_t v = 0; v < s.verb_groups.size(); ++v) {
    const auto& g = s.verb_groups[v];
    out << "  [" << g.span.begin << "," << g.span.end << ") \""
        << span_text(g.span) << "\" kind=" << to_string(g.kind)
        << " head=" << s.tokens[g.head].surface;
    if (auto it = s.subject_of.find(static_cast<int>(v));
        it != s.subject_of.end())
      out << " subj=\"" << span_text(s.noun_phrases[it->second].span) << "\"";
    if (auto it = s.dobj_of.find(static_cast<int>(v)); it != s.dobj_of.end())
      out << " dobj=\"" << span_text(s.noun_phrases[it->second].span) << "\"";
    if (auto it = s.pred_adj_of.find(static_cast<int>(v));
        it != s.pred_adj_of.end())
      out << " pred_adj=" << s.tokens[it->second].surface;
    out << "\n";
  }
  out << "prep_attachments:\n";
  for (const auto& pa : s.prep_attachments) {
    out << "  ";
    if (pa.attachee_is_np)
      out << "\"" << span_text(s.noun_phrases[pa.attachee].span) << "\"";
    else
      out << "\"" << span_text(s.verb_groups[pa.attachee].span) << "\"";
    out << " " << s.tokens[pa.prep_token].surface << " \""
        << span_text(s.noun_phrases[pa.object_np].span) << "\"\n";
  }
  out << "possessives:\n";
  for (const auto& ps : s.possessives)
    out << "  \"" << span_text(ps.possessor) << "\" -> \""
        << span_text(s.noun_phrases[ps.possessed_np].span) << "\"\n";
  return out.str();
}

}  // namespace factfeel

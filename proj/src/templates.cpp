#include "factfeel/templates.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace factfeel {

namespace {

constexpr const char* kFormNames[kTemplateFormCount] = {
    "SubjPassVP",     "SubjActVP",      "SubjActVPDobj", "SubjActInfVP",
    "SubjPassInfVP",  "SubjAuxVPDobj",  "SubjAuxVPAdj",  "ActVPDobj",
    "InfVPDobj",      "ActInfVPDobj",   "PassInfVPDobj", "SubjAuxVPDobj_rhs",
    "NPPrepNP",       "ActVPPrepNP",    "PassVPPrepNP",  "InfVPPrepNP",
    "PossessiveNP",   "AdjNoun",        "AdjConjAdj",    "AdvAdv",
    "AdvAdvAdv",      "AdjAdj",         "AdvAdj",        "AdvAdvAdj",
};

// Auxiliary head words collapse to their lemma so that "is evidence" and
// "was evidence" form one pattern.
std::string aux_lemma(const std::string& w) {
  static const std::map<std::string, std::string> lemmas = {
      {"is", "be"},       {"are", "be"},     {"was", "be"},
      {"were", "be"},     {"been", "be"},    {"being", "be"},
      {"am", "be"},       {"be", "be"},      {"isn't", "be"},
      {"aren't", "be"},   {"wasn't", "be"},  {"weren't", "be"},
      {"has", "have"},    {"have", "have"},  {"had", "have"},
      {"hasn't", "have"}, {"haven't", "have"}, {"hadn't", "have"},
  };
  auto it = lemmas.find(w);
  return it == lemmas.end() ? w : it->second;
}

}  // namespace

const char* form_name(TemplateForm f) {
  return kFormNames[static_cast<std::size_t>(f)];
}

TemplateForm form_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kTemplateFormCount; ++i)
    if (name == kFormNames[i]) return static_cast<TemplateForm>(i);
  throw std::runtime_error("unknown template form: " + name);
}

bool is_ngram_form(TemplateForm f) {
  return static_cast<std::size_t>(f) >= kSyntacticFormCount;
}

std::string PatternInstance::display() const {
  std::string out;
  for (const auto& a : anchors) {
    if (!out.empty()) out += ' ';
    for (char c : a)
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

PatternInstance pattern_from_csv(const std::string& form,
                                 const std::string& display) {
  PatternInstance p;
  p.form = form_from_name(form);
  std::istringstream in(display);
  std::string word;
  while (in >> word) {
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    p.anchors.push_back(word);
  }
  return p;
}

std::vector<PatternInstance> instantiate(const ParsedSentence& s) {
  struct Match {
    int position;
    PatternInstance instance;
  };
  std::vector<Match> matches;
  auto emit = [&](int position, TemplateForm form,
                  std::vector<std::string> anchors) {
    matches.push_back({position, {form, std::move(anchors)}});
  };

  auto word = [&](int i) { return s.tokens[i].normalized; };
  auto np_head = [&](int np) { return word(s.noun_phrases[np].head); };

  for (std::size_t v = 0; v < s.verb_groups.size(); ++v) {
    const auto& g = s.verb_groups[v];
    const int vi = static_cast<int>(v);
    const int at = g.span.begin;
    auto subj = s.subject_of.find(vi);
    auto dobj = s.dobj_of.find(vi);
    auto pred = s.pred_adj_of.find(vi);
    const bool has_subj = subj != s.subject_of.end();
    const bool has_dobj = dobj != s.dobj_of.end();
    const std::string head = word(g.head);

    switch (g.kind) {
      case VerbKind::Passive:
        if (has_subj) emit(at, TemplateForm::SubjPassVP, {head});
        break;
      case VerbKind::Active:
        if (has_subj) emit(at, TemplateForm::SubjActVP, {head});
        if (has_subj && has_dobj)
          emit(at, TemplateForm::SubjActVPDobj, {head, np_head(dobj->second)});
        if (has_dobj) emit(at, TemplateForm::ActVPDobj, {head});
        break;
      case VerbKind::ActiveInfinitive: {
        std::string inf = word(*g.infinitive_verb);
        if (has_subj)
          emit(at, TemplateForm::SubjActInfVP, {head, "to", inf});
        if (has_dobj)
          emit(at, TemplateForm::ActInfVPDobj, {head, "to", inf});
        break;
      }
      case VerbKind::PassiveInfinitive: {
        std::string inf = word(*g.infinitive_verb);
        if (has_subj)
          emit(at, TemplateForm::SubjPassInfVP, {head, "to", inf});
        if (has_dobj)
          emit(at, TemplateForm::PassInfVPDobj, {head, "to", inf});
        break;
      }
      case VerbKind::Infinitive:
        if (has_dobj) emit(at, TemplateForm::InfVPDobj, {"to", head});
        break;
      case VerbKind::Auxiliary: {
        std::string lemma = aux_lemma(head);
        if (has_subj && has_dobj) {
          emit(at, TemplateForm::SubjAuxVPDobj, {lemma, np_head(dobj->second)});
          emit(at, TemplateForm::SubjAuxVPDobjRhs,
               {np_head(subj->second), lemma});
        }
        if (has_subj && pred != s.pred_adj_of.end())
          emit(at, TemplateForm::SubjAuxVPAdj, {lemma, word(pred->second)});
        break;
      }
    }
  }

  for (const auto& pa : s.prep_attachments) {
    const std::string prep = word(pa.prep_token);
    if (pa.attachee_is_np) {
      emit(s.noun_phrases[pa.attachee].span.begin, TemplateForm::NPPrepNP,
           {np_head(pa.attachee), prep});
    } else {
      const auto& g = s.verb_groups[pa.attachee];
      switch (g.kind) {
        case VerbKind::Active:
          emit(g.span.begin, TemplateForm::ActVPPrepNP, {word(g.head), prep});
          break;
        case VerbKind::Passive:
          emit(g.span.begin, TemplateForm::PassVPPrepNP, {word(g.head), prep});
          break;
        case VerbKind::Infinitive:
          emit(g.span.begin, TemplateForm::InfVPPrepNP,
               {"to", word(g.head), prep});
          break;
        default:
          break;
      }
    }
  }

  for (const auto& ps : s.possessives)
    emit(ps.possessor.begin, TemplateForm::PossessiveNP,
         {np_head(ps.possessed_np)});

  // tag n-grams, irrespective of chunk boundaries
  const int n = static_cast<int>(s.tokens.size());
  auto tag = [&](int i) { return s.tokens[i].pos; };
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) {
      if (tag(i) == Pos::Adj && tag(i + 1) == Pos::Noun)
        emit(i, TemplateForm::AdjNoun, {word(i), word(i + 1)});
      if (tag(i) == Pos::Adj && tag(i + 1) == Pos::Adj)
        emit(i, TemplateForm::AdjAdj, {word(i), word(i + 1)});
      if (tag(i) == Pos::Adv && tag(i + 1) == Pos::Adv)
        emit(i, TemplateForm::AdvAdv, {word(i), word(i + 1)});
      if (tag(i) == Pos::Adv && tag(i + 1) == Pos::Adj)
        emit(i, TemplateForm::AdvAdj, {word(i), word(i + 1)});
    }
    if (i + 2 < n) {
      if (tag(i) == Pos::Adj && tag(i + 1) == Pos::Conj &&
          tag(i + 2) == Pos::Adj)
        emit(i, TemplateForm::AdjConjAdj, {word(i), word(i + 1), word(i + 2)});
      if (tag(i) == Pos::Adv && tag(i + 1) == Pos::Adv &&
          tag(i + 2) == Pos::Adv)
        emit(i, TemplateForm::AdvAdvAdv, {word(i), word(i + 1), word(i + 2)});
      if (tag(i) == Pos::Adv && tag(i + 1) == Pos::Adv &&
          tag(i + 2) == Pos::Adj)
        emit(i, TemplateForm::AdvAdvAdj, {word(i), word(i + 1), word(i + 2)});
    }
  }

  std::stable_sort(matches.begin(), matches.end(),
                   [](const Match& a, const Match& b) {
                     if (a.position != b.position)
                       return a.position < b.position;
                     return a.instance.form < b.instance.form;
                   });
  std::vector<PatternInstance> out;
  out.reserve(matches.size());
  for (auto& m : matches) out.push_back(std::move(m.instance));
  return out;
}

std::vector<PatternInstance> instantiate_document(const std::string& text,
                                                  const Lexicon& lex) {
  std::vector<PatternInstance> out;
  for (const auto& parsed : parse_text(text, lex)) {
    auto instances = instantiate(parsed);
    out.insert(out.end(), std::make_move_iterator(instances.begin()),
               std::make_move_iterator(instances.end()));
  }
  return out;
}

}  // namespace factfeel

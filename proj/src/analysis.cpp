#include "factfeel/analysis.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "factfeel/csv.hpp"

namespace factfeel {

std::vector<TopPatternRow> top_patterns(const PatternSet& set, std::size_t k) {
  std::vector<TopPatternRow> rows;
  for (const auto& sp : set.patterns) {
    TopPatternRow row;
    row.probability = sp.counts.p(set.cls);
    row.frequency = sp.counts.freq();
    row.form = sp.pattern.form;
    row.display = sp.pattern.display();
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const TopPatternRow& a, const TopPatternRow& b) {
              if (a.probability != b.probability)
                return a.probability > b.probability;
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              return a.display < b.display;
            });
  if (rows.size() > k) rows.resize(k);
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].rank = static_cast<int>(i + 1);
  return rows;
}

namespace {

constexpr const char* kDefaultGrouping = R"(
# Histogram grouping: comparable syntactic forms share an axis label.
NP Prep: NPPrepNP
ActVP: SubjActVP SubjActVPDobj ActVPDobj
PassVP: SubjPassVP
InfVP: InfVPDobj SubjActInfVP ActInfVPDobj SubjPassInfVP PassInfVPDobj
VP Prep: ActVPPrepNP PassVPPrepNP InfVPPrepNP
AuxVP: SubjAuxVPDobj SubjAuxVPAdj SubjAuxVPDobj_rhs
Possessive: PossessiveNP
Adj Noun: AdjNoun
Adj Adj: AdjAdj AdjConjAdj
Adv Adj: AdvAdj AdvAdvAdj
Adv Adv: AdvAdv AdvAdvAdv
)";

}  // namespace

FormGrouping FormGrouping::defaults() {
  std::istringstream in(kDefaultGrouping);
  FormGrouping g;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string group = line.substr(0, colon);
    std::istringstream forms(line.substr(colon + 1));
    std::string form;
    bool any = false;
    while (forms >> form) {
      g.by_form_[form] = group;
      any = true;
    }
    if (any) g.order_.push_back(group);
  }
  return g;
}

FormGrouping FormGrouping::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open form grouping file: " + path);
  FormGrouping g;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("bad grouping line (want 'Group: Forms...'): " +
                               line);
    std::string group = line.substr(0, colon);
    std::istringstream forms(line.substr(colon + 1));
    std::string form;
    bool any = false;
    while (forms >> form) {
      form_from_name(form);  // validate
      g.by_form_[form] = group;
      any = true;
    }
    if (any) g.order_.push_back(group);
  }
  // forms left out of the file keep their own name as group
  for (std::size_t i = 0; i < kTemplateFormCount; ++i) {
    std::string name = form_name(static_cast<TemplateForm>(i));
    if (!g.by_form_.count(name)) {
      g.by_form_[name] = name;
      g.order_.push_back(name);
    }
  }
  return g;
}

const std::string& FormGrouping::group_of(TemplateForm f) const {
  static const std::string fallback = "Other";
  auto it = by_form_.find(form_name(f));
  return it == by_form_.end() ? fallback : it->second;
}

std::string FormGrouping::describe() const {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [form, group] : by_form_) groups[group].push_back(form);
  std::ostringstream out;
  for (const auto& name : order_) {
    auto it = groups.find(name);
    if (it == groups.end()) continue;
    out << name << ":";
    auto forms = it->second;
    std::sort(forms.begin(), forms.end());
    for (const auto& f : forms) out << ' ' << f;
    out << '\n';
  }
  return out.str();
}

FormHistogram form_histogram(const PatternSet& fact_set,
                             const PatternSet& feel_set,
                             const FormGrouping& grouping,
                             const PatternTable* occurrence) {
  FormHistogram hist;
  auto tally = [&](const PatternSet& set, const std::string& cls) {
    for (const auto& sp : set.patterns) {
      std::uint64_t instances = sp.counts.freq();
      if (occurrence) {
        auto it = occurrence->find(sp.pattern);
        instances = it == occurrence->end() ? 0 : it->second.freq();
      }
      const std::string& group = grouping.group_of(sp.pattern.form);
      for (const std::string& key : {cls, std::string("ALL")}) {
        auto& cell = hist.cells[key][group];
        cell.unique_count += 1;
        cell.instance_count += instances;
      }
    }
  };
  tally(fact_set, "FACT");
  tally(feel_set, "FEEL");

  for (auto& [cls, groups] : hist.cells) {
    double total_unique = 0, total_instances = 0;
    for (const auto& [g, cell] : groups) {
      total_unique += static_cast<double>(cell.unique_count);
      total_instances += static_cast<double>(cell.instance_count);
    }
    for (auto& [g, cell] : groups) {
      if (total_unique > 0)
        cell.unique_share = 100.0 * cell.unique_count / total_unique;
      if (total_instances > 0)
        cell.instance_share = 100.0 * cell.instance_count / total_instances;
    }
  }
  return hist;
}

PrepDistribution prep_distribution(const PatternSet& fact_set,
                                   const PatternSet& feel_set) {
  PrepDistribution dist;
  auto compute = [](const PatternSet& set) {
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& sp : set.patterns) {
      if (sp.pattern.form != TemplateForm::NPPrepNP) continue;
      // anchors are (head noun, preposition)
      counts[sp.pattern.anchors.back()]++;
      ++total;
    }
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [prep, c] : counts)
      out.emplace_back(prep, 100.0 * static_cast<double>(c) /
                                 static_cast<double>(total));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    return out;
  };
  dist.fact = compute(fact_set);
  dist.feel = compute(feel_set);
  return dist;
}

namespace {

std::string fmt(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string text_bar(double percent, double scale = 0.5) {
  std::string bar;
  int n = static_cast<int>(percent * scale + 0.5);
  for (int i = 0; i < n; ++i) bar += '#';
  return bar;
}

void write_top_csv(const std::vector<TopPatternRow>& rows,
                   const std::string& path) {
  csv::Writer out(path);
  out.row({"rank", "probability", "frequency", "form", "display"});
  for (const auto& r : rows)
    out.row({std::to_string(r.rank), fmt(r.probability), std::to_string(r.frequency),
             form_name(r.form), r.display});
}

}  // namespace

void write_analysis(const BootstrapState& state, const FormGrouping& grouping,
                    const PatternTable* occurrence, std::size_t top_k,
                    const std::string& dir) {
  std::filesystem::create_directories(dir);

  auto top_fact = top_patterns(state.fact_set, top_k);
  auto top_feel = top_patterns(state.feel_set, top_k);
  write_top_csv(top_fact, dir + "/top_patterns_fact.csv");
  write_top_csv(top_feel, dir + "/top_patterns_feel.csv");

  auto hist = form_histogram(state.fact_set, state.feel_set, grouping,
                             occurrence);
  {
    csv::Writer out(dir + "/form_histogram.csv");
    out.row({"class", "group", "unique_count", "unique_share",
             "instance_count", "instance_share"});
    for (const std::string cls : {"FACT", "FEEL", "ALL"}) {
      auto it = hist.cells.find(cls);
      if (it == hist.cells.end()) continue;
      for (const std::string& group : grouping.group_order()) {
        auto cit = it->second.find(group);
        if (cit == it->second.end()) continue;
        const auto& c = cit->second;
        out.row({cls, group, std::to_string(c.unique_count),
                 fmt(c.unique_share), std::to_string(c.instance_count),
                 fmt(c.instance_share)});
      }
    }
  }

  auto prep = prep_distribution(state.fact_set, state.feel_set);
  {
    csv::Writer out(dir + "/prep_distribution.csv");
    out.row({"class", "preposition", "share"});
    for (const auto& [p, share] : prep.fact) out.row({"FACT", p, fmt(share)});
    for (const auto& [p, share] : prep.feel) out.row({"FEEL", p, fmt(share)});
  }

  std::ofstream md(dir + "/report.md", std::ios::binary);
  md << "# Argumentation style pattern analysis\n\n";
  md << "Form grouping used for histograms:\n\n```\n" << grouping.describe()
     << "```\n\n";
  auto emit_top = [&](const char* title,
                      const std::vector<TopPatternRow>& rows) {
    md << "## " << title << "\n\n";
    md << "| # | Probability | Frequency | Form | Pattern |\n";
    md << "|---|---|---|---|---|\n";
    for (const auto& r : rows)
      md << "| " << r.rank << " | " << fmt(r.probability) << " | "
         << r.frequency << " | " << form_name(r.form) << " | `" << r.display
         << "` |\n";
    md << "\n";
  };
  emit_top("Top FACT patterns", top_fact);
  emit_top("Top FEEL patterns", top_feel);

  md << "## Syntactic form histogram\n\n";
  for (const std::string cls : {"FACT", "FEEL", "ALL"}) {
    auto it = hist.cells.find(cls);
    if (it == hist.cells.end()) continue;
    md << "### " << cls << "\n\n```\n";
    for (const std::string& group : grouping.group_order()) {
      auto cit = it->second.find(group);
      if (cit == it->second.end()) continue;
      const auto& c = cit->second;
      md << group << std::string(group.size() < 12 ? 12 - group.size() : 1, ' ')
         << "unique " << fmt(c.unique_share, 1) << "% "
         << text_bar(c.unique_share) << "  instances "
         << fmt(c.instance_share, 1) << "% " << text_bar(c.instance_share)
         << "\n";
    }
    md << "```\n\n";
  }

  md << "## Preposition distribution in NP Prep patterns\n\n";
  auto emit_prep = [&](const char* cls,
                       const std::vector<std::pair<std::string, double>>& d) {
    md << "### " << cls << "\n\n```\n";
    for (const auto& [p, share] : d)
      md << p << std::string(p.size() < 10 ? 10 - p.size() : 1, ' ')
         << fmt(share, 1) << "% " << text_bar(share) << "\n";
    md << "```\n\n";
  };
  emit_prep("FACT", prep.fact);
  emit_prep("FEEL", prep.feel);
}

}  // namespace factfeel

#include "factfeel/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "factfeel/hashing.hpp"

namespace factfeel {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_doubles(s)) out.push_back(static_cast<int>(v));
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::runtime_error("bad boolean value: " + s);
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> keys;
  std::string line, section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    // strip inline comments: an unquoted '#' at the start or after whitespace
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (c == '"') in_quotes = !in_quotes;
      else if (c == '#' && !in_quotes &&
               (i == 0 ||
                std::isspace(static_cast<unsigned char>(line[i - 1])))) {
        line = trim(line.substr(0, i));
        break;
      }
    }
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad config line " + std::to_string(line_no) +
                               " (expected key = value): " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!value.empty() && value.front() == '"' && value.back() == '"' &&
        value.size() >= 2)
      value = value.substr(1, value.size() - 2);
    if (!section.empty()) key = section + "." + key;
    keys[key] = value;
  }
  return keys;
}

void RunConfig::apply(const std::map<std::string, std::string>& keys) {
  for (const auto& [key, value] : keys) {
    if (key == "input") input = value;
    else if (key == "format") format = value;
    else if (key == "out") out = value;
    else if (key == "lexicon_dir") lexicon_dir = value;
    else if (key == "form_grouping") form_grouping = value;
    else if (key == "split.train") ratios.train = std::stod(value);
    else if (key == "split.dev") ratios.dev = std::stod(value);
    else if (key == "split.test") ratios.test = std::stod(value);
    else if (key == "split.seed") split_seed = std::stoull(value);
    else if (key == "fact.theta_f") thresholds.fact.theta_f = std::stoi(value);
    else if (key == "fact.theta_p") thresholds.fact.theta_p = std::stod(value);
    else if (key == "fact.theta_n") thresholds.fact.theta_n = std::stoi(value);
    else if (key == "feel.theta_f") thresholds.feel.theta_f = std::stoi(value);
    else if (key == "feel.theta_p") thresholds.feel.theta_p = std::stod(value);
    else if (key == "feel.theta_n") thresholds.feel.theta_n = std::stoi(value);
    else if (key == "tune") tune = parse_bool(value);
    else if (key == "tuning.theta_f") tuning_grid.theta_f = parse_ints(value);
    else if (key == "tuning.theta_p") tuning_grid.theta_p = parse_doubles(value);
    else if (key == "tuning.theta_n") tuning_grid.theta_n = parse_ints(value);
    else if (key == "tuning.recall_floor")
      tuning_recall_floor = std::stod(value);
    else if (key == "bootstrap.iterations") iterations = std::stoi(value);
    else if (key == "bootstrap.seed") balance_seed = std::stoull(value);
    else if (key == "bootstrap.ratio_fact")
      balance_ratio_fact = std::stod(value);
    else if (key == "bootstrap.ratio_feel")
      balance_ratio_feel = std::stod(value);
    else if (key == "nb.alpha_grid") nb_alpha_grid = parse_doubles(value);
    else if (key == "analysis.top_k")
      analysis_top_k = static_cast<std::size_t>(std::stoul(value));
    else if (key == "workers") workers = std::stoi(value);
    else throw std::runtime_error("unknown config key: " + key);
  }
}

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["input"] = input;
  j["format"] = format;
  j["out"] = out;
  j["lexicon_dir"] = lexicon_dir;
  j["form_grouping"] = form_grouping;
  j["split"] = {{"train", ratios.train},
                {"dev", ratios.dev},
                {"test", ratios.test},
                {"seed", split_seed}};
  auto tj = [](const Thresholds& t) {
    return nlohmann::json{{"theta_f", t.theta_f},
                          {"theta_p", t.theta_p},
                          {"theta_n", t.theta_n}};
  };
  j["thresholds"] = {{"fact", tj(thresholds.fact)},
                     {"feel", tj(thresholds.feel)}};
  j["tune"] = tune;
  j["tuning"] = {{"theta_f", tuning_grid.theta_f},
                 {"theta_p", tuning_grid.theta_p},
                 {"theta_n", tuning_grid.theta_n},
                 {"recall_floor", tuning_recall_floor}};
  j["bootstrap"] = {{"iterations", iterations},
                    {"seed", balance_seed},
                    {"ratio_fact", balance_ratio_fact},
                    {"ratio_feel", balance_ratio_feel}};
  j["nb"] = {{"alpha_grid", nb_alpha_grid}};
  j["analysis"] = {{"top_k", analysis_top_k}};
  j["workers"] = workers;
  return j.dump(2);
}

std::uint64_t RunConfig::config_hash() const { return fnv1a64(to_json()); }

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  cfg.apply(parse_config_file(path));
  return cfg;
}

}  // namespace factfeel

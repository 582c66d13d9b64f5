#pragma once

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "bntrend/error.hpp"
#include "bntrend/text.hpp"

namespace bntrend {

// One suffix-stripping rule. Lengths are counted in code points, not bytes.
struct StemRule {
  std::string suffix;
  std::size_t suffix_code_points = 0;
  std::size_t min_stem_code_points = 1;
};

// Ordered suffix rules, longest suffix first. A rule applies when the word
// ends with the suffix and stripping leaves at least min_stem_code_points.
// The first applicable rule is stripped once; otherwise the word is its own
// stem. Rules can never produce an empty stem.
class StemRuleSet {
public:
  StemRuleSet() = default;

  explicit StemRuleSet(std::vector<StemRule> rules) : rules_(std::move(rules)) {
    for (auto& r : rules_) {
      r.suffix = normalize(r.suffix);
      r.suffix_code_points = count_code_points(r.suffix);
      if (r.min_stem_code_points < 1) r.min_stem_code_points = 1;
    }
    std::stable_sort(rules_.begin(), rules_.end(), [](const StemRule& a, const StemRule& b) {
      if (a.suffix_code_points != b.suffix_code_points)
        return a.suffix_code_points > b.suffix_code_points;
      return a.suffix < b.suffix;
    });
  }

  // Lines of "suffix<TAB>min_stem_len"; '#' comments and blank lines skipped.
  static StemRuleSet from_stream(std::istream& in, const std::string& source_name) {
    std::vector<StemRule> rules;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line_no == 1) strip_utf8_bom(line);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0)
        throw ConfigError(source_name + " line " + std::to_string(line_no) +
                          ": expected \"suffix<TAB>min_stem_len\"");
      std::string_view number{line.data() + tab + 1, line.size() - tab - 1};
      std::size_t min_len = 0;
      auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), min_len);
      if (ec != std::errc{} || ptr != number.data() + number.size() || min_len < 1)
        throw ConfigError(source_name + " line " + std::to_string(line_no) +
                          ": minimum stem length must be a positive integer");
      rules.push_back(StemRule{line.substr(0, tab), 0, min_len});
    }
    if (in.bad()) throw ConfigError("failed reading stem rules: " + source_name);
    return StemRuleSet(std::move(rules));
  }

  static StemRuleSet from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stem-rule file: " + path.string());
    return from_stream(in, path.string());
  }

  // Common Bengali inflection endings.
  static const StemRuleSet& bundled() {
    static const StemRuleSet rules{std::vector<StemRule>{
        {"গুলো", 0, 2},
        {"গুলি", 0, 2},
        {"েরা", 0, 2},
        {"ের", 0, 2},
        {"টি", 0, 2},
        {"টা", 0, 2},
        {"কে", 0, 2},
        {"রা", 0, 2},
        {"ে", 0, 2},
    }};
    return rules;
  }

  static const StemRuleSet& none() {
    static const StemRuleSet rules;
    return rules;
  }

  std::string apply(std::string_view normalized_word) const {
    std::size_t word_len = count_code_points(normalized_word);
    for (const auto& r : rules_) {
      if (r.suffix.size() >= normalized_word.size()) continue;
      if (!normalized_word.ends_with(r.suffix)) continue;
      if (word_len - r.suffix_code_points < r.min_stem_code_points) continue;
      return std::string{normalized_word.substr(0, normalized_word.size() - r.suffix.size())};
    }
    return std::string{normalized_word};
  }

  const std::vector<StemRule>& rules() const { return rules_; }

private:
  std::vector<StemRule> rules_;
};

inline Token stem(Token token, const StemRuleSet& rules) {
  token.stem = rules.apply(token.surface);
  return token;
}

}  // namespace bntrend

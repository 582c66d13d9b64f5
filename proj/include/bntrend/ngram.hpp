#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bntrend/corpus.hpp"
#include "bntrend/error.hpp"
#include "bntrend/pipeline.hpp"
#include "bntrend/window.hpp"

namespace bntrend {

inline constexpr int kMaxArity = 3;

// Ordered tuple of 1..3 content terms. Ordering and equality are term-tuple
// comparison; terms compare bytewise, which for UTF-8 equals code-point order.
//
// Stored as one string with the terms joined by 0x1F. That byte never occurs
// inside a normalized token and sorts below every token byte, so comparing
// keys bytewise is exactly term-tuple comparison, and counting maps pay for
// one string instead of a vector of them.
class NGram {
public:
  NGram() = default;

  explicit NGram(std::vector<std::string> terms) {
    if (terms.empty() || terms.size() > kMaxArity)
      throw ConfigError("n-gram arity must be between 1 and " + std::to_string(kMaxArity));
    std::size_t bytes = terms.size() - 1;
    for (const auto& t : terms) {
      if (t.empty()) throw ConfigError("n-gram terms must be non-empty");
      if (t.find(kSeparator) != std::string::npos)
        throw ConfigError("n-gram terms must not contain control characters");
      bytes += t.size();
    }
    key_.reserve(bytes);
    for (const auto& t : terms) {
      if (!key_.empty()) key_.push_back(kSeparator);
      key_ += t;
    }
    arity_ = static_cast<int>(terms.size());
  }

  static NGram of(std::initializer_list<std::string_view> terms) {
    std::vector<std::string> v;
    v.reserve(terms.size());
    for (auto t : terms) v.emplace_back(t);
    return NGram(std::move(v));
  }

  int arity() const { return arity_; }

  std::vector<std::string> terms() const {
    std::vector<std::string> out;
    if (arity_ == 0) return out;
    out.reserve(static_cast<std::size_t>(arity_));
    std::size_t begin = 0;
    while (begin <= key_.size()) {
      std::size_t end = key_.find(kSeparator, begin);
      if (end == std::string::npos) end = key_.size();
      out.emplace_back(key_, begin, end - begin);
      begin = end + 1;
    }
    return out;
  }

  std::string joined() const {
    std::string out = key_;
    for (char& c : out)
      if (c == kSeparator) c = ' ';
    return out;
  }

  const std::string& key() const { return key_; }

  struct Hash {
    std::size_t operator()(const NGram& g) const {
      return std::hash<std::string>{}(g.key_);
    }
  };

  friend bool operator==(const NGram& a, const NGram& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const NGram& a, const NGram& b) { return a.key_ <=> b.key_; }

private:
  static constexpr char kSeparator = '\x1f';

  NGram(std::string key, int arity) : key_(std::move(key)), arity_(arity) {}
  friend std::vector<NGram> extract_ngrams(const ContentRun&, int, TokenMode);

  std::string key_;
  int arity_ = 0;
};

// All consecutive n-windows over the run's tokens: max(0, m - n + 1) grams.
inline std::vector<NGram> extract_ngrams(const ContentRun& run, int n,
                                         TokenMode mode = TokenMode::surface) {
  if (n < 1 || n > kMaxArity)
    throw ConfigError("n-gram arity must be between 1 and " + std::to_string(kMaxArity));
  std::vector<NGram> grams;
  const auto& tokens = run.tokens;
  if (tokens.size() < static_cast<std::size_t>(n)) return grams;
  grams.reserve(tokens.size() - static_cast<std::size_t>(n) + 1);
  bool use_stem = mode == TokenMode::stem;
  std::string key;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    key.clear();
    for (int k = 0; k < n; ++k) {
      if (k) key.push_back(NGram::kSeparator);
      key += tokens[i + static_cast<std::size_t>(k)].term(use_stem);
    }
    grams.push_back(NGram(key, n));
  }
  return grams;
}

// Per-window n-gram counts plus corpus-wide totals. Counts are only stored
// when positive; totals always equal the column sum of the window maps.
class FrequencyTable {
public:
  using CountMap = std::map<NGram, std::int64_t>;

  FrequencyTable(int arity, std::size_t window_count)
      : arity_(arity), window_maps_(window_count) {
    if (arity < 1 || arity > kMaxArity)
      throw ConfigError("n-gram arity must be between 1 and " + std::to_string(kMaxArity));
    if (window_count < 1) throw ConfigError("frequency table needs at least one window");
  }

  void add(int window_index, const NGram& gram, std::int64_t occurrences = 1) {
    if (occurrences < 1) throw ConfigError("occurrence count must be positive");
    if (gram.arity() != arity_) throw ConfigError("n-gram arity does not match the table");
    map_at(window_index)[gram] += occurrences;
    totals_[gram] += occurrences;
  }

  // Bulk construction from per-window counts; totals are derived, so the
  // column-sum invariant holds by construction.
  static FrequencyTable from_window_counts(int arity, std::vector<CountMap> windows) {
    FrequencyTable table(arity, windows.size());
    table.window_maps_ = std::move(windows);
    for (const auto& window : table.window_maps_) {
      auto hint = table.totals_.begin();
      for (const auto& [gram, count] : window) {
        if (count < 1) throw ConfigError("occurrence count must be positive");
        if (gram.arity() != arity) throw ConfigError("n-gram arity does not match the table");
        hint = table.totals_.emplace_hint(hint, gram, 0);
        hint->second += count;
        ++hint;  // window keys ascend, so the next key lands at or after here
      }
    }
    return table;
  }

  int arity() const { return arity_; }
  std::size_t window_count() const { return window_maps_.size(); }

  std::int64_t count_in_window(int window_index, const NGram& gram) const {
    const auto& m = map_at(window_index);
    auto it = m.find(gram);
    return it == m.end() ? 0 : it->second;
  }

  std::int64_t total(const NGram& gram) const {
    auto it = totals_.find(gram);
    return it == totals_.end() ? 0 : it->second;
  }

  const CountMap& window_map(int window_index) const { return map_at(window_index); }
  const CountMap& totals() const { return totals_; }

private:
  CountMap& map_at(int window_index) {
    if (window_index < 1 || static_cast<std::size_t>(window_index) > window_maps_.size())
      throw ConfigError("window index out of range: " + std::to_string(window_index));
    return window_maps_[static_cast<std::size_t>(window_index) - 1];
  }
  const CountMap& map_at(int window_index) const {
    return const_cast<FrequencyTable*>(this)->map_at(window_index);
  }

  int arity_;
  std::vector<CountMap> window_maps_;
  CountMap totals_;
};

// Aggregates extract_ngrams over every in-range document of the corpus.
// Documents dated outside the partition contribute nothing. Occurrences are
// accumulated per window in hash maps and sorted once at the end, which is
// considerably cheaper than ordered insertion per occurrence.
inline FrequencyTable count_frequencies(const Corpus& corpus, const WindowPartition& partition,
                                        int n, const StopWordList& stops,
                                        const StemRuleSet& rules,
                                        const PipelineOptions& opts = {}) {
  if (n < 1 || n > kMaxArity)
    throw ConfigError("n-gram arity must be between 1 and " + std::to_string(kMaxArity));
  std::vector<std::unordered_map<NGram, std::int64_t, NGram::Hash>> accumulators(
      partition.size());
  std::size_t in_range = 0;
  for (const Document& doc : corpus.documents()) {
    auto window = partition.window_of(doc.date);
    if (!window) continue;
    ++in_range;
    auto& counts = accumulators[static_cast<std::size_t>(*window) - 1];
    for (const ContentRun& run : content_runs(doc.counting_text(), stops, rules, opts))
      for (NGram& gram : extract_ngrams(run, n, opts.mode)) counts[std::move(gram)] += 1;
  }
  if (in_range == 0)
    throw DataError("no documents in range " + partition.start().to_string() + ".." +
                    partition.end().to_string());

  std::vector<FrequencyTable::CountMap> windows;
  windows.reserve(accumulators.size());
  for (auto& acc : accumulators) {
    std::vector<std::pair<NGram, std::int64_t>> entries;
    entries.reserve(acc.size());
    for (auto& [gram, count] : acc) entries.emplace_back(gram, count);
    acc.clear();
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    windows.emplace_back(std::make_move_iterator(entries.begin()),
                         std::make_move_iterator(entries.end()));
  }
  return FrequencyTable::from_window_counts(n, std::move(windows));
}

}  // namespace bntrend

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "bntrend/error.hpp"
#include "bntrend/ngram.hpp"

namespace bntrend {

// Expected per-window frequency of an n-gram: its corpus-wide total averaged
// over the W windows of the analysis range. Undefined for n-grams absent
// from the corpus; absence and a zero burst are different facts.
inline double expected_frequency(std::int64_t total, std::size_t window_count) {
  if (window_count < 1) throw ConfigError("window count must be at least 1");
  if (total <= 0) throw DataError("expected frequency is undefined for an absent n-gram");
  return static_cast<double>(total) / static_cast<double>(window_count);
}

// Burst statistic: (observed - expected)^2 / expected. Zero exactly when the
// window frequency equals the per-window average.
inline double chi_square(double observed, double expected) {
  if (!(expected > 0.0)) throw ConfigError("chi-square expected value must be positive");
  double diff = observed - expected;
  return diff * diff / expected;
}

struct TrendScore {
  NGram ngram;
  int window = 0;
  std::int64_t observed = 0;
  double expected = 0.0;
  double chi = 0.0;
};

// Descending chi; ties broken by higher observed frequency, then by
// code-point-lexicographic n-gram order so the result is a total order.
inline bool trend_order(const TrendScore& a, const TrendScore& b) {
  if (a.chi != b.chi) return a.chi > b.chi;
  if (a.observed != b.observed) return a.observed > b.observed;
  return a.ngram < b.ngram;
}

struct TrendRanking {
  int window = 0;
  int arity = 0;
  std::vector<TrendScore> entries;
};

// Scores every n-gram observed in the window (at or above min_observed) and
// sorts by trend_order. Identical inputs always produce identical orderings.
inline TrendRanking rank_window(const FrequencyTable& table, int window_index,
                                std::int64_t min_observed = 1) {
  TrendRanking ranking{window_index, table.arity(), {}};
  const auto& window = table.window_map(window_index);
  ranking.entries.reserve(window.size());
  for (const auto& [gram, observed] : window) {
    if (observed < min_observed) continue;
    double expected = expected_frequency(table.total(gram), table.window_count());
    ranking.entries.push_back(TrendScore{gram, window_index, observed, expected,
                                         chi_square(static_cast<double>(observed), expected)});
  }
  std::sort(ranking.entries.begin(), ranking.entries.end(), trend_order);
  return ranking;
}

// Rankings for every window. Windows are scored in parallel when threads
// permit; each thread writes disjoint slots, so the result is byte-for-byte
// the same as the sequential computation.
inline std::vector<TrendRanking> rank_all_windows(const FrequencyTable& table,
                                                  std::int64_t min_observed = 1,
                                                  unsigned threads = 0) {
  std::size_t w = table.window_count();
  std::vector<TrendRanking> rankings(w);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, w));
  if (threads <= 1) {
    for (std::size_t i = 0; i < w; ++i)
      rankings[i] = rank_window(table, static_cast<int>(i) + 1, min_observed);
    return rankings;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < w; i += threads)
        rankings[i] = rank_window(table, static_cast<int>(i) + 1, min_observed);
    });
  }
  for (auto& th : pool) th.join();
  return rankings;
}

// First min(k, size) entries, order preserved.
inline TrendRanking top_k(TrendRanking ranking, std::size_t k) {
  if (k < 1) throw ConfigError("top-k requires k >= 1");
  if (ranking.entries.size() > k) ranking.entries.resize(k);
  return ranking;
}

struct SeriesPoint {
  std::int64_t observed = 0;
  double chi = 0.0;
};

// Per-window (observed, chi) curve for one n-gram, zero-filled where the
// n-gram does not occur. An n-gram absent from the whole corpus yields a
// flat zero series flagged `absent` (its chi is undefined, reported as 0).
struct TermSeries {
  NGram ngram;
  bool absent = false;
  std::vector<SeriesPoint> points;

  std::int64_t total_observed() const {
    std::int64_t sum = 0;
    for (const auto& p : points) sum += p.observed;
    return sum;
  }
};

inline TermSeries term_series(const NGram& gram, const FrequencyTable& table) {
  if (gram.arity() != table.arity())
    throw ConfigError("n-gram arity does not match the table");
  TermSeries series{gram, false, {}};
  series.points.resize(table.window_count());
  std::int64_t total = table.total(gram);
  if (total == 0) {
    series.absent = true;
    return series;
  }
  double expected = expected_frequency(total, table.window_count());
  for (std::size_t i = 0; i < table.window_count(); ++i) {
    std::int64_t observed = table.count_in_window(static_cast<int>(i) + 1, gram);
    series.points[i] = SeriesPoint{observed,
                                   chi_square(static_cast<double>(observed), expected)};
  }
  return series;
}

}  // namespace bntrend

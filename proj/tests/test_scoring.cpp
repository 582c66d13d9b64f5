#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "bntrend/bntrend.hpp"
#include "support.hpp"

using namespace bntrend;
using testsupport::date;

namespace {

// Independent re-evaluation of the burst statistic in extended precision.
long double chi_reference(long double observed, std::int64_t total, std::size_t windows) {
  long double expected = static_cast<long double>(total) / static_cast<long double>(windows);
  long double diff = observed - expected;
  return diff * diff / expected;
}

FrequencyTable table_with(int arity, std::size_t windows,
                          std::initializer_list<std::tuple<NGram, int, std::int64_t>> cells) {
  FrequencyTable table(arity, windows);
  for (const auto& [gram, window, count] : cells) table.add(window, gram, count);
  return table;
}

}  // namespace

TEST_CASE("expected frequency is the corpus total averaged over windows") {
  CHECK(expected_frequency(12, 18) == 12.0 / 18.0);
  CHECK(expected_frequency(42, 18) == 42.0 / 18.0);
  CHECK(expected_frequency(18, 18) == 1.0);
  CHECK_THROWS_AS(expected_frequency(0, 18), DataError);
  CHECK_THROWS_AS(expected_frequency(5, 0), ConfigError);
}

TEST_CASE("chi_square matches the golden double-precision fixtures") {
  CHECK(chi_square(29.0, expected_frequency(42, 18)) == 304.76190476190476);
  CHECK(chi_square(12.0, expected_frequency(12, 18)) == 192.66666666666669);
  CHECK(chi_square(30.0, expected_frequency(33, 18)) == 432.7424242424243);
  CHECK(chi_square(34.0, expected_frequency(59, 18)) == 287.95574387947266);
  CHECK(chi_square(27.0, expected_frequency(45, 18)) == 240.1);
  CHECK(chi_square(5.0, 5.0) == 0.0);
  CHECK_THROWS_AS(chi_square(5.0, 0.0), ConfigError);
  CHECK_THROWS_AS(chi_square(5.0, -1.0), ConfigError);
}

TEST_CASE("rank_window orders the seeded five-bigram corpus correctly") {
  // window-13 observations {29,34,27,27,12} against totals {42,59,41,45,12}
  FrequencyTable table(2, 18);
  auto fill = [&](std::initializer_list<const char*> words, int observed, int total) {
    NGram gram = NGram::of({*words.begin(), *(words.begin() + 1)});
    table.add(13, gram, observed);
    int rest = total - observed;
    for (int w = 1; rest > 0; w = (w % 18) + 1) {
      if (w == 13) continue;
      table.add(w, gram, 1);
      --rest;
    }
  };
  fill({"মহান", "স্বাধীনতা"}, 29, 42);
  fill({"স্বাধীনতা", "দিবস"}, 34, 59);
  fill({"তদন্ত", "সংস্থা"}, 27, 41);
  fill({"স্বাধীন", "বাংলা"}, 27, 45);
  fill({"বিআরটিসির", "বাস"}, 12, 12);

  TrendRanking ranking = rank_window(table, 13);
  REQUIRE(ranking.entries.size() == 5);
  CHECK(ranking.entries[0].ngram.joined() == "মহান স্বাধীনতা");
  CHECK(ranking.entries[0].chi == 304.76190476190476);
  CHECK(ranking.entries[1].ngram.joined() == "স্বাধীনতা দিবস");
  CHECK(ranking.entries[1].chi == 287.95574387947266);
  CHECK(ranking.entries[2].ngram.joined() == "তদন্ত সংস্থা");
  CHECK(ranking.entries[2].chi == 268.32655826558266);
  CHECK(ranking.entries[3].ngram.joined() == "স্বাধীন বাংলা");
  CHECK(ranking.entries[3].chi == 240.1);
  CHECK(ranking.entries[4].ngram.joined() == "বিআরটিসির বাস");
  CHECK(ranking.entries[4].chi == 192.66666666666669);
}

TEST_CASE("chi ties break on observed frequency, then lexicographically") {
  // (observed 9, total 16) and (observed 6, total 9) both score 6.25 over 4 windows
  FrequencyTable table = table_with(1, 4,
                                    {{NGram::of({"ক"}), 1, 9},
                                     {NGram::of({"ক"}), 2, 7},
                                     {NGram::of({"খ"}), 1, 6},
                                     {NGram::of({"খ"}), 3, 3},
                                     {NGram::of({"গ"}), 1, 9},
                                     {NGram::of({"গ"}), 4, 7},
                                     {NGram::of({"ঘ"}), 1, 9},
                                     {NGram::of({"ঘ"}), 2, 7}});
  TrendRanking ranking = rank_window(table, 1);
  REQUIRE(ranking.entries.size() == 4);
  for (const auto& e : ranking.entries) CHECK(e.chi == 6.25);
  // observed 9 beats observed 6; equal observed falls back to code-point order
  CHECK(ranking.entries[0].ngram == NGram::of({"ক"}));
  CHECK(ranking.entries[1].ngram == NGram::of({"গ"}));
  CHECK(ranking.entries[2].ngram == NGram::of({"ঘ"}));
  CHECK(ranking.entries[3].ngram == NGram::of({"খ"}));
}

TEST_CASE("empty windows rank to an empty list, absent n-grams are unlisted") {
  FrequencyTable table = table_with(1, 4, {{NGram::of({"ক"}), 1, 3}});
  CHECK(rank_window(table, 2).entries.empty());
  TrendRanking first = rank_window(table, 1);
  REQUIRE(first.entries.size() == 1);
}

TEST_CASE("min_observed floor excludes sub-threshold candidates") {
  FrequencyTable table =
      table_with(1, 4, {{NGram::of({"ক"}), 1, 5}, {NGram::of({"খ"}), 1, 1}});
  CHECK(rank_window(table, 1).entries.size() == 2);
  CHECK(rank_window(table, 1, 2).entries.size() == 1);
}

TEST_CASE("top_k truncates without reordering") {
  FrequencyTable table = table_with(1, 2,
                                    {{NGram::of({"ক"}), 1, 9},
                                     {NGram::of({"খ"}), 1, 5},
                                     {NGram::of({"গ"}), 1, 2}});
  TrendRanking ranking = rank_window(table, 1);
  CHECK(top_k(ranking, 5).entries.size() == 3);
  CHECK(top_k(ranking, 1).entries.size() == 1);
  CHECK(top_k(ranking, 1).entries[0].ngram == ranking.entries[0].ngram);
  auto same = top_k(ranking, 3);
  REQUIRE(same.entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(same.entries[i].ngram == ranking.entries[i].ngram);
  CHECK_THROWS_AS(top_k(ranking, 0), ConfigError);
}

TEST_CASE("sorting a ranking is idempotent and deterministic") {
  std::mt19937_64 rng{5555};
  for (int trial = 0; trial < 50; ++trial) {
    FrequencyTable table(1, 6);
    int grams = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int g = 0; g < grams; ++g) {
      NGram gram = NGram::of({std::string("t") + std::to_string(g % 7)});
      int w = std::uniform_int_distribution<int>(1, 6)(rng);
      table.add(w, gram, std::uniform_int_distribution<int>(1, 9)(rng));
    }
    TrendRanking a = rank_window(table, 1);
    TrendRanking b = rank_window(table, 1);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      REQUIRE(a.entries[i].ngram == b.entries[i].ngram);
      REQUIRE(a.entries[i].chi == b.entries[i].chi);
    }
    auto resorted = a.entries;
    std::sort(resorted.begin(), resorted.end(), trend_order);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      REQUIRE(resorted[i].ngram == a.entries[i].ngram);
  }
}

TEST_CASE("parallel and sequential window ranking agree exactly") {
  std::mt19937_64 rng{6767};
  FrequencyTable table(2, 24);
  for (int g = 0; g < 200; ++g) {
    NGram gram = NGram::of({"a" + std::to_string(g % 17), "b" + std::to_string(g % 11)});
    table.add(std::uniform_int_distribution<int>(1, 24)(rng), gram,
              std::uniform_int_distribution<int>(1, 20)(rng));
  }
  auto sequential = rank_all_windows(table, 1, 1);
  auto parallel = rank_all_windows(table, 1, 8);
  REQUIRE(sequential.size() == parallel.size());
  for (std::size_t w = 0; w < sequential.size(); ++w) {
    REQUIRE(sequential[w].entries.size() == parallel[w].entries.size());
    for (std::size_t i = 0; i < sequential[w].entries.size(); ++i) {
      REQUIRE(sequential[w].entries[i].ngram == parallel[w].entries[i].ngram);
      REQUIRE(sequential[w].entries[i].chi == parallel[w].entries[i].chi);
      REQUIRE(sequential[w].entries[i].observed == parallel[w].entries[i].observed);
    }
  }
}

TEST_CASE("a total burst in one window scores T times (W-1)^2 over W") {
  std::mt19937_64 rng{7878};
  for (int trial = 0; trial < 400; ++trial) {
    std::int64_t t = std::uniform_int_distribution<std::int64_t>(1, 1000)(rng);
    std::size_t w = std::uniform_int_distribution<std::size_t>(1, 100)(rng);
    int target = std::uniform_int_distribution<int>(1, static_cast<int>(w))(rng);
    FrequencyTable table(1, w);
    table.add(target, NGram::of({"ক"}), t);
    TrendRanking ranking = rank_window(table, target);
    REQUIRE(ranking.entries.size() == 1);
    double closed_form = static_cast<double>(t) * static_cast<double>(w - 1) *
                         static_cast<double>(w - 1) / static_cast<double>(w);
    double got = ranking.entries[0].chi;
    if (closed_form == 0.0) {
      REQUIRE(got == 0.0);
    } else {
      REQUIRE(std::abs(got - closed_form) / closed_form < 1e-12);
    }
  }
}

TEST_CASE("doubling all counts exactly doubles every chi and keeps the order") {
  std::mt19937_64 rng{8989};
  FrequencyTable once(1, 9);
  FrequencyTable twice(1, 9);
  for (int g = 0; g < 40; ++g) {
    NGram gram = NGram::of({"t" + std::to_string(g)});
    for (int w = 1; w <= 9; ++w) {
      int c = std::uniform_int_distribution<int>(0, 6)(rng);
      if (c == 0) continue;
      once.add(w, gram, c);
      twice.add(w, gram, 2 * c);
    }
  }
  for (int w = 1; w <= 9; ++w) {
    TrendRanking a = rank_window(once, w);
    TrendRanking b = rank_window(twice, w);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      REQUIRE(b.entries[i].ngram == a.entries[i].ngram);  // argmax invariance
      REQUIRE(b.entries[i].chi == 2.0 * a.entries[i].chi);  // exact in binary fp
    }
  }
}

TEST_CASE("stored chi matches an independent high-precision evaluation") {
  std::mt19937_64 rng{31415};
  for (int trial = 0; trial < 30; ++trial) {
    auto gen = testsupport::generate_corpus(rng());
    std::istringstream in(testsupport::render_jsonl(gen));
    Corpus corpus = load_corpus(in);
    WindowPartition partition(gen.start, gen.end, gen.window_days);
    FrequencyTable table =
        count_frequencies(corpus, partition, 2, StopWordList::empty(), StemRuleSet::none());
    for (std::size_t w = 1; w <= table.window_count(); ++w) {
      for (const auto& e : rank_window(table, static_cast<int>(w)).entries) {
        long double reference = chi_reference(static_cast<long double>(e.observed),
                                              table.total(e.ngram), table.window_count());
        long double stored = static_cast<long double>(e.chi);
        if (reference == 0.0L)
          REQUIRE(stored == 0.0L);
        else
          REQUIRE(std::abs(static_cast<double>((stored - reference) / reference)) < 1e-12);
      }
    }
  }
}

TEST_CASE("term_series zero-fills missing windows and sums to the total") {
  FrequencyTable table(2, 18);
  NGram gram = NGram::of({"বিআরটিসির", "বাস"});
  table.add(13, gram, 12);
  TermSeries series = term_series(gram, table);
  REQUIRE(series.points.size() == 18);
  CHECK_FALSE(series.absent);
  CHECK(series.points[12].observed == 12);
  CHECK(series.total_observed() == 12);
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    if (i == 12) continue;
    CHECK(series.points[i].observed == 0);
    // chi at zero observed equals the expected frequency itself
    CHECK(series.points[i].chi == expected_frequency(12, 18));
  }
}

TEST_CASE("a uniform n-gram has zero chi everywhere") {
  FrequencyTable table(1, 6);
  NGram gram = NGram::of({"ক"});
  for (int w = 1; w <= 6; ++w) table.add(w, gram, 4);
  TermSeries series = term_series(gram, table);
  for (const auto& p : series.points) CHECK(p.chi == 0.0);
}

TEST_CASE("an unknown n-gram yields a flagged all-zero series") {
  FrequencyTable table(1, 6);
  table.add(1, NGram::of({"ক"}), 2);
  TermSeries series = term_series(NGram::of({"খ"}), table);
  CHECK(series.absent);
  CHECK(series.total_observed() == 0);
  REQUIRE(series.points.size() == 6);
  CHECK_THROWS_AS(term_series(NGram::of({"ক", "খ"}), table), ConfigError);
}

TEST_CASE("series totals equal table totals on generated corpora") {
  std::mt19937_64 rng{2718};
  for (int trial = 0; trial < 20; ++trial) {
    auto gen = testsupport::generate_corpus(rng());
    std::istringstream in(testsupport::render_jsonl(gen));
    Corpus corpus = load_corpus(in);
    WindowPartition partition(gen.start, gen.end, gen.window_days);
    FrequencyTable table =
        count_frequencies(corpus, partition, 1, StopWordList::empty(), StemRuleSet::none());
    for (const auto& [gram, total] : table.totals())
      REQUIRE(term_series(gram, table).total_observed() == total);
  }
}

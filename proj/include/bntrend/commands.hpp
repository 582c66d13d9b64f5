#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bntrend/clusters.hpp"
#include "bntrend/corpus.hpp"
#include "bntrend/format.hpp"
#include "bntrend/ngram.hpp"
#include "bntrend/scoring.hpp"
#include "bntrend/svg.hpp"
#include "bntrend/window.hpp"

namespace bntrend {

enum class OutputFormat { tsv, csv, json, svg };

inline std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::tsv: return "tsv";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::svg: return "svg";
  }
  return "tsv";
}

inline OutputFormat parse_output_format(std::string_view text) {
  if (text == "tsv") return OutputFormat::tsv;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  if (text == "svg") return OutputFormat::svg;
  throw ConfigError("unknown output format: " + std::string{text});
}

inline std::string to_string(TokenMode m) {
  return m == TokenMode::stem ? "stem" : "surface";
}

inline TokenMode parse_token_mode(std::string_view text) {
  if (text == "surface") return TokenMode::surface;
  if (text == "stem") return TokenMode::stem;
  throw ConfigError("unknown mode: " + std::string{text} + " (expected surface or stem)");
}

inline std::string to_string(CountMode m) {
  return m == CountMode::documents ? "documents" : "tokens";
}

inline CountMode parse_count_mode(std::string_view text) {
  if (text == "tokens") return CountMode::tokens;
  if (text == "documents") return CountMode::documents;
  throw ConfigError("unknown count mode: " + std::string{text} +
                    " (expected tokens or documents)");
}

inline std::string to_string(SeriesMetric m) {
  return m == SeriesMetric::chi ? "chi" : "observed";
}

inline SeriesMetric parse_series_metric(std::string_view text) {
  if (text == "observed") return SeriesMetric::observed;
  if (text == "chi") return SeriesMetric::chi;
  throw ConfigError("unknown metric: " + std::string{text} + " (expected observed or chi)");
}

// One analysis run, fully described. Serializes to JSON and back without
// loss, so runs can be archived next to their outputs.
struct RunConfig {
  std::string input;               // JSONL corpus (for plot: a series table)
  Date from;
  Date to;
  int window_days = 7;
  int n = 1;
  int top = 5;
  TokenMode mode = TokenMode::surface;
  std::string stopwords_path;      // empty = bundled list
  std::string stem_rules_path;     // empty = bundled rules
  bool bridge_stopwords = false;
  bool keep_numeric = false;
  OutputFormat format = OutputFormat::tsv;
  std::string out_path;            // empty = stdout
  std::vector<std::string> terms;  // series subcommand
  std::string clusters_path;       // clusters subcommand
  CountMode count_mode = CountMode::tokens;
  std::int64_t min_count = 1;
  SeriesMetric metric = SeriesMetric::observed;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"input", c.input},
                     {"from", c.from.to_string()},
                     {"to", c.to.to_string()},
                     {"window_days", c.window_days},
                     {"n", c.n},
                     {"top", c.top},
                     {"mode", to_string(c.mode)},
                     {"stopwords", c.stopwords_path},
                     {"stem_rules", c.stem_rules_path},
                     {"bridge_stopwords", c.bridge_stopwords},
                     {"keep_numeric", c.keep_numeric},
                     {"format", to_string(c.format)},
                     {"out", c.out_path},
                     {"terms", c.terms},
                     {"clusters", c.clusters_path},
                     {"count_mode", to_string(c.count_mode)},
                     {"min_count", c.min_count},
                     {"metric", to_string(c.metric)}};
}

inline void from_json(const nlohmann::json& j, RunConfig& c) {
  auto date_at = [&](const char* key) {
    auto d = Date::try_parse(j.at(key).get<std::string>());
    if (!d) throw ConfigError(std::string{"invalid date for "} + key);
    return *d;
  };
  c.input = j.at("input").get<std::string>();
  c.from = date_at("from");
  c.to = date_at("to");
  c.window_days = j.at("window_days").get<int>();
  c.n = j.at("n").get<int>();
  c.top = j.at("top").get<int>();
  c.mode = parse_token_mode(j.at("mode").get<std::string>());
  c.stopwords_path = j.at("stopwords").get<std::string>();
  c.stem_rules_path = j.at("stem_rules").get<std::string>();
  c.bridge_stopwords = j.at("bridge_stopwords").get<bool>();
  c.keep_numeric = j.at("keep_numeric").get<bool>();
  c.format = parse_output_format(j.at("format").get<std::string>());
  c.out_path = j.at("out").get<std::string>();
  c.terms = j.at("terms").get<std::vector<std::string>>();
  c.clusters_path = j.at("clusters").get<std::string>();
  c.count_mode = parse_count_mode(j.at("count_mode").get<std::string>());
  c.min_count = j.at("min_count").get<std::int64_t>();
  c.metric = parse_series_metric(j.at("metric").get<std::string>());
}

namespace detail {

struct AnalysisContext {
  Corpus corpus;
  WindowPartition partition;
  StopWordList stopwords;
  StemRuleSet stem_rules;
  PipelineOptions pipeline;
};

inline AnalysisContext make_context(const RunConfig& config) {
  AnalysisContext ctx{
      load_corpus_file(config.input),
      WindowPartition(config.from, config.to, config.window_days),
      config.stopwords_path.empty() ? StopWordList::bundled()
                                    : StopWordList::from_file(config.stopwords_path),
      config.stem_rules_path.empty() ? StemRuleSet::bundled()
                                     : StemRuleSet::from_file(config.stem_rules_path),
      {}};
  ctx.pipeline.mode = config.mode;
  ctx.pipeline.bridge_stopwords = config.bridge_stopwords;
  ctx.pipeline.drop_numeric_tokens = !config.keep_numeric;
  return ctx;
}

inline char delimiter_of(OutputFormat f) { return f == OutputFormat::csv ? ',' : '\t'; }

}  // namespace detail

// Ranked trending topics per window: a window header row, then one row per
// rank with the n-gram's terms joined by a single space, its chi statistic
// printed with full double precision, and its window frequency.
inline std::string run_top(const RunConfig& config) {
  if (config.format == OutputFormat::svg)
    throw ConfigError("top does not support svg output; use series or plot");
  auto ctx = detail::make_context(config);
  if (config.top < 1) throw ConfigError("--top must be at least 1");
  FrequencyTable table = count_frequencies(ctx.corpus, ctx.partition, config.n, ctx.stopwords,
                                           ctx.stem_rules, ctx.pipeline);
  std::vector<TrendRanking> rankings = rank_all_windows(table, config.min_count);
  for (auto& r : rankings) r = top_k(std::move(r), static_cast<std::size_t>(config.top));

  if (config.format == OutputFormat::json) {
    nlohmann::json out{{"command", "top"},
                       {"n", config.n},
                       {"top", config.top},
                       {"window_days", config.window_days},
                       {"from", config.from.to_string()},
                       {"to", config.to.to_string()},
                       {"windows", nlohmann::json::array()}};
    for (const auto& ranking : rankings) {
      const Window& w = ctx.partition.window(ranking.window);
      nlohmann::json entries = nlohmann::json::array();
      int rank = 1;
      for (const auto& e : ranking.entries) {
        entries.push_back({{"rank", rank++},
                           {"topic", e.ngram.joined()},
                           {"terms", e.ngram.terms()},
                           {"chi", e.chi},
                           {"expected", e.expected},
                           {"observed", e.observed}});
      }
      out["windows"].push_back({{"window", w.index},
                                {"start", w.first_day.to_string()},
                                {"end", w.last_day.to_string()},
                                {"entries", std::move(entries)}});
    }
    return out.dump(2) + "\n";
  }

  char d = detail::delimiter_of(config.format);
  std::string out;
  for (const auto& ranking : rankings) {
    const Window& w = ctx.partition.window(ranking.window);
    out += join_row({"window", std::to_string(w.index), w.first_day.to_string(),
                     w.last_day.to_string()},
                    d);
    int rank = 1;
    for (const auto& e : ranking.entries) {
      out += join_row({std::to_string(rank++), e.ngram.joined(), format_double(e.chi),
                       std::to_string(e.observed)},
                      d);
    }
  }
  return out;
}

namespace detail {

// In stem mode the table keys are stems, so requested terms are stemmed the
// same way before lookup.
inline NGram parse_term(const std::string& raw, TokenMode mode, const StemRuleSet& rules) {
  std::vector<Token> tokens = tokenize(normalize(raw));
  if (tokens.empty()) throw ConfigError("term \"" + raw + "\" contains no words");
  if (tokens.size() > static_cast<std::size_t>(kMaxArity))
    throw ConfigError("term \"" + raw + "\" has more than " + std::to_string(kMaxArity) +
                      " words");
  std::vector<std::string> terms;
  terms.reserve(tokens.size());
  for (auto& t : tokens)
    terms.push_back(mode == TokenMode::stem ? rules.apply(t.surface) : std::move(t.surface));
  return NGram(std::move(terms));
}

inline SeriesTable build_series_table(const AnalysisContext& ctx,
                                      const std::vector<NGram>& grams,
                                      const FrequencyTable& table) {
  SeriesTable st;
  for (const Window& w : ctx.partition.windows()) st.window_starts.push_back(w.first_day.to_string());
  for (const NGram& gram : grams) {
    TermSeries series = term_series(gram, table);
    SeriesTable::Column col;
    col.label = gram.joined();
    col.absent = series.absent;
    col.observed.reserve(series.points.size());
    col.chi.reserve(series.points.size());
    for (const auto& p : series.points) {
      col.observed.push_back(static_cast<double>(p.observed));
      col.chi.push_back(p.chi);
    }
    st.columns.push_back(std::move(col));
  }
  return st;
}

}  // namespace detail

// Per-window curve data for the requested n-grams: one row per window, one
// (observed, chi) column pair per term. All terms must share one arity.
inline std::string run_series(const RunConfig& config) {
  if (config.terms.empty()) throw ConfigError("series requires at least one --terms value");
  auto ctx = detail::make_context(config);
  std::vector<NGram> grams;
  grams.reserve(config.terms.size());
  for (const auto& t : config.terms)
    grams.push_back(detail::parse_term(t, config.mode, ctx.stem_rules));
  int n = grams.front().arity();
  for (const auto& g : grams)
    if (g.arity() != n)
      throw ConfigError("all series terms must have the same number of words");

  FrequencyTable table =
      count_frequencies(ctx.corpus, ctx.partition, n, ctx.stopwords, ctx.stem_rules, ctx.pipeline);
  SeriesTable st = detail::build_series_table(ctx, grams, table);

  if (config.format == OutputFormat::svg) return render_svg(st, config.metric);

  if (config.format == OutputFormat::json) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t c = 0; c < st.columns.size(); ++c) {
      nlohmann::json points = nlohmann::json::array();
      for (std::size_t i = 0; i < st.window_starts.size(); ++i) {
        points.push_back({{"window", i + 1},
                          {"start", st.window_starts[i]},
                          {"observed", static_cast<std::int64_t>(st.columns[c].observed[i])},
                          {"chi", st.columns[c].chi[i]}});
      }
      terms.push_back({{"term", st.columns[c].label},
                       {"absent", st.columns[c].absent},
                       {"points", std::move(points)}});
    }
    nlohmann::json out{{"command", "series"},
                       {"n", n},
                       {"window_days", config.window_days},
                       {"from", config.from.to_string()},
                       {"to", config.to.to_string()},
                       {"terms", std::move(terms)}};
    return out.dump(2) + "\n";
  }

  char d = detail::delimiter_of(config.format);
  std::vector<std::string> header{"window_start"};
  for (const auto& col : st.columns) {
    std::string label = col.label;
    if (col.absent) label += " [absent]";
    header.push_back(label + " observed");
    header.push_back(label + " chi");
  }
  std::string out = join_row(header, d);
  for (std::size_t i = 0; i < st.window_starts.size(); ++i) {
    std::vector<std::string> row{st.window_starts[i]};
    for (const auto& col : st.columns) {
      row.push_back(std::to_string(static_cast<std::int64_t>(col.observed[i])));
      row.push_back(format_double(col.chi[i]));
    }
    out += join_row(row, d);
  }
  return out;
}

// Cluster mention counts and percentage shares per document category.
// Categories come from the corpus labels; documents without a category are
// grouped under "uncategorized".
inline std::string run_clusters(const RunConfig& config) {
  if (config.format == OutputFormat::svg)
    throw ConfigError("clusters does not support svg output");
  if (config.clusters_path.empty()) throw ConfigError("clusters requires --clusters FILE");
  std::vector<KeywordCluster> clusters = load_clusters_file(config.clusters_path);
  auto ctx = detail::make_context(config);

  // Restrict to the analysis date range, consistent with the other commands.
  std::vector<Document> in_range;
  for (const Document& doc : ctx.corpus.documents())
    if (doc.date >= config.from && doc.date <= config.to) in_range.push_back(doc);
  if (in_range.empty())
    throw DataError("no documents in range " + config.from.to_string() + ".." +
                    config.to.to_string());
  Corpus corpus(std::move(in_range));

  std::set<std::string> categories;
  bool has_uncategorized = false;
  for (const Document& doc : corpus.documents()) {
    if (doc.category.empty())
      has_uncategorized = true;
    else
      categories.insert(doc.category);
  }

  ClusterOptions copts{config.count_mode, config.mode};
  std::vector<CategoryBreakdown> breakdowns;
  for (const auto& category : categories) {
    auto counts = cluster_mentions(corpus, clusters, category, copts, ctx.stem_rules);
    breakdowns.push_back(category_share(counts, category));
  }
  if (has_uncategorized) {
    auto counts = cluster_mentions(corpus, clusters, std::string{}, copts, ctx.stem_rules);
    breakdowns.push_back(category_share(counts, "uncategorized"));
  }

  if (config.format == OutputFormat::json) {
    nlohmann::json out{{"command", "clusters"},
                       {"count_mode", to_string(config.count_mode)},
                       {"categories", nlohmann::json::array()}};
    for (const auto& b : breakdowns) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& c : b.clusters) {
        nlohmann::json row{{"cluster", c.cluster}, {"count", c.count}};
        if (b.no_data)
          row["share"] = nullptr;
        else
          row["share"] = c.share;
        rows.push_back(std::move(row));
      }
      out["categories"].push_back(
          {{"category", b.category}, {"no_data", b.no_data}, {"clusters", std::move(rows)}});
    }
    return out.dump(2) + "\n";
  }

  char d = detail::delimiter_of(config.format);
  std::string out = join_row({"category", "cluster", "count", "share"}, d);
  for (const auto& b : breakdowns) {
    for (const auto& c : b.clusters) {
      out += join_row({b.category, c.cluster, std::to_string(c.count),
                       b.no_data ? std::string{"no data"} : format_double(c.share)},
                      d);
    }
  }
  return out;
}

namespace detail {

// Reads a series table written by run_series (tsv or csv, sniffed from the
// header row).
inline SeriesTable parse_series_table(std::string_view text) {
  char delimiter = '\t';
  auto first_line_end = text.find('\n');
  std::string_view head = text.substr(0, first_line_end);
  if (head.find('\t') == std::string_view::npos) delimiter = ',';

  auto rows = parse_delimited(text, delimiter);
  if (rows.empty()) throw DataError("series input is empty");
  const auto& header = rows.front();
  if (header.size() < 3 || header[0] != "window_start" || header.size() % 2 == 0)
    throw DataError("series input: expected a header of window_start plus "
                    "(observed, chi) column pairs");

  SeriesTable st;
  for (std::size_t c = 1; c < header.size(); c += 2) {
    std::string obs_label = header[c];
    std::string chi_label = header[c + 1];
    const std::string obs_suffix = " observed";
    const std::string chi_suffix = " chi";
    if (!obs_label.ends_with(obs_suffix) || !chi_label.ends_with(chi_suffix))
      throw DataError("series input: column pair " + std::to_string((c + 1) / 2) +
                      " is not \"<term> observed\", \"<term> chi\"");
    SeriesTable::Column col;
    col.label = obs_label.substr(0, obs_label.size() - obs_suffix.size());
    const std::string absent_suffix = " [absent]";
    if (col.label.ends_with(absent_suffix)) {
      col.label = col.label.substr(0, col.label.size() - absent_suffix.size());
      col.absent = true;
    }
    st.columns.push_back(std::move(col));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size())
      throw DataError("series input row " + std::to_string(r + 1) + ": expected " +
                      std::to_string(header.size()) + " fields");
    st.window_starts.push_back(row[0]);
    for (std::size_t c = 0; c < st.columns.size(); ++c) {
      try {
        st.columns[c].observed.push_back(std::stod(row[1 + 2 * c]));
        st.columns[c].chi.push_back(std::stod(row[2 + 2 * c]));
      } catch (const std::exception&) {
        throw DataError("series input row " + std::to_string(r + 1) +
                        ": numeric field expected");
      }
    }
  }
  if (st.window_starts.empty()) throw DataError("series input has no data rows");
  return st;
}

}  // namespace detail

// Renders a series table (produced by run_series) as a standalone SVG chart.
// Reads config.input, or stdin when the path is empty or "-".
inline std::string run_plot(const RunConfig& config) {
  std::string text;
  if (config.input.empty() || config.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(config.input);
    if (!in) throw DataError("cannot open series input: " + config.input);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return render_svg(detail::parse_series_table(text), config.metric);
}

}  // namespace bntrend

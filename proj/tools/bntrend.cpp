// Command-line front end: top / series / clusters / plot.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bntrend/bntrend.hpp"

namespace {

struct RawOptions {
  bntrend::RunConfig config;
  std::string from;
  std::string to;
  std::string mode = "surface";
  std::string format;
  std::string count_mode = "tokens";
  std::string metric = "observed";
};

void add_common_flags(CLI::App* cmd, RawOptions& raw, bool needs_range) {
  cmd->add_option("--input", raw.config.input, "JSONL corpus file")->required();
  auto* from = cmd->add_option("--from", raw.from, "analysis range start (YYYY-MM-DD)");
  auto* to = cmd->add_option("--to", raw.to, "analysis range end (YYYY-MM-DD)");
  if (needs_range) {
    from->required();
    to->required();
  }
  cmd->add_option("--window-days", raw.config.window_days, "window width in days")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--mode", raw.mode, "count surface forms or stems")
      ->check(CLI::IsMember({"surface", "stem"}))
      ->capture_default_str();
  cmd->add_option("--stopwords", raw.config.stopwords_path,
                  "stop-word file (one word per line; default: bundled list)");
  cmd->add_option("--stem-rules", raw.config.stem_rules_path,
                  "stem-rule file (suffix<TAB>min_stem_len; default: bundled rules)");
  cmd->add_flag("--bridge-stopwords", raw.config.bridge_stopwords,
                "let n-grams span removed stop words");
  cmd->add_flag("--keep-numeric", raw.config.keep_numeric,
                "keep purely numeric tokens as trend candidates");
  cmd->add_option("--out", raw.config.out_path, "output file (default: stdout)");
}

void finish_config(RawOptions& raw, const std::string& default_format, bool needs_range) {
  if (needs_range) {
    auto from = bntrend::Date::try_parse(raw.from);
    if (!from) throw bntrend::ConfigError("--from: invalid date \"" + raw.from + "\"");
    auto to = bntrend::Date::try_parse(raw.to);
    if (!to) throw bntrend::ConfigError("--to: invalid date \"" + raw.to + "\"");
    raw.config.from = *from;
    raw.config.to = *to;
  }
  raw.config.mode = bntrend::parse_token_mode(raw.mode);
  raw.config.format =
      bntrend::parse_output_format(raw.format.empty() ? default_format : raw.format);
  raw.config.count_mode = bntrend::parse_count_mode(raw.count_mode);
  raw.config.metric = bntrend::parse_series_metric(raw.metric);
}

void write_output(const bntrend::RunConfig& config, const std::string& payload) {
  if (config.out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw bntrend::ConfigError("cannot open output file: " + config.out_path);
  out << payload;
  if (!out) throw bntrend::ConfigError("failed writing output file: " + config.out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trending-topic analysis for date-stamped Bengali news corpora"};
  app.require_subcommand(1);

  RawOptions raw;
  std::string run_name;

  auto* top = app.add_subcommand("top", "rank trending n-grams per window");
  add_common_flags(top, raw, true);
  top->add_option("--n", raw.config.n, "n-gram size (1..3)")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  top->add_option("--top", raw.config.top, "entries per window")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  top->add_option("--min-count", raw.config.min_count,
                  "minimum window frequency for a candidate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  top->add_option("--format", raw.format, "tsv, csv or json")
      ->check(CLI::IsMember({"tsv", "csv", "json"}));
  top->callback([&] { run_name = "top"; });

  auto* series = app.add_subcommand("series", "per-window curves for chosen n-grams");
  add_common_flags(series, raw, true);
  series->add_option("--terms", raw.config.terms,
                     "n-gram to chart, words joined by spaces (repeatable)")
      ->required();
  series->add_option("--format", raw.format, "tsv, csv, json or svg")
      ->check(CLI::IsMember({"tsv", "csv", "json", "svg"}));
  series->add_option("--metric", raw.metric, "value plotted in svg mode")
      ->check(CLI::IsMember({"observed", "chi"}))
      ->capture_default_str();
  series->callback([&] { run_name = "series"; });

  auto* clusters = app.add_subcommand("clusters", "keyword-cluster shares per category");
  add_common_flags(clusters, raw, true);
  clusters->add_option("--clusters", raw.config.clusters_path,
                       "JSON file of cluster name -> word array")
      ->required();
  clusters->add_option("--count-mode", raw.count_mode, "count tokens or documents")
      ->check(CLI::IsMember({"tokens", "documents"}))
      ->capture_default_str();
  clusters->add_option("--format", raw.format, "tsv, csv or json")
      ->check(CLI::IsMember({"tsv", "csv", "json"}));
  clusters->callback([&] { run_name = "clusters"; });

  auto* plot = app.add_subcommand("plot", "render a series table as an SVG chart");
  plot->add_option("--input", raw.config.input, "series file from the series command; "
                                                "\"-\" or omitted reads stdin");
  plot->add_option("--metric", raw.metric, "observed or chi")
      ->check(CLI::IsMember({"observed", "chi"}))
      ->capture_default_str();
  plot->add_option("--out", raw.config.out_path, "output file (default: stdout)");
  plot->callback([&] { run_name = "plot"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    bool needs_range = run_name != "plot";
    std::string default_format = run_name == "plot" ? "svg" : "tsv";
    finish_config(raw, default_format, needs_range);
    std::string payload;
    if (run_name == "top")
      payload = bntrend::run_top(raw.config);
    else if (run_name == "series")
      payload = bntrend::run_series(raw.config);
    else if (run_name == "clusters")
      payload = bntrend::run_clusters(raw.config);
    else
      payload = bntrend::run_plot(raw.config);
    write_output(raw.config, payload);
  } catch (const bntrend::Error& e) {
    std::cerr << "bntrend: error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "bntrend: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

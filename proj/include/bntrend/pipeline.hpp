#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bntrend/stemmer.hpp"
#include "bntrend/stopwords.hpp"
#include "bntrend/text.hpp"

namespace bntrend {

enum class TokenMode { surface, stem };

// Why a run of content tokens ended.
enum class RunBoundary { sentence, removed_token, input_end };

// Maximal sequence of adjacent content tokens. N-gram adjacency is defined
// within one run, so n-grams never span sentence boundaries and (unless
// bridging is enabled) never span removed tokens.
struct ContentRun {
  std::vector<Token> tokens;
  RunBoundary boundary = RunBoundary::input_end;
};

struct PipelineOptions {
  TokenMode mode = TokenMode::surface;
  // When true, a removed token does not end the current run, so n-grams may
  // join words that were separated only by stop words or dropped numerals.
  bool bridge_stopwords = false;
  // Drop tokens made entirely of digits; dates and figures rarely make topics.
  bool drop_numeric_tokens = true;
};

namespace detail {

// Walks tokens of one sentence, removing filtered tokens and splitting runs.
inline void append_runs(std::span<const Token> tokens, const StopWordList& stops,
                        bool drop_numeric, bool bridge, RunBoundary end_reason,
                        std::vector<ContentRun>& out) {
  ContentRun current;
  for (const Token& token : tokens) {
    bool removed = stops.contains(token.surface) ||
                   (drop_numeric && is_numeric_token(token.surface));
    if (removed) {
      if (!bridge && !current.tokens.empty()) {
        current.boundary = RunBoundary::removed_token;
        out.push_back(std::move(current));
        current = ContentRun{};
      }
      continue;
    }
    current.tokens.push_back(token);
  }
  if (!current.tokens.empty()) {
    current.boundary = end_reason;
    out.push_back(std::move(current));
  }
}

}  // namespace detail

// Removes stop words from one document's token sequence. Runs split at each
// removed position unless bridging is requested. The concatenation of the
// returned runs is exactly the non-stop-word subsequence of the input.
inline std::vector<ContentRun> filter_stopwords(std::span<const Token> tokens,
                                                const StopWordList& stops,
                                                bool bridge = false) {
  std::vector<ContentRun> runs;
  detail::append_runs(tokens, stops, /*drop_numeric=*/false, bridge,
                      RunBoundary::input_end, runs);
  return runs;
}

// Full text pipeline: sentence split, normalize, tokenize, stem (in stem
// mode), then stop-word and numeral filtering.
inline std::vector<ContentRun> content_runs(std::string_view raw_text,
                                            const StopWordList& stops,
                                            const StemRuleSet& rules,
                                            const PipelineOptions& opts = {}) {
  std::vector<ContentRun> runs;
  std::vector<std::string> sentences = split_sentences(raw_text);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    std::vector<Token> tokens = tokenize(normalize(sentences[s]));
    if (opts.mode == TokenMode::stem)
      for (Token& t : tokens) t = stem(std::move(t), rules);
    RunBoundary end_reason =
        s + 1 == sentences.size() ? RunBoundary::input_end : RunBoundary::sentence;
    detail::append_runs(tokens, stops, opts.drop_numeric_tokens,
                        opts.bridge_stopwords, end_reason, runs);
  }
  return runs;
}

}  // namespace bntrend

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bntrend/unicode.hpp"

namespace bntrend {

// One separated word. `stem` is set once a stemmer has run over the token.
struct Token {
  std::string surface;
  std::optional<std::string> stem;

  const std::string& term(bool use_stem) const {
    return use_stem && stem ? *stem : surface;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

// Canonicalizes text for counting: composes the Bengali block canonically,
// strips zero-width (non-)joiners, turns punctuation and symbols into
// separators, and collapses separator runs into single spaces. Total and
// idempotent. Scripts outside Bengali/Latin pass through unchanged apart
// from the punctuation ranges listed in unicode.hpp.
inline std::string normalize(std::string_view raw) {
  std::vector<CodePoint> cps;
  cps.reserve(raw.size());
  for (CodePoint cp : decode_utf8(raw)) {
    if (is_zero_width(cp)) continue;
    append_canonical_decomposition(cp, cps);
  }
  canonical_reorder(cps);
  canonical_compose(cps);

  std::string out;
  out.reserve(raw.size());
  bool pending_separator = false;
  for (CodePoint cp : cps) {
    if (!is_word_char(cp)) {
      pending_separator = true;
      continue;
    }
    if (pending_separator && !out.empty()) out.push_back(' ');
    pending_separator = false;
    encode_utf8(cp, out);
  }
  return out;
}

// Splits normalized text on separators; each maximal non-separator span
// becomes one token, in input order.
inline std::vector<Token> tokenize(std::string_view normalized) {
  std::vector<Token> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(Token{current, std::nullopt});
      current.clear();
    }
  };
  for (CodePoint cp : decode_utf8(normalized)) {
    if (is_word_char(cp)) {
      encode_utf8(cp, current);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

// Splits raw text into sentence chunks at danda, western sentence punctuation
// and line breaks. Chunks are raw substrings; empty chunks are dropped.
inline std::vector<std::string> split_sentences(std::string_view raw) {
  std::vector<std::string> sentences;
  std::string current;
  auto flush = [&] {
    bool blank = true;
    for (char c : current)
      if (static_cast<unsigned char>(c) > ' ') blank = false;
    if (!blank) sentences.push_back(current);
    current.clear();
  };
  for (CodePoint cp : decode_utf8(raw)) {
    if (is_sentence_terminal(cp)) {
      flush();
    } else {
      encode_utf8(cp, current);
    }
  }
  flush();
  return sentences;
}

// True when every code point is an ASCII or Bengali digit.
inline bool is_numeric_token(std::string_view surface) {
  if (surface.empty()) return false;
  for (CodePoint cp : decode_utf8(surface))
    if (!is_digit(cp)) return false;
  return true;
}

}  // namespace bntrend

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bntrend {

using CodePoint = char32_t;

inline constexpr CodePoint kReplacementChar = 0xFFFD;
inline constexpr CodePoint kZeroWidthNonJoiner = 0x200C;
inline constexpr CodePoint kZeroWidthJoiner = 0x200D;
inline constexpr CodePoint kDanda = 0x0964;        // devanagari danda, shared by Bengali
inline constexpr CodePoint kDoubleDanda = 0x0965;

// Invalid sequences decode to U+FFFD and resynchronize on the next byte.
inline std::vector<CodePoint> decode_utf8(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    std::size_t len;
    CodePoint cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms and surrogates.
    if (ok) {
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
          (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
          (cp >= 0xD800 && cp <= 0xDFFF)) {
        ok = false;
      }
    }
    if (!ok) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void encode_utf8(CodePoint cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(const std::vector<CodePoint>& cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (CodePoint cp : cps) encode_utf8(cp, out);
  return out;
}

inline std::size_t count_code_points(std::string_view text) {
  std::size_t n = 0;
  for (char c : text)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

// Drops a leading UTF-8 byte-order mark, as text editors like to plant one.
inline void strip_utf8_bom(std::string& text) {
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
}

inline bool is_ascii_digit(CodePoint cp) { return cp >= '0' && cp <= '9'; }
inline bool is_bengali_digit(CodePoint cp) { return cp >= 0x09E6 && cp <= 0x09EF; }
inline bool is_digit(CodePoint cp) { return is_ascii_digit(cp) || is_bengali_digit(cp); }

inline bool is_zero_width(CodePoint cp) {
  return cp == kZeroWidthJoiner || cp == kZeroWidthNonJoiner;
}

// Assigned letters, combining signs and digits of the Bengali block.
inline bool is_bengali_word_char(CodePoint cp) {
  if (cp < 0x0980 || cp > 0x09FF) return false;
  return (cp >= 0x0980 && cp <= 0x0983) || (cp >= 0x0985 && cp <= 0x098C) ||
         cp == 0x098F || cp == 0x0990 || (cp >= 0x0993 && cp <= 0x09A8) ||
         (cp >= 0x09AA && cp <= 0x09B0) || cp == 0x09B2 ||
         (cp >= 0x09B6 && cp <= 0x09B9) || (cp >= 0x09BC && cp <= 0x09C4) ||
         cp == 0x09C7 || cp == 0x09C8 || (cp >= 0x09CB && cp <= 0x09CE) ||
         cp == 0x09D7 || cp == 0x09DC || cp == 0x09DD ||
         (cp >= 0x09DF && cp <= 0x09E3) || (cp >= 0x09E6 && cp <= 0x09F1) ||
         cp == 0x09FE;
}

// Word characters survive normalization; everything else becomes a separator.
inline bool is_word_char(CodePoint cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= 'a' && cp <= 'z');
  }
  if (cp < 0x0100) {  // latin-1: keep letters, drop punctuation and symbols
    return (cp >= 0xC0 && cp != 0xD7 && cp != 0xF7);
  }
  if (cp >= 0x0980 && cp <= 0x09FF) return is_bengali_word_char(cp);
  if (cp == kDanda || cp == kDoubleDanda) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x2E00 && cp <= 0x2E7F) return false;  // supplemental punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp == 0x2028 || cp == 0x2029) return false;
  if (cp == kReplacementChar) return false;
  return true;
}

// Sentence-terminal marks, checked on raw text before normalization strips them.
inline bool is_sentence_terminal(CodePoint cp) {
  return cp == kDanda || cp == kDoubleDanda || cp == '.' || cp == '!' ||
         cp == '?' || cp == '\n' || cp == '\r' || cp == 0x2026;
}

// ---------------------------------------------------------------------------
// Canonical composition for the Bengali block.
//
// The block has five precomposed code points with canonical decompositions.
// Two of them (the O and AU vowel signs) recompose under NFC; the other three
// (RRA, RHA, YYA) are composition exclusions, so their canonical form is the
// base letter followed by nukta. Combining-class reordering only matters for
// nukta (ccc 7) against virama (ccc 9).
// ---------------------------------------------------------------------------

inline int combining_class(CodePoint cp) {
  if (cp == 0x09BC) return 7;    // nukta
  if (cp == 0x09CD) return 9;    // virama
  if (cp == 0x09FE) return 230;  // sandhi mark
  return 0;
}

// Appends the canonical (NFD-side) expansion of one Bengali code point.
inline void append_canonical_decomposition(CodePoint cp, std::vector<CodePoint>& out) {
  switch (cp) {
    case 0x09CB: out.push_back(0x09C7); out.push_back(0x09BE); break;  // o
    case 0x09CC: out.push_back(0x09C7); out.push_back(0x09D7); break;  // au
    case 0x09DC: out.push_back(0x09A1); out.push_back(0x09BC); break;  // rra
    case 0x09DD: out.push_back(0x09A2); out.push_back(0x09BC); break;  // rha
    case 0x09DF: out.push_back(0x09AF); out.push_back(0x09BC); break;  // yya
    default: out.push_back(cp); break;
  }
}

// Canonical order: bubble adjacent nonzero-ccc marks into nondecreasing order.
inline void canonical_reorder(std::vector<CodePoint>& cps) {
  for (std::size_t i = 1; i < cps.size(); ++i) {
    std::size_t j = i;
    while (j > 0) {
      int a = combining_class(cps[j - 1]);
      int b = combining_class(cps[j]);
      if (a > b && b > 0) {
        std::swap(cps[j - 1], cps[j]);
        --j;
      } else {
        break;
      }
    }
  }
}

// Recompose the two non-excluded Bengali pairs in place.
inline void canonical_compose(std::vector<CodePoint>& cps) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < cps.size(); ++r) {
    if (w > 0 && cps[w - 1] == 0x09C7) {
      if (cps[r] == 0x09BE) {
        cps[w - 1] = 0x09CB;
        continue;
      }
      if (cps[r] == 0x09D7) {
        cps[w - 1] = 0x09CC;
        continue;
      }
    }
    cps[w++] = cps[r];
  }
  cps.resize(w);
}

}  // namespace bntrend

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bntrend/bntrend.hpp"

namespace testsupport {

inline bntrend::Date date(const char* iso) {
  auto d = bntrend::Date::try_parse(iso);
  if (!d) throw std::runtime_error(std::string{"bad test date: "} + iso);
  return *d;
}

// Scratch directory removed on destruction.
class TempDir {
public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    static std::mt19937_64 rng{std::random_device{}()};
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = base / ("bntrend-test-" + std::to_string(rng()));
      if (std::filesystem::create_directory(candidate)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("could not create temp dir");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    auto p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One bursty phrase: `observed` occurrences inside the target window and
// total-observed more spread round-robin over the other windows. Every
// occurrence is its own sentence, so the phrase contributes exactly one
// n-gram per occurrence and nothing else.
struct BurstSpec {
  std::vector<std::string> words;
  int window = 1;  // 1-based
  int observed = 0;
  int total = 0;
};

inline std::string build_burst_corpus(bntrend::Date start, int window_days, int window_count,
                                      const std::vector<BurstSpec>& specs) {
  std::vector<std::string> window_text(static_cast<std::size_t>(window_count));
  auto sentence_of = [](const BurstSpec& s) {
    std::string text;
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      if (i) text += " ";
      text += s.words[i];
    }
    return text + "।";  // danda
  };
  for (const auto& s : specs) {
    std::string sentence = sentence_of(s);
    for (int i = 0; i < s.observed; ++i)
      window_text[static_cast<std::size_t>(s.window - 1)] += sentence;
    int rest = s.total - s.observed;
    for (int w = 0; rest > 0; ++w) {
      int idx = w % window_count;
      if (idx + 1 == s.window) continue;
      window_text[static_cast<std::size_t>(idx)] += sentence;
      --rest;
    }
  }
  std::string jsonl;
  for (int i = 0; i < window_count; ++i) {
    if (window_text[static_cast<std::size_t>(i)].empty()) continue;
    nlohmann::json doc{{"id", "w" + std::to_string(i + 1)},
                       {"date", start.plus_days(static_cast<long>(i) * window_days).to_string()},
                       {"body", window_text[static_cast<std::size_t>(i)]}};
    jsonl += doc.dump() + "\n";
  }
  return jsonl;
}

inline const std::vector<BurstSpec>& bigram_burst_specs() {
  static const std::vector<BurstSpec> specs{
      {{"মহান", "স্বাধীনতা"}, 13, 29, 42},
      {{"স্বাধীনতা", "দিবস"}, 13, 34, 59},
      {{"তদন্ত", "সংস্থা"}, 13, 27, 41},
      {{"স্বাধীন", "বাংলা"}, 13, 27, 45},
      {{"বিআরটিসির", "বাস"}, 13, 12, 12},
  };
  return specs;
}

inline const std::vector<BurstSpec>& trigram_burst_specs() {
  static const std::vector<BurstSpec> specs{
      {{"শহীদ", "মিনারে", "ফুল"}, 8, 30, 33},
      {{"আন্তর্জাতিক", "মাতৃভাষা", "দিবস"}, 8, 32, 45},
      {{"শহীদ", "মিনারে", "পুষ্পার্ঘ্য"}, 8, 15, 17},
      {{"বিমানবন্দরের", "নাম", "পরিবর্তন"}, 8, 14, 17},
      {{"মাতৃভাষা", "দিবস", "উপলক্ষে"}, 8, 15, 20},
  };
  return specs;
}

inline std::string small_stopword_file() { return "এবং\nও\nকিন্তু\n"; }

// Mixed Bengali / Latin / punctuation text, including composed and
// decomposed spellings of the same letters and zero-width joiners.
inline std::string random_mixed_text(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces{
      "ক", "খ", "গ", "মা", "নদী", "ফুল", "য়",          // precomposed yya
      "য়",                                      // ya + nukta
      "ড়", "ড়",                            // rra, both spellings
      "কো", "কো",                             // o vowel, both spellings
      "‌", "‍", "abc", "42", "১২", " ", "  ",
      "।", ",", ".", "!", "?", "\"", "-", "(", ")", "\t", "\n", "…"};
  std::string out;
  int len = std::uniform_int_distribution<int>(0, 24)(rng);
  for (int i = 0; i < len; ++i)
    out += pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)];
  return out;
}

// ---------------------------------------------------------------------------
// Randomized corpora with a known token structure. The generator keeps the
// structured form, so a brute-force oracle can count n-grams by enumerating
// (document, position) pairs without ever parsing text.
// ---------------------------------------------------------------------------

struct GenToken {
  std::string word;
  bool sentence_break_after = false;
};

struct GenDoc {
  std::string id;
  bntrend::Date date;
  std::vector<GenToken> title;
  std::vector<GenToken> body;  // never empty
};

struct GenCorpus {
  bntrend::Date start;
  bntrend::Date end;
  int window_days = 7;
  std::vector<GenDoc> docs;
};

inline const std::vector<std::string>& content_vocab() {
  static const std::vector<std::string> words{
      "ঢাকা", "নদী", "ফুল", "মেলা", "বই", "খেলা", "রাত",
      "দিন", "শহর", "গান", "আকাশ", "মাঠ", "dhaka", "news", "cricket"};
  return words;
}

inline const std::vector<std::string>& stop_vocab() {
  static const std::vector<std::string> words{"এবং", "ও", "কিন্তু", "না", "এই"};
  return words;
}

inline const std::vector<std::string>& numeric_vocab() {
  static const std::vector<std::string> words{"১২৩", "2010", "৪৫"};
  return words;
}

inline GenCorpus generate_corpus(std::uint64_t seed) {
  std::mt19937_64 rng{seed};
  auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  GenCorpus corpus;
  corpus.start = date("2010-01-01");
  long range_days = std::uniform_int_distribution<long>(1, 60)(rng);
  corpus.end = corpus.start.plus_days(range_days - 1);
  corpus.window_days = std::uniform_int_distribution<int>(1, 14)(rng);

  int doc_count = std::uniform_int_distribution<int>(1, 20)(rng);
  for (int d = 0; d < doc_count; ++d) {
    GenDoc doc;
    doc.id = "d" + std::to_string(d);
    // mostly in range, a few outside on either side
    long offset = std::uniform_int_distribution<long>(-5, range_days + 4)(rng);
    doc.date = d == 0 ? corpus.start : corpus.start.plus_days(offset);
    auto gen_tokens = [&](int count) {
      std::vector<GenToken> tokens;
      for (int i = 0; i < count; ++i) {
        int kind = std::uniform_int_distribution<int>(0, 99)(rng);
        GenToken t;
        if (kind < 25)
          t.word = pick(stop_vocab());
        else if (kind < 40)
          t.word = pick(numeric_vocab());
        else
          t.word = pick(content_vocab());
        t.sentence_break_after = std::uniform_int_distribution<int>(0, 4)(rng) == 0;
        tokens.push_back(std::move(t));
      }
      return tokens;
    };
    doc.title = gen_tokens(std::uniform_int_distribution<int>(0, 4)(rng));
    doc.body = gen_tokens(std::uniform_int_distribution<int>(1, 46)(rng));
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

inline std::string render_tokens(const std::vector<GenToken>& tokens) {
  std::string text;
  for (const auto& t : tokens) {
    if (!text.empty()) text += " ";
    text += t.word;
    if (t.sentence_break_after) text += "।";
  }
  return text;
}

inline std::string render_jsonl(const GenCorpus& corpus) {
  std::string jsonl;
  for (const auto& doc : corpus.docs) {
    nlohmann::json j{{"id", doc.id}, {"date", doc.date.to_string()}};
    if (!doc.title.empty()) j["title"] = render_tokens(doc.title);
    j["body"] = render_tokens(doc.body);
    jsonl += j.dump() + "\n";
  }
  return jsonl;
}

// Position-enumeration oracle: materializes every (document, position) pair
// and counts n-grams over runs rebuilt from the generated token structure.
inline std::vector<std::map<bntrend::NGram, std::int64_t>> oracle_counts(
    const GenCorpus& corpus, int n, const std::set<std::string>& stops, bool drop_numeric) {
  long total_days = corpus.end - corpus.start + 1;
  long window_count = (total_days + corpus.window_days - 1) / corpus.window_days;
  std::vector<std::map<bntrend::NGram, std::int64_t>> windows(
      static_cast<std::size_t>(window_count));

  auto all_digits = [](const std::string& w) {
    auto cps = bntrend::decode_utf8(w);
    if (cps.empty()) return false;
    for (auto cp : cps)
      if (!bntrend::is_digit(cp)) return false;
    return true;
  };

  for (const auto& doc : corpus.docs) {
    if (doc.date < corpus.start || doc.date > corpus.end) continue;
    long w = (doc.date - corpus.start) / corpus.window_days;
    auto& counts = windows[static_cast<std::size_t>(w)];

    // title tokens, then an implicit sentence break, then body tokens
    std::vector<GenToken> combined = doc.title;
    if (!combined.empty()) combined.back().sentence_break_after = true;
    combined.insert(combined.end(), doc.body.begin(), doc.body.end());

    std::vector<std::vector<std::string>> runs;
    std::vector<std::string> current;
    for (const auto& t : combined) {
      bool removed = stops.count(t.word) > 0 || (drop_numeric && all_digits(t.word));
      if (removed) {
        if (!current.empty()) runs.push_back(std::move(current));
        current = {};
      } else {
        current.push_back(t.word);
      }
      if (t.sentence_break_after && !current.empty()) {
        runs.push_back(std::move(current));
        current = {};
      }
    }
    if (!current.empty()) runs.push_back(std::move(current));

    for (const auto& run : runs) {
      if (run.size() < static_cast<std::size_t>(n)) continue;
      for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= run.size(); ++i) {
        std::vector<std::string> terms(run.begin() + static_cast<long>(i),
                                       run.begin() + static_cast<long>(i) + n);
        counts[bntrend::NGram(std::move(terms))] += 1;
      }
    }
  }
  return windows;
}

}  // namespace testsupport

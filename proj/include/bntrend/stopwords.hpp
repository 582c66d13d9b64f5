#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <string>
#include <string_view>

#include "bntrend/bundled_stopwords.hpp"
#include "bntrend/error.hpp"
#include "bntrend/text.hpp"

namespace bntrend {

// Set of words excluded from content tokens. Entries are stored normalized,
// so membership is exact string equality on normalized surfaces.
class StopWordList {
public:
  StopWordList() = default;

  static StopWordList from_stream(std::istream& in, std::string source_name) {
    StopWordList list;
    list.source_ = std::move(source_name);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (first) strip_utf8_bom(line);
      first = false;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::string entry = normalize(line);
      if (!entry.empty()) list.entries_.insert(std::move(entry));
    }
    if (in.bad()) throw ConfigError("failed reading stop-word list: " + list.source_);
    return list;
  }

  static StopWordList from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open stop-word file: " + path.string());
    return from_stream(in, path.string());
  }

  static const StopWordList& bundled() {
    static const StopWordList list = [] {
      StopWordList l;
      l.source_ = "bundled";
      for (std::string_view w : kBundledStopWords) l.entries_.insert(normalize(w));
      return l;
    }();
    return list;
  }

  static const StopWordList& empty() {
    static const StopWordList list;
    return list;
  }

  bool contains(std::string_view normalized_word) const {
    return entries_.find(normalized_word) != entries_.end();
  }

  std::size_t size() const { return entries_.size(); }
  const std::string& source() const { return source_; }
  const std::set<std::string, std::less<>>& entries() const { return entries_; }

private:
  std::set<std::string, std::less<>> entries_;
  std::string source_ = "empty";
};

inline StopWordList load_stopwords(std::istream& in, std::string source_name = "stream") {
  return StopWordList::from_stream(in, std::move(source_name));
}

}  // namespace bntrend

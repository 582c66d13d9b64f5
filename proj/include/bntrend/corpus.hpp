#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bntrend/date.hpp"
#include "bntrend/error.hpp"
#include "bntrend/unicode.hpp"

namespace bntrend {

// One news article.
struct Document {
  std::string id;
  Date date;
  std::string category;  // empty = uncategorized
  std::string title;
  std::string body;

  // Headlines count toward statistics: title joins the body ahead of it,
  // separated by a sentence boundary.
  std::string counting_text() const {
    if (title.empty()) return body;
    return title + "।" + body;
  }
};

// Parses one JSONL object. Unknown keys are ignored.
inline Document parse_document(std::string_view json_line) {
  nlohmann::json value = nlohmann::json::parse(json_line, nullptr, false);
  if (value.is_discarded()) throw DataError("malformed JSON");
  if (!value.is_object()) throw DataError("not a JSON object");

  auto required_string = [&](const char* key) -> std::string {
    auto it = value.find(key);
    if (it == value.end()) throw DataError(std::string("missing field: ") + key);
    if (!it->is_string()) throw DataError(std::string("field is not a string: ") + key);
    return it->get<std::string>();
  };
  auto optional_string = [&](const char* key) -> std::string {
    auto it = value.find(key);
    if (it == value.end() || it->is_null()) return {};
    if (!it->is_string()) throw DataError(std::string("field is not a string: ") + key);
    return it->get<std::string>();
  };

  Document doc;
  doc.id = required_string("id");
  if (doc.id.empty()) throw DataError("empty id");

  std::string date_text = required_string("date");
  auto date = Date::try_parse(date_text);
  if (!date) throw DataError("invalid date: \"" + date_text + "\" (expected YYYY-MM-DD)");
  doc.date = *date;

  doc.body = required_string("body");
  bool blank = true;
  for (char c : doc.body)
    if (static_cast<unsigned char>(c) > ' ') blank = false;
  if (blank) throw DataError("empty body");

  doc.category = optional_string("category");
  // category labels flow into TSV reports verbatim
  if (doc.category.find_first_of("\t\r\n") != std::string::npos)
    throw DataError("category must not contain tabs or line breaks");
  doc.title = optional_string("title");
  return doc;
}

// Immutable, ordered document collection with unique ids.
class Corpus {
public:
  Corpus() = default;

  explicit Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
    std::map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < documents_.size(); ++i) {
      auto [it, inserted] = seen.emplace(documents_[i].id, i);
      if (!inserted) throw DataError("duplicate id \"" + documents_[i].id + "\"");
      if (!range_) {
        range_ = {documents_[i].date, documents_[i].date};
      } else {
        range_->first = std::min(range_->first, documents_[i].date);
        range_->second = std::max(range_->second, documents_[i].date);
      }
    }
  }

  std::span<const Document> documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }

  // (min date, max date) over all documents; empty corpus has no range.
  const std::optional<std::pair<Date, Date>>& date_range() const { return range_; }

private:
  std::vector<Document> documents_;
  std::optional<std::pair<Date, Date>> range_;
};

// Reads JSONL, one document per line. Blank lines are skipped; any line-level
// problem aborts the load with the line number attached.
inline Corpus load_corpus(std::istream& in) {
  std::vector<Document> documents;
  std::map<std::string, int> line_of_id;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_utf8_bom(line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (static_cast<unsigned char>(c) > ' ') blank = false;
    if (blank) continue;
    Document doc;
    try {
      doc = parse_document(line);
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    auto [it, inserted] = line_of_id.emplace(doc.id, line_no);
    if (!inserted)
      throw DataError("duplicate id \"" + doc.id + "\" at lines " +
                      std::to_string(it->second) + " and " + std::to_string(line_no));
    documents.push_back(std::move(doc));
  }
  if (in.bad()) throw DataError("failed reading corpus stream");
  return Corpus(std::move(documents));
}

inline Corpus load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file: " + path.string());
  return load_corpus(in);
}

}  // namespace bntrend

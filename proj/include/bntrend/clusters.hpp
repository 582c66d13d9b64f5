#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bntrend/corpus.hpp"
#include "bntrend/error.hpp"
#include "bntrend/pipeline.hpp"

namespace bntrend {

// Manually curated set of terms treated as one concept. Members are stored
// normalized; within one analysis, clusters must be pairwise disjoint.
struct KeywordCluster {
  std::string name;
  std::vector<std::string> members;
};

// JSON object of cluster name -> array of member words.
inline std::vector<KeywordCluster> load_clusters(std::string_view json_text) {
  if (json_text.starts_with("\xEF\xBB\xBF")) json_text.remove_prefix(3);
  nlohmann::ordered_json value = nlohmann::ordered_json::parse(json_text, nullptr, false);
  if (value.is_discarded()) throw ConfigError("cluster file: malformed JSON");
  if (!value.is_object())
    throw ConfigError("cluster file: expected an object of name -> word array");

  std::vector<KeywordCluster> clusters;
  std::set<std::string, std::less<>> all_members;
  for (const auto& [name, members] : value.items()) {
    if (name.empty() || name.find_first_of("\t\r\n") != std::string::npos)
      throw ConfigError("cluster names must be non-empty without tabs or line breaks");
    if (!members.is_array())
      throw ConfigError("cluster \"" + name + "\": expected an array of words");
    KeywordCluster cluster{name, {}};
    std::set<std::string, std::less<>> own;
    for (const auto& member : members) {
      if (!member.is_string())
        throw ConfigError("cluster \"" + name + "\": members must be strings");
      std::string word = normalize(member.get<std::string>());
      if (word.empty() || word.find(' ') != std::string::npos)
        throw ConfigError("cluster \"" + name + "\": member \"" + member.get<std::string>() +
                          "\" is not a single word");
      if (all_members.contains(word))
        throw ConfigError("term \"" + word + "\" appears in more than one cluster");
      if (own.insert(word).second) {
        all_members.insert(word);
        cluster.members.push_back(std::move(word));
      }
    }
    if (cluster.members.empty())
      throw ConfigError("cluster \"" + name + "\" has no members");
    clusters.push_back(std::move(cluster));
  }
  if (clusters.empty()) throw ConfigError("cluster file defines no clusters");
  return clusters;
}

inline std::vector<KeywordCluster> load_clusters_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open cluster file: " + path.string());
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return load_clusters(text);
}

enum class CountMode { tokens, documents };

struct ClusterOptions {
  CountMode count_mode = CountMode::tokens;
  TokenMode token_mode = TokenMode::surface;
};

struct ClusterCount {
  std::string cluster;
  std::int64_t count = 0;
};

// Counts member-term mentions per cluster over the matching documents.
// Matching is exact equality of normalized unigram tokens; stop words are
// not removed here since members are explicit user-chosen terms. In stem
// mode both the tokens and the members are stemmed before comparison.
inline std::vector<ClusterCount> cluster_mentions(const Corpus& corpus,
                                                  const std::vector<KeywordCluster>& clusters,
                                                  const std::optional<std::string>& category,
                                                  const ClusterOptions& opts = {},
                                                  const StemRuleSet& rules = StemRuleSet::none()) {
  bool use_stem = opts.token_mode == TokenMode::stem;
  struct MemberSet {
    std::set<std::string, std::less<>> terms;
  };
  std::vector<MemberSet> member_sets(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (const auto& m : clusters[c].members)
      member_sets[c].terms.insert(use_stem ? rules.apply(m) : m);

  std::vector<ClusterCount> counts(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) counts[c].cluster = clusters[c].name;

  std::vector<std::int64_t> per_doc(clusters.size());
  for (const Document& doc : corpus.documents()) {
    if (category && doc.category != *category) continue;
    std::fill(per_doc.begin(), per_doc.end(), 0);
    for (const Token& token : tokenize(normalize(doc.counting_text()))) {
      const std::string term = use_stem ? rules.apply(token.surface) : token.surface;
      for (std::size_t c = 0; c < clusters.size(); ++c)
        if (member_sets[c].terms.contains(term)) ++per_doc[c];
    }
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (opts.count_mode == CountMode::tokens)
        counts[c].count += per_doc[c];
      else if (per_doc[c] > 0)
        counts[c].count += 1;
    }
  }
  return counts;
}

struct ClusterShare {
  std::string cluster;
  std::int64_t count = 0;
  double share = 0.0;  // percent; meaningless when the breakdown has no data
};

struct CategoryBreakdown {
  std::string category;
  bool no_data = false;  // true when no cluster had any mention
  std::vector<ClusterShare> clusters;
};

// Percentage share of each cluster's mentions. Shares sum to 100 whenever
// any mention exists; a zero total is flagged rather than divided.
inline CategoryBreakdown category_share(const std::vector<ClusterCount>& counts,
                                        std::string category = {}) {
  if (counts.empty()) throw ConfigError("category share requires at least one cluster");
  CategoryBreakdown breakdown{std::move(category), false, {}};
  std::int64_t total = 0;
  for (const auto& c : counts) {
    if (c.count < 0) throw ConfigError("cluster counts must be non-negative");
    total += c.count;
  }
  breakdown.no_data = total == 0;
  breakdown.clusters.reserve(counts.size());
  for (const auto& c : counts) {
    double share = breakdown.no_data
                       ? 0.0
                       : 100.0 * static_cast<double>(c.count) / static_cast<double>(total);
    breakdown.clusters.push_back(ClusterShare{c.cluster, c.count, share});
  }
  return breakdown;
}

}  // namespace bntrend

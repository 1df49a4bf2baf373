#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qa/expansion.hpp"
#include "qa/resources.hpp"
#include "qa/wsd.hpp"

namespace qa {

enum class Granularity { Sentence, Paragraph, Document };

std::string_view to_string(Granularity g);
Granularity parse_granularity(std::string_view s);

struct IndexConfig {
  std::string label = "custom";
  ExpansionConfig expansion;

  bool operator==(const IndexConfig&) const = default;
};

/// The four evaluation presets: plancher, syn-no-sem, syn-sem, all.
IndexConfig config_preset(std::string_view name);
const std::vector<std::string>& preset_names();
IndexConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IndexConfig& c);

struct CorpusDocument {
  std::string id;
  std::vector<std::string> paragraphs;
};

/// "#DOC id" lines open documents; blank lines separate paragraphs.
std::vector<CorpusDocument> parse_corpus(std::string_view content, const std::string& source = "<corpus>");
std::vector<CorpusDocument> load_corpus(const std::string& path);

struct SentenceRecord {
  std::string doc_id;
  int paragraph = 0;  // 1-based within the document
  int sentence = 0;   // 1-based within the document
  std::string text;
  std::vector<EnrichedDependency> dependencies;
  std::vector<SenseAssignment> senses;

  bool operator==(const SentenceRecord&) const = default;
};

struct Posting {
  std::size_t record = 0;
  std::size_t dependency = 0;
  std::size_t slot = 0;
  Origin origin = Origin::Original;

  auto operator<=>(const Posting&) const = default;
};

using PostingMap = std::map<std::string, std::vector<Posting>>;

/// Postings over original and alternate lemmas of every dependency slot,
/// skipping stop lemmas.
PostingMap build_postings(const std::vector<SentenceRecord>& records, const std::set<std::string>& stop_lemmas);

/// Enriched informational structure of a corpus. Immutable once built.
class Index {
 public:
  static constexpr int kVersion = 1;

  Index() = default;
  static Index build(const std::vector<CorpusDocument>& corpus, const Resources& resources, const RuleSet& rules,
                     const IndexConfig& config, unsigned threads = 0);

  const IndexConfig& config() const { return config_; }
  const std::vector<SentenceRecord>& records() const { return records_; }
  const PostingMap& postings() const { return postings_; }
  const std::set<std::string>& stop_lemmas() const { return stop_lemmas_; }

  /// Keys of units holding at least one posting for `lemma`.
  std::set<std::string> lookup(const std::string& lemma, Granularity g) const;
  /// "doc", "doc/p2" or "doc/s3" depending on granularity.
  static std::string unit_key(const SentenceRecord& r, Granularity g);

  nlohmann::json to_json() const;
  static Index from_json(const nlohmann::json& j, const std::string& source = "<index>");
  void save(const std::string& path) const;
  static Index load(const std::string& path);

  bool operator==(const Index&) const = default;

 private:
  IndexConfig config_;
  std::set<std::string> stop_lemmas_;
  std::vector<SentenceRecord> records_;
  PostingMap postings_;
};

/// Analysis, WSD, and enrichment of one sentence's text into records.
std::vector<SentenceRecord> analyze_paragraph(const std::string& doc_id, int paragraph, int first_sentence,
                                              std::string_view text, const Resources& resources,
                                              const RuleSet& rules, const IndexConfig& config);

nlohmann::json to_json(const EnrichedDependency& d);
EnrichedDependency enriched_dependency_from_json(const nlohmann::json& j);

}  // namespace qa

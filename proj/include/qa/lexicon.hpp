#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qa/pattern.hpp"
#include "qa/text.hpp"

namespace qa {

struct Derivative {
  std::string lemma;
  Pos pos = Pos::Noun;
  std::string kind;  // e.g. "agent", "action", "noun-verb"

  auto operator<=>(const Derivative&) const = default;
};

struct SenseEntry {
  std::string lemma;
  Pos pos = Pos::Noun;
  int sense_id = 0;
  std::string gloss;
  std::string sem_class;
  std::string domain;
  std::vector<std::string> parasynonyms;
  std::vector<Derivative> derivatives;
  std::vector<std::string> examples;
  std::vector<std::string> schemas;

  bool operator==(const SenseEntry&) const = default;
};

using HeadwordKey = std::pair<std::string, Pos>;

/// Headwords keyed by (lemma, pos), each with its numbered senses.
/// Immutable once loaded.
class SenseDictionary {
 public:
  using Map = std::map<HeadwordKey, std::vector<SenseEntry>>;

  SenseDictionary() = default;
  /// Validates every entry; `source` names the origin in diagnostics.
  static SenseDictionary from_json(const nlohmann::json& doc, const std::string& source = "<json>");
  nlohmann::json to_json() const;

  /// nullptr when (lemma, pos) is not a headword.
  const std::vector<SenseEntry>* senses(const std::string& lemma, Pos pos) const;
  const SenseEntry* find_sense(const std::string& lemma, Pos pos, int sense_id) const;
  /// Throws DataError naming the triple when absent.
  const SenseEntry& sense(const std::string& lemma, Pos pos, int sense_id) const;
  /// All senses of a lemma across parts of speech.
  std::vector<const SenseEntry*> senses_of_lemma(const std::string& lemma) const;
  bool has_lemma(const std::string& lemma) const;

  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool operator==(const SenseDictionary&) const = default;

 private:
  Map entries_;
  std::multimap<std::string, HeadwordKey> by_lemma_;
};

SenseDictionary load_sense_dictionary(const std::string& path);

struct SynonymGroup {
  std::string source;
  std::vector<std::string> members;
};

/// Unsensed synonym groups from external dictionaries.
class SynonymGroups {
 public:
  SynonymGroups() = default;
  static SynonymGroups from_json(const nlohmann::json& doc, const std::string& source = "<json>");

  /// Members of every group containing `lemma`, minus `lemma` itself.
  std::set<std::string> synonyms_of(const std::string& lemma) const;
  const std::vector<SynonymGroup>& groups() const { return groups_; }

 private:
  std::vector<SynonymGroup> groups_;
  std::multimap<std::string, std::size_t> by_member_;
};

SynonymGroups load_synonym_groups(const std::string& path);

/// Sense-filtered synonyms of one sense: its parasynonyms plus every external
/// synonym that is a headword with some sense sharing both sem_class and domain.
std::set<std::string> sense_filtered_synonyms(const std::string& lemma, Pos pos, int sense_id,
                                              const SenseDictionary& dict,
                                              const SynonymGroups& groups);

/// Derivatives attached to exactly that sense.
std::set<Derivative> derivatives_of(const std::string& lemma, Pos pos, int sense_id,
                                    const SenseDictionary& dict);

/// Correspondence between the dependency context of a word and that of its
/// derivative. "$X" is the original word, "$D" the derivative, "?name" a
/// variable, anything else a literal lemma.
struct RewriteSchema {
  std::string kind;
  std::vector<DependencyPattern> from;
  std::vector<DependencyPattern> to;
};

std::vector<RewriteSchema> rewrite_schemas_from_json(const nlohmann::json& doc,
                                                     const std::string& source = "<json>");
std::vector<RewriteSchema> load_rewrite_schemas(const std::string& path);

/// Parses a JSON file, converting syntax errors into ParseError with a line number.
nlohmann::json parse_json_file(const std::string& path);

}  // namespace qa

#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qa/lexicon.hpp"
#include "qa/morpho.hpp"
#include "qa/syntax.hpp"

namespace qa {

/// Wh-word behaviour in questions.
struct Interrogative {
  std::string lemma;
  std::set<std::string> traits;
  /// "subject", "object" or "adverbial".
  std::string role = "subject";
  /// Preposition introducing the focus for adverbial interrogatives (où -> à).
  std::string preposition;
};

/// Everything the analysis chain reads. Immutable once loaded and safe to
/// share between threads.
struct Resources {
  SenseDictionary dictionary;
  SynonymGroups synonyms;
  std::vector<RewriteSchema> schemas;
  FullFormLexicon forms;
  Abbreviations abbreviations;
  Grammar grammar;
  std::set<std::string> stop_lemmas;
  std::map<std::string, Interrogative> interrogatives;

  bool is_stop(const std::string& lemma) const { return stop_lemmas.count(lemma) > 0; }
};

/// Loads the standard file set from a lexicon directory:
/// dictionary.json, synonyms.json, schemas.json, fullforms.json,
/// grammar.json, abbreviations.json, stoplemmas.json, interrogatives.json.
Resources load_resources(const std::string& directory);

struct AnalyzedSentence {
  TokenSequence tokens;
  std::vector<Chunk> chunks;
  std::vector<Dependency> dependencies;
};

/// chunk + extract_dependencies over an already tagged sentence.
AnalyzedSentence parse_sentence(TokenSequence tokens, const Resources& resources);
/// tokenize -> analyze -> tag -> chunk -> extract.
std::vector<AnalyzedSentence> parse_text(std::string_view text, const Resources& resources);

}  // namespace qa

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qa/text.hpp"

namespace qa {

struct MorphReading {
  std::string lemma;
  Pos pos = Pos::Noun;
  std::vector<std::string> features;
  /// Determiner folded into a preposition amalgam ("des" = de + les).
  std::string amalgam;

  bool operator==(const MorphReading&) const = default;
};

struct Token {
  std::string surface;
  std::size_t begin = 0;  // byte offsets into the tokenized text
  std::size_t end = 0;
  std::size_t sentence = 0;
  bool clitic = false;  // split off a verb by a hyphen ("fut-il")
  std::vector<MorphReading> readings;
  int selected = -1;

  const MorphReading& reading() const;
  const std::string& lemma() const { return reading().lemma; }
  Pos pos() const { return reading().pos; }
  bool has_pos(Pos pos) const;
  bool operator==(const Token&) const = default;
};

using TokenSequence = std::vector<Token>;

/// Surface -> readings table; lookup falls back to the lowercased surface.
class FullFormLexicon {
 public:
  FullFormLexicon() = default;
  static FullFormLexicon from_json(const nlohmann::json& doc, const std::string& source = "<json>");
  const std::vector<MorphReading>* find(const std::string& surface) const;
  std::size_t size() const { return forms_.size(); }

 private:
  std::map<std::string, std::vector<MorphReading>> forms_;
};

FullFormLexicon load_fullform_lexicon(const std::string& path);

/// Abbreviations (written without the final period) that never end a sentence.
struct Abbreviations {
  std::set<std::string> words;
  bool contains(std::string_view word) const;
};

Abbreviations load_abbreviations(const std::string& path);

/// Splits text into sentences of tokens; readings are left empty. Spans
/// index into `text`, and the bytes between spans are the gaps.
std::vector<TokenSequence> tokenize(std::string_view text, const Abbreviations& abbreviations = {});

/// Fills `token.readings` from the lexicon, falling back to the guesser,
/// which always yields exactly one reading.
void analyze(Token& token, const FullFormLexicon& lexicon, bool sentence_initial);
MorphReading guess(const Token& token, bool sentence_initial);

/// Selects one reading per token by ordered contextual rules.
void tag(TokenSequence& sentence);

/// tokenize + analyze + tag.
std::vector<TokenSequence> analyze_text(std::string_view text, const FullFormLexicon& lexicon,
                                        const Abbreviations& abbreviations);

}  // namespace qa

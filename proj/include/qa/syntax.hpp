#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qa/morpho.hpp"
#include "qa/pattern.hpp"

namespace qa {

enum class ChunkKind { NP, VP, PP, AP, UNK };

std::string_view to_string(ChunkKind kind);

/// Minimal non-recursive phrase over tokens [first, last].
struct Chunk {
  ChunkKind kind = ChunkKind::UNK;
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t head = 0;
  std::optional<std::size_t> preposition;  // PP only
  std::optional<std::size_t> propn;        // proper noun apposed to a common-noun head
  bool copula = false;                     // VP only

  bool operator==(const Chunk&) const = default;
};

std::vector<Chunk> chunk(const TokenSequence& sentence,
                         const std::set<std::string>& copulas = {"être", "devenir", "rester", "demeurer"});

/// One element of a rule's left-hand side, written "NP", "NP|PP", "PP*",
/// "VP:copula", "VP:-copula", "NP|PP:nn".
struct ChunkMatcher {
  std::vector<ChunkKind> kinds;
  bool repeat = false;  // zero or more
  std::string constraint;
};

struct GrammarRule {
  std::string name;
  FeatureSet features;
  std::vector<ChunkMatcher> lhs;
  /// Slot references: "i" head of element i, "i.prep", "i.propn".
  std::vector<std::string> emit;
};

/// Ordered dependency rules over chunk sequences.
class Grammar {
 public:
  Grammar() = default;
  static Grammar from_json(const nlohmann::json& doc, const std::string& source = "<json>");
  const std::vector<GrammarRule>& rules() const { return rules_; }
  const std::set<std::string>& copulas() const { return copulas_; }

 private:
  std::vector<GrammarRule> rules_;
  std::set<std::string> copulas_{"être", "devenir", "rester", "demeurer"};
};

Grammar load_grammar(const std::string& path);

/// Fires every rule at every position; never throws on odd input, and
/// unmatched regions simply contribute nothing. Result is sorted and unique.
std::vector<Dependency> extract_dependencies(const TokenSequence& sentence, const std::vector<Chunk>& chunks,
                                             const Grammar& grammar);

}  // namespace qa

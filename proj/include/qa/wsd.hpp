#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qa/lexicon.hpp"
#include "qa/pattern.hpp"
#include "qa/resources.hpp"

namespace qa {

/// "remporter : VARG[DIR](remporter,victoire) ==> sens 2". The target slot
/// holds the headword; other slots are literal lemmas or "*".
struct DisambRule {
  std::string lemma;
  Pos pos = Pos::Noun;
  DependencyPattern pattern;
  std::size_t target_slot = 0;
  int sense_id = 0;
  int specificity = 0;  // literal non-target slots

  std::string to_string() const;
  auto operator<=>(const DisambRule&) const = default;
};

class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<DisambRule> rules);

  const std::vector<DisambRule>& rules() const { return rules_; }
  std::vector<const DisambRule*> rules_for(const std::string& lemma, Pos pos) const;
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }
  /// One rule per line in the surface syntax of DisambRule::to_string.
  std::string dump() const;

 private:
  std::vector<DisambRule> rules_;
  std::vector<std::string> warnings_;
};

/// Builds rules from every sense's examples (run through the analysis
/// chain) and explicit schemas. Examples yielding nothing are reported in
/// RuleSet::warnings and skipped.
RuleSet compile_rules(const SenseDictionary& dict, const Resources& resources);

/// Rules derived from a single example sentence for one sense.
std::vector<DisambRule> rules_from_example(const SenseEntry& sense, const std::string& example,
                                           const Resources& resources);

struct SenseAssignment {
  int token = -1;
  std::string lemma;
  Pos pos = Pos::Noun;
  int sense_id = 0;
  std::string sem_class;
  std::string domain;
  bool forced = false;  // monosemous fallback, no rule fired

  auto operator<=>(const SenseAssignment&) const = default;
};

bool rule_unifies(const DisambRule& rule, const Dependency& dep, int token);

/// At most one assignment per token occurrence. Firing rules are ranked by
/// specificity, then lowest sense id; monosemous words default to their
/// only sense; polysemous words with no firing rule stay unassigned.
std::vector<SenseAssignment> apply_rules(const std::vector<Dependency>& deps, const RuleSet& rules,
                                         const SenseDictionary& dict);

}  // namespace qa

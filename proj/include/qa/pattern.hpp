#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qa/text.hpp"

namespace qa {

using FeatureSet = std::set<std::string>;

/// One argument of a dependency: a lemma plus the token it came from.
struct Slot {
  std::string lemma;
  Pos pos = Pos::Noun;
  int token = -1;

  auto operator<=>(const Slot&) const = default;
};

/// Labeled relation between chunk heads, e.g. VARG[INDIR](succéder,à,empereur).
/// For INDIR relations slot 1 is the preposition.
struct Dependency {
  std::string name;
  FeatureSet features;
  std::vector<Slot> slots;

  auto operator<=>(const Dependency&) const = default;
};

/// Dependency template with string slots as written in rule and schema
/// files. Slot strings are interpreted by the consumer ("*" wildcards,
/// "$X" pivots, "?s" variables, or literal lemmas).
struct DependencyPattern {
  std::string name;
  FeatureSet features;
  std::vector<std::string> slots;

  auto operator<=>(const DependencyPattern&) const = default;
};

/// Parses "NAME[F1,F2](a,b,c)"; the feature list is optional.
DependencyPattern parse_pattern(std::string_view surface);
/// Parses patterns joined by '+'.
std::vector<DependencyPattern> parse_pattern_list(std::string_view surface);
std::string format(const DependencyPattern& p);
std::string format(const Dependency& d);
DependencyPattern to_pattern(const Dependency& d);
std::string format_features(const FeatureSet& features);

/// Preposition equivalence: {de, du, des, d'} and {à, au, aux} collapse to one class each.
std::string preposition_class(std::string_view lemma);
bool same_preposition(std::string_view a, std::string_view b);

/// Index of the preposition slot of INDIR relations, or -1.
int preposition_slot(const FeatureSet& features);

}  // namespace qa

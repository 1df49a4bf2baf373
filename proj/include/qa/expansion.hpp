#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qa/pattern.hpp"
#include "qa/resources.hpp"
#include "qa/wsd.hpp"

namespace qa {

enum class Origin { Original, Parasynonym, ExternalSynonym, Derivation };

std::string_view to_string(Origin origin);
Origin parse_origin(std::string_view s);

struct Alternate {
  std::string lemma;
  Origin origin = Origin::Parasynonym;

  auto operator<=>(const Alternate&) const = default;
};

/// A dependency argument widened into a disjunction: the original lemma OR
/// any alternate. `origin` is Derivation for the derived word of a rewrite.
struct EnrichedSlot {
  std::string lemma;
  Pos pos = Pos::Noun;
  int token = -1;
  Origin origin = Origin::Original;
  std::vector<Alternate> alternates;  // sorted, never contains `lemma`

  const Alternate* alternate(std::string_view lemma) const;
  auto operator<=>(const EnrichedSlot&) const = default;
};

struct EnrichedDependency {
  std::string name;
  FeatureSet features;
  std::vector<EnrichedSlot> slots;
  bool derived = false;
  std::vector<int> sources;  // indices of the original dependencies a rewrite came from
  std::string derivation_kind;

  auto operator<=>(const EnrichedDependency&) const = default;
};

struct ExpansionConfig {
  bool synonyms = true;
  bool sense_filter = true;
  bool derivations = true;

  bool operator==(const ExpansionConfig&) const = default;
};

EnrichedDependency lift(const Dependency& dep);
/// Drops alternates; the inverse of lift for original dependencies.
Dependency strip(const EnrichedDependency& dep);

/// Adds sense-filtered synonyms to every slot whose occurrence carries a
/// sense assignment. With `sense_filter` off, every non-stop slot instead
/// receives all synonyms of all its senses and of every external group.
std::vector<EnrichedDependency> enrich_with_synonyms(const std::vector<Dependency>& deps,
                                                     const std::vector<SenseAssignment>& assignments,
                                                     const Resources& resources, bool sense_filter = true);

/// New dependencies obtained by replacing an assigned word with a
/// derivative of its sense under a matching rewrite schema. The input is
/// the (possibly synonym-enriched) original set; only additions are returned.
std::vector<EnrichedDependency> apply_derivation_rewrites(const std::vector<EnrichedDependency>& deps,
                                                          const std::vector<SenseAssignment>& assignments,
                                                          const Resources& resources);

/// Originals (enriched per config) followed by derived rewrites.
std::vector<EnrichedDependency> enrich(const std::vector<Dependency>& deps,
                                       const std::vector<SenseAssignment>& assignments,
                                       const Resources& resources, const ExpansionConfig& config);

std::string format(const EnrichedDependency& dep);

}  // namespace qa

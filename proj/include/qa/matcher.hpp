#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qa/index.hpp"
#include "qa/question.hpp"

namespace qa {

struct SlotEvidence {
  std::string lemma;  // the document lemma that satisfied the slot
  Origin origin = Origin::Original;
  bool variable = false;
};

struct DependencyEvidence {
  std::size_t record = 0;
  std::size_t dependency = 0;
  std::vector<SlotEvidence> slots;
};

/// What the focus variable bound to: always a slot's original lemma.
struct Binding {
  std::string lemma;
  std::size_t record = 0;
  int token = -1;
  std::vector<std::string> companions;  // NN appositions, e.g. "Titus" for "empereur"
};

struct UnifyResult {
  std::optional<Binding> binding;
  std::vector<SlotEvidence> slots;
};

struct MatchResult {
  std::string unit;
  std::string doc_id;
  int sentence = 0;           // first sentence of the unit
  std::size_t position = 0;   // record index of the unit's first sentence
  std::optional<Binding> binding;
  std::vector<DependencyEvidence> evidence;  // one per question dependency
  int original_count = 0;
  int alternate_count = 0;
};

/// Relation names must be equal; feature sets unify when one contains the other.
bool features_compatible(const FeatureSet& a, const FeatureSet& b);

/// True when the slot's original lemma has a dictionary sense carrying one
/// of the focus traits, or the explicit focus lemma is that slot's lemma or
/// one of its alternates.
bool binding_satisfies(const EnrichedSlot& slot, const Focus& focus, const SenseDictionary& dict);

std::optional<UnifyResult> unify_dependency(const QueryDependency& qdep, const EnrichedDependency& edep,
                                            const Focus& focus, const SenseDictionary& dict);

/// Best full match of every question dependency inside one unit, or nullopt.
std::optional<MatchResult> match_unit(const LocalStructure& local, const Index& index,
                                      const std::vector<std::size_t>& records, const SenseDictionary& dict,
                                      Granularity g);

/// Units where every question dependency unifies, ranked by (original
/// evidence desc, alternate evidence desc, corpus position asc), truncated
/// to `limit`.
std::vector<MatchResult> match(const LocalStructure& local, const Index& index, const SenseDictionary& dict,
                               Granularity g = Granularity::Sentence, std::size_t limit = 5);

bool ranks_before(const MatchResult& a, const MatchResult& b);

}  // namespace qa

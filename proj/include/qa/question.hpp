#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qa/pattern.hpp"
#include "qa/resources.hpp"

namespace qa {

class UnanalyzableQuestion : public DataError {
 public:
  using DataError::DataError;
};

/// A literal lemma, or the focus variable when empty.
struct QuerySlot {
  std::optional<std::string> literal;

  bool is_variable() const { return !literal.has_value(); }
  bool operator==(const QuerySlot&) const = default;
};

struct QueryDependency {
  std::string name;
  FeatureSet features;
  std::vector<QuerySlot> slots;

  bool operator==(const QueryDependency&) const = default;
};

enum class FocusKind { ExplicitWord, InterrogativeOnly };

struct Focus {
  FocusKind kind = FocusKind::InterrogativeOnly;
  std::optional<std::string> lemma;       // explicit-word focus only
  std::set<std::string> constraints;      // sem_class or domain symbols
  std::vector<std::pair<std::size_t, std::size_t>> hosts;  // (dependency, slot) holding the variable
};

/// The question's own structure: unenriched, no WSD, one focus variable.
struct LocalStructure {
  std::vector<QueryDependency> dependencies;
  Focus focus;
};

/// Throws UnanalyzableQuestion when no interrogative is found or no
/// dependency survives.
LocalStructure analyze_question(std::string_view question, const Resources& resources);

std::string format(const QueryDependency& dep);

}  // namespace qa

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qa/index.hpp"
#include "qa/matcher.hpp"

namespace qa {

/// Exact non-negative rational, always reduced.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d);
  Fraction operator+(const Fraction& o) const;
  Fraction operator/(long long n) const;
  auto operator<=>(const Fraction& o) const { return num * o.den <=> o.num * den; }
  bool operator==(const Fraction& o) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

struct GoldAnswer {
  std::string doc;
  std::string sentence;

  bool operator==(const GoldAnswer&) const = default;
};

struct GoldQuestion {
  std::string question;
  std::vector<GoldAnswer> gold;  // never empty
};

std::vector<GoldQuestion> questions_from_json(const nlohmann::json& doc, const std::string& source = "<json>");
std::vector<GoldQuestion> load_questions(const std::string& path);

/// Rank (1-based) of the first gold answer among the first five results.
std::optional<int> first_correct_rank(const std::vector<MatchResult>& ranked, const std::vector<GoldAnswer>& gold);
/// 1/k for a first correct answer at rank k <= 5, otherwise 0.
Fraction score_for_rank(std::optional<int> rank);
Fraction score_question(const std::vector<MatchResult>& ranked, const std::vector<GoldAnswer>& gold);

struct QuestionOutcome {
  std::string question;
  std::optional<int> rank;
  Fraction score;
  std::vector<std::string> answers;  // unit keys, best first
  std::string error;                 // set when the question could not be analyzed
};

struct RunReport {
  std::string condition;
  IndexConfig config;
  std::vector<QuestionOutcome> outcomes;
  Fraction mean;
  bool mean_defined = false;  // false when there are no questions
  std::size_t zero_count = 0;

  /// Recomputes the mean from the per-question ranks.
  bool consistent() const;
  nlohmann::json to_json() const;
};

/// Runs every question against one index. Questions are independent;
/// `threads` > 1 evaluates them concurrently without changing the report.
RunReport evaluate_run(const Index& index, const std::vector<GoldQuestion>& questions, const Resources& resources,
                       unsigned threads = 1);

/// Builds one index per preset and evaluates each.
std::vector<RunReport> compare_conditions(const std::vector<CorpusDocument>& corpus, const Resources& resources,
                                          const RuleSet& rules, const std::vector<GoldQuestion>& questions,
                                          const std::vector<std::string>& presets = preset_names());

nlohmann::json comparison_to_json(const std::vector<RunReport>& runs);
/// Human-readable table: condition, score, zero-score count.
std::string comparison_table(const std::vector<RunReport>& runs);

}  // namespace qa

#include "qa/eval.hpp"

#include <cstdio>
#include <future>
#include <numeric>

namespace qa {

using nlohmann::json;

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Fraction Fraction::operator+(const Fraction& o) const {
  long long l = std::lcm(den, o.den);
  return {num * (l / den) + o.num * (l / o.den), l};
}

Fraction Fraction::operator/(long long n) const { return {num, den * n}; }

std::string Fraction::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

std::vector<GoldQuestion> questions_from_json(const json& doc, const std::string& source) {
  if (!doc.is_array()) throw DataError(source + ": questions file must be a JSON array");
  std::vector<GoldQuestion> out;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    const std::string where = source + ": question " + std::to_string(n);
    GoldQuestion q;
    try {
      q.question = doc[n].at("question").get<std::string>();
      for (const json& g : doc[n].at("gold")) {
        if (!g.is_array() || g.size() != 2) throw DataError(where + ": gold entries are [doc, sentence] pairs");
        auto as_id = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        q.gold.push_back({as_id(g[0]), as_id(g[1])});
      }
    } catch (const json::exception& e) {
      throw DataError(where + ": " + e.what());
    }
    if (q.gold.empty()) throw DataError(where + ": every question needs at least one gold answer");
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<GoldQuestion> load_questions(const std::string& path) {
  return questions_from_json(parse_json_file(path), path);
}

std::optional<int> first_correct_rank(const std::vector<MatchResult>& ranked, const std::vector<GoldAnswer>& gold) {
  for (std::size_t i = 0; i < ranked.size() && i < 5; ++i) {
    for (const auto& g : gold)
      if (ranked[i].doc_id == g.doc && std::to_string(ranked[i].sentence) == g.sentence)
        return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

Fraction score_for_rank(std::optional<int> rank) {
  if (!rank || *rank < 1 || *rank > 5) return {0, 1};
  return {1, *rank};
}

Fraction score_question(const std::vector<MatchResult>& ranked, const std::vector<GoldAnswer>& gold) {
  return score_for_rank(first_correct_rank(ranked, gold));
}

bool RunReport::consistent() const {
  Fraction sum;
  std::size_t zeros = 0;
  for (const auto& o : outcomes) {
    if (score_for_rank(o.rank) != o.score) return false;
    sum = sum + score_for_rank(o.rank);
    if (!o.rank) ++zeros;
  }
  Fraction expected = outcomes.empty() ? Fraction{} : sum / static_cast<long long>(outcomes.size());
  return expected == mean && zeros == zero_count && mean_defined == !outcomes.empty();
}

json RunReport::to_json() const {
  json qs = json::array();
  for (const auto& o : outcomes) {
    json q{{"question", o.question}, {"score", o.score.str()}, {"answers", o.answers}};
    q["rank"] = o.rank ? json(*o.rank) : json(nullptr);
    if (!o.error.empty()) q["error"] = o.error;
    qs.push_back(std::move(q));
  }
  return {{"condition", condition},
          {"config", qa::to_json(config)},
          {"questions", outcomes.size()},
          {"mean", mean.str()},
          {"mean_value", mean.value()},
          {"mean_defined", mean_defined},
          {"zero_score_count", zero_count},
          {"results", qs}};
}

namespace {

QuestionOutcome run_question(const Index& index, const GoldQuestion& q, const Resources& resources) {
  QuestionOutcome o;
  o.question = q.question;
  try {
    LocalStructure local = analyze_question(q.question, resources);
    auto ranked = match(local, index, resources.dictionary, Granularity::Sentence, 5);
    for (const auto& m : ranked) o.answers.push_back(m.unit);
    o.rank = first_correct_rank(ranked, q.gold);
  } catch (const UnanalyzableQuestion& e) {
    o.error = e.what();
  }
  o.score = score_for_rank(o.rank);
  return o;
}

}  // namespace

RunReport evaluate_run(const Index& index, const std::vector<GoldQuestion>& questions, const Resources& resources,
                       unsigned threads) {
  RunReport report;
  report.condition = index.config().label;
  report.config = index.config();
  report.outcomes.resize(questions.size());
  threads = std::max(1u, threads);
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads && t < questions.size(); ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < questions.size(); i += threads)
        report.outcomes[i] = run_question(index, questions[i], resources);
    }));
  }
  for (auto& j : jobs) j.get();

  Fraction sum;
  for (const auto& o : report.outcomes) {
    sum = sum + o.score;
    if (!o.rank) ++report.zero_count;
  }
  report.mean_defined = !questions.empty();
  report.mean = questions.empty() ? Fraction{} : sum / static_cast<long long>(questions.size());
  return report;
}

std::vector<RunReport> compare_conditions(const std::vector<CorpusDocument>& corpus, const Resources& resources,
                                          const RuleSet& rules, const std::vector<GoldQuestion>& questions,
                                          const std::vector<std::string>& presets) {
  std::vector<RunReport> out;
  for (const auto& name : presets) {
    Index index = Index::build(corpus, resources, rules, config_preset(name));
    out.push_back(evaluate_run(index, questions, resources));
  }
  return out;
}

json comparison_to_json(const std::vector<RunReport>& runs) {
  json out = json::array();
  for (const auto& r : runs) out.push_back(r.to_json());
  return out;
}

std::string comparison_table(const std::vector<RunReport>& runs) {
  std::string out = "condition      score   mean      no-answer\n";
  for (const auto& r : runs) {
    char line[128];
    std::snprintf(line, sizeof line, "%-14s %-7.3f %-9s %zu/%zu\n", r.condition.c_str(), r.mean.value(),
                  r.mean.str().c_str(), r.zero_count, r.outcomes.size());
    out += line;
  }
  return out;
}

}  // namespace qa

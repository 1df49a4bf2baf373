// Command-line front end: build an enriched index, query it, evaluate.
//
//   qa build   --corpus F --lexicon D --config {plancher|syn-no-sem|syn-sem|all|custom.json} --out IDX
//   qa query   --index IDX --question "..." [--granularity sentence] [--explain]
//   qa explain --index IDX --question "..."
//   qa eval    --index IDX --questions Q.json --report R.json
//   qa compare --corpus F --lexicon D --questions Q.json [--report R.json]
//   qa rules   --lexicon D
//
// Exit codes: 0 ok, 1 usage, 2 data error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qa/eval.hpp"
#include "qa/index.hpp"
#include "qa/matcher.hpp"
#include "qa/question.hpp"
#include "qa/wsd.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kDataError = 2;

const std::string kDefaultLexicon = std::string(QA_DATA_DIR) + "/lexicon";

qa::IndexConfig resolve_config(const std::string& choice) {
  for (const auto& name : qa::preset_names())
    if (choice == name) return qa::config_preset(name);
  if (!std::filesystem::exists(choice))
    throw qa::DataError("--config '" + choice + "' is neither a preset nor an existing file");
  return qa::config_from_json(qa::parse_json_file(choice));
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw qa::DataError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

void print_results(const std::vector<qa::MatchResult>& results, const qa::Index& index, bool explain) {
  if (results.empty()) {
    std::cout << "no answer\n";
    return;
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& m = results[i];
    const auto& rec = index.records()[m.position];
    std::cout << (i + 1) << ". [" << m.unit << "] " << rec.text << '\n';
    if (m.binding) {
      std::cout << "   focus = " << m.binding->lemma;
      for (const auto& c : m.binding->companions) std::cout << ' ' << c;
      std::cout << '\n';
    }
    if (!explain) continue;
    for (const auto& ev : m.evidence) {
      const auto& dep = index.records()[ev.record].dependencies[ev.dependency];
      std::cout << "   " << qa::format(dep) << (dep.derived ? "  (derived: " + dep.derivation_kind + ")" : "") << '\n';
      std::cout << "     ";
      for (const auto& s : ev.slots)
        std::cout << ' ' << s.lemma << '<' << (s.variable ? "focus/" : "") << qa::to_string(s.origin) << '>';
      std::cout << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Document-side question answering over an enriched dependency index"};
  app.require_subcommand(1);

  std::string corpus, lexicon = kDefaultLexicon, config = "all", out, index_path, question, questions, report;
  std::string granularity = "sentence";
  bool explain = false;

  auto* build = app.add_subcommand("build", "Analyze, enrich and index a corpus");
  build->add_option("--corpus", corpus, "Corpus file (#DOC headers, blank-line paragraphs)")->required();
  build->add_option("--lexicon", lexicon, "Lexicon directory");
  build->add_option("--config", config, "plancher | syn-no-sem | syn-sem | all | config.json");
  build->add_option("--out", out, "Index file to write")->required();

  auto add_query_options = [&](CLI::App* cmd) {
    cmd->add_option("--index", index_path, "Index file")->required();
    cmd->add_option("--question", question, "Question text")->required();
    cmd->add_option("--lexicon", lexicon, "Lexicon directory");
    cmd->add_option("--granularity", granularity, "sentence | paragraph | document");
  };
  auto* query = app.add_subcommand("query", "Answer one question");
  add_query_options(query);
  query->add_flag("--explain", explain, "Print per-dependency evidence with origin tags");
  auto* explain_cmd = app.add_subcommand("explain", "Answer one question and print the evidence");
  add_query_options(explain_cmd);

  auto* eval = app.add_subcommand("eval", "Score a question file against an index");
  eval->add_option("--index", index_path, "Index file")->required();
  eval->add_option("--questions", questions, "Questions JSON")->required();
  eval->add_option("--report", report, "Report JSON to write")->required();
  eval->add_option("--lexicon", lexicon, "Lexicon directory");

  auto* compare = app.add_subcommand("compare", "Evaluate the four enrichment conditions");
  compare->add_option("--corpus", corpus, "Corpus file")->required();
  compare->add_option("--questions", questions, "Questions JSON")->required();
  compare->add_option("--lexicon", lexicon, "Lexicon directory");
  compare->add_option("--report", report, "Report JSON to write");

  auto* rules = app.add_subcommand("rules", "Dump the compiled disambiguation rules");
  rules->add_option("--lexicon", lexicon, "Lexicon directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    qa::Resources resources = qa::load_resources(lexicon);
    if (*build) {
      qa::IndexConfig cfg = resolve_config(config);
      qa::RuleSet rs = qa::compile_rules(resources.dictionary, resources);
      for (const auto& w : rs.warnings()) std::cerr << "warning: " << w << '\n';
      qa::Index index = qa::Index::build(qa::load_corpus(corpus), resources, rs, cfg);
      index.save(out);
      std::cout << "indexed " << index.records().size() << " sentences (" << cfg.label << ") -> " << out << '\n';
    } else if (*query || *explain_cmd) {
      qa::Index index = qa::Index::load(index_path);
      qa::LocalStructure local = qa::analyze_question(question, resources);
      if (explain || *explain_cmd) {
        std::cout << "question structure:\n";
        for (const auto& d : local.dependencies) std::cout << "  " << qa::format(d) << '\n';
        std::cout << "  focus: " << local.focus.lemma.value_or("(interrogative)") << " {";
        for (const auto& c : local.focus.constraints) std::cout << ' ' << c;
        std::cout << " }\n";
      }
      auto results = qa::match(local, index, resources.dictionary, qa::parse_granularity(granularity));
      print_results(results, index, explain || *explain_cmd);
    } else if (*eval) {
      qa::Index index = qa::Index::load(index_path);
      qa::RunReport r = qa::evaluate_run(index, qa::load_questions(questions), resources);
      write_json(report, r.to_json());
      std::cout << qa::comparison_table({r});
    } else if (*compare) {
      qa::RuleSet rs = qa::compile_rules(resources.dictionary, resources);
      auto runs = qa::compare_conditions(qa::load_corpus(corpus), resources, rs, qa::load_questions(questions));
      if (!report.empty()) write_json(report, qa::comparison_to_json(runs));
      std::cout << qa::comparison_table(runs);
    } else if (*rules) {
      qa::RuleSet rs = qa::compile_rules(resources.dictionary, resources);
      std::cout << rs.dump();
      for (const auto& w : rs.warnings()) std::cerr << "warning: " << w << '\n';
    }
  } catch (const qa::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}

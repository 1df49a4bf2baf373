#include <filesystem>

#include "doctest.h"
#include "qa/matcher.hpp"
#include "qa/question.hpp"
#include "support.hpp"

using namespace qa;

namespace {

const char* kSmall = R"J(#DOC a
Domitien succéda à l'empereur Titus. Domitien persécuta les chrétiens.

Vespasien construisit le Colisée.

#DOC b
Darius fut le roi des Perses.
)J";

std::set<std::string> deps_of_question(std::string_view q) {
  std::set<std::string> out;
  for (const auto& d : analyze_question(q, testing::bundled()).dependencies) out.insert(format(d));
  return out;
}

std::vector<std::string> answers(const Index& idx, std::string_view q, Granularity g = Granularity::Sentence) {
  std::vector<std::string> out;
  for (const auto& m : match(analyze_question(q, testing::bundled()), idx, testing::bundled().dictionary, g))
    out.push_back(m.unit);
  return out;
}

}  // namespace

TEST_CASE("corpus parsing") {
  auto c = parse_corpus(kSmall);
  REQUIRE(c.size() == 2);
  CHECK(c[0].id == "a");
  CHECK(c[0].paragraphs.size() == 2);
  CHECK_THROWS_AS(parse_corpus("stray text\n#DOC a\nx.\n"), ParseError);
  try {
    parse_corpus("#DOC a\nx.\n\n#DOC a\ny.\n", "f.txt");
    FAIL("duplicate id accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_corpus("#DOC \nx.\n"), ParseError);
}

TEST_CASE("sentence numbering runs through the document") {
  auto idx = testing::index_of(kSmall, "plancher");
  REQUIRE(idx.records().size() == 4);
  CHECK(idx.records()[2].sentence == 3);
  CHECK(idx.records()[2].paragraph == 2);
  CHECK(Index::unit_key(idx.records()[2], Granularity::Sentence) == "a/s3");
  CHECK(Index::unit_key(idx.records()[2], Granularity::Paragraph) == "a/p2");
  CHECK(Index::unit_key(idx.records()[2], Granularity::Document) == "a");
}

TEST_CASE("lookup by lemma and granularity") {
  auto idx = testing::index_of(kSmall, "all");
  CHECK(idx.lookup("empereur", Granularity::Sentence) == std::set<std::string>{"a/s1"});
  CHECK(idx.lookup("chef", Granularity::Sentence) == std::set<std::string>{"a/s1"});
  CHECK(idx.lookup("successeur", Granularity::Paragraph) == std::set<std::string>{"a/p1"});
  CHECK(idx.lookup("Perse", Granularity::Document) == std::set<std::string>{"b"});
  CHECK(idx.lookup("absent", Granularity::Sentence).empty());
  CHECK(idx.lookup("le", Granularity::Sentence).empty());
  auto plain = testing::index_of(kSmall, "plancher");
  CHECK(plain.lookup("chef", Granularity::Sentence).empty());
}

TEST_CASE("index files are versioned") {
  auto idx = testing::index_of(kSmall, "syn-sem");
  auto j = idx.to_json();
  CHECK(j["format"] == "qa-index");
  CHECK(j["version"] == Index::kVersion);
  CHECK(Index::from_json(j) == idx);
  auto wrong = j;
  wrong["version"] = 99;
  CHECK_THROWS_AS(Index::from_json(wrong), DataError);
  auto broken = j;
  broken["postings"]["empereur"][0][0] = 999;
  CHECK_THROWS_AS(Index::from_json(broken), DataError);
  CHECK_THROWS_AS(Index::load("/nonexistent/idx.json"), DataError);
}

TEST_CASE("presets differ only by the three flags") {
  CHECK(config_preset("plancher").expansion == ExpansionConfig{false, false, false});
  CHECK(config_preset("syn-no-sem").expansion == ExpansionConfig{true, false, false});
  CHECK(config_preset("syn-sem").expansion == ExpansionConfig{true, true, false});
  CHECK(config_preset("all").expansion == ExpansionConfig{true, true, true});
  for (const auto& n : preset_names()) {
    auto j = to_json(config_preset(n));
    j.erase("synonyms");
    j.erase("sense_filter");
    j.erase("derivations");
    CHECK(j == nlohmann::json{{"label", n}});
    CHECK(config_from_json(to_json(config_preset(n))) == config_preset(n));
  }
  CHECK_THROWS_AS(config_preset("everything"), DataError);
}

TEST_CASE("threaded build equals sequential build") {
  auto corpus = load_corpus(testing::data_path("corpus/desk.txt"));
  auto one = Index::build(corpus, testing::bundled(), testing::bundled_rules(), config_preset("all"), 1);
  auto many = Index::build(corpus, testing::bundled(), testing::bundled_rules(), config_preset("all"), 4);
  CHECK(one == many);
}

TEST_CASE("question analysis") {
  CHECK(deps_of_question("Qui est le général des Perses ?") ==
        std::set<std::string>{"NMOD[SPRED](VAR,général)", "NMOD[INDIR](général,de,Perse)"});
  auto l = analyze_question("Qui est le général des Perses ?", testing::bundled());
  CHECK(l.focus.kind == FocusKind::InterrogativeOnly);
  CHECK(l.focus.constraints == std::set<std::string>{"HUMAN"});

  CHECK(deps_of_question("De quel chef Domitien fut-il le successeur ?") ==
        std::set<std::string>{"NMOD[SPRED](Domitien,successeur)", "NMOD[INDIR](successeur,de,VAR)"});
  CHECK(deps_of_question("Où mourut Néron ?") ==
        std::set<std::string>{"SUBJ(mourir,Néron)", "VARG[INDIR](mourir,à,VAR)"});
  CHECK(deps_of_question("Qui est-ce que Romulus vainquit ?") ==
        std::set<std::string>{"SUBJ(vaincre,Romulus)", "VARG[DIR](vaincre,VAR)"});
  CHECK(deps_of_question("Que conquit César ?") ==
        std::set<std::string>{"SUBJ(conquérir,César)", "VARG[DIR](conquérir,VAR)"});
}

TEST_CASE("explicit focus constraints are the union over its senses") {
  const auto& r = testing::bundled();
  auto l = analyze_question("Quel chef vainquit les Helvètes ?", r);
  CHECK(l.focus.kind == FocusKind::ExplicitWord);
  CHECK(l.focus.lemma == "chef");
  std::set<std::string> expected;
  for (const auto* s : r.dictionary.senses_of_lemma("chef")) {
    expected.insert(s->sem_class);
    expected.insert(s->domain);
  }
  CHECK(l.focus.constraints == expected);
}

TEST_CASE("questions never keep interrogative lemmas") {
  const auto& r = testing::bundled();
  for (const auto& q : load_questions(testing::data_path("corpus/questions.json"))) {
    auto l = analyze_question(q.question, r);
    for (const auto& d : l.dependencies)
      for (const auto& s : d.slots)
        if (s.literal) CHECK_FALSE(r.interrogatives.count(*s.literal));
  }
}

TEST_CASE("degenerate questions are rejected") {
  CHECK_THROWS_AS(analyze_question("Domitien ?", testing::bundled()), UnanalyzableQuestion);
  CHECK_THROWS_AS(analyze_question("", testing::bundled()), UnanalyzableQuestion);
  CHECK_THROWS_AS(analyze_question("Romulus fonda Rome ?", testing::bundled()), UnanalyzableQuestion);
}

TEST_CASE("feature subsets unify, names must agree") {
  CHECK(features_compatible({"SPRED"}, {}));
  CHECK(features_compatible({}, {"INDIR"}));
  CHECK_FALSE(features_compatible({"DIR"}, {"INDIR"}));
  const auto& dict = testing::bundled().dictionary;
  Focus f;
  QueryDependency q{"SUBJ", {}, {{"fonder"}, {"Romulus"}}};
  EnrichedDependency e = lift({"VARG", {"DIR"}, {{"fonder", Pos::Verb, 1}, {"Romulus", Pos::Propn, 0}}});
  CHECK_FALSE(unify_dependency(q, e, f, dict));
  QueryDependency spred{"NMOD", {"SPRED"}, {{"Domitien"}, {"successeur"}}};
  EnrichedDependency plain = lift({"NMOD", {}, {{"Domitien", Pos::Propn, 0}, {"successeur", Pos::Noun, 1}}});
  CHECK(unify_dependency(spred, plain, f, dict));
}

TEST_CASE("the focus variable must satisfy a trait") {
  auto idx = testing::index_of("#DOC x\nLe centurion battit Spartacus.\n", "plancher");
  CHECK(answers(idx, "Qui battit Spartacus ?") == std::vector<std::string>{"x/s1"});
  CHECK(answers(idx, "Où battit-il Spartacus ?").empty());
}

TEST_CASE("the successor question needs enrichment") {
  auto all = testing::index_of(kSmall, "all");
  auto plain = testing::index_of(kSmall, "plancher");
  const char* q = "De quel chef Domitien fut-il le successeur ?";
  CHECK(answers(all, q) == std::vector<std::string>{"a/s1"});
  CHECK(answers(plain, q).empty());
  auto ranked = match(analyze_question(q, testing::bundled()), all, testing::bundled().dictionary);
  REQUIRE(ranked.size() == 1);
  REQUIRE(ranked[0].binding);
  CHECK(ranked[0].binding->lemma == "empereur");
  CHECK(ranked[0].binding->companions == std::vector<std::string>{"Titus"});
}

TEST_CASE("granularity widens the answer unit") {
  auto idx = testing::index_of(kSmall, "plancher");
  CHECK(answers(idx, "Qui construisit le Colisée ?", Granularity::Paragraph) == std::vector<std::string>{"a/p2"});
  CHECK(answers(idx, "Qui construisit le Colisée ?", Granularity::Document) == std::vector<std::string>{"a"});
}

TEST_CASE("original evidence outranks alternates") {
  auto idx = testing::index_of("#DOC x\nCrassus défit Spartacus.\n\n#DOC y\nMiltiade vainquit Spartacus.\n", "syn-sem");
  CHECK(answers(idx, "Qui vainquit Spartacus ?") == std::vector<std::string>{"y/s1", "x/s1"});
  CHECK(answers(idx, "Qui défit Spartacus ?") == std::vector<std::string>{"x/s1", "y/s1"});
}

TEST_CASE("results are capped at five") {
  std::string corpus;
  for (int i = 0; i < 8; ++i) corpus += "#DOC d" + std::to_string(i) + "\nCésar conquit la Gaule.\n\n";
  auto idx = testing::index_of(corpus, "plancher");
  auto a = answers(idx, "Qui conquit la Gaule ?");
  CHECK(a == std::vector<std::string>{"d0/s1", "d1/s1", "d2/s1", "d3/s1", "d4/s1"});
}

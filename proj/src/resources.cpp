#include "qa/resources.hpp"

#include <filesystem>

namespace qa {

using nlohmann::json;

Resources load_resources(const std::string& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) throw DataError("lexicon directory '" + directory + "' does not exist");
  auto file = [&](const char* name) { return (fs::path(directory) / name).string(); };

  Resources r;
  r.dictionary = load_sense_dictionary(file("dictionary.json"));
  r.synonyms = load_synonym_groups(file("synonyms.json"));
  r.schemas = load_rewrite_schemas(file("schemas.json"));
  r.forms = load_fullform_lexicon(file("fullforms.json"));
  r.abbreviations = load_abbreviations(file("abbreviations.json"));
  r.grammar = load_grammar(file("grammar.json"));

  json stops = parse_json_file(file("stoplemmas.json"));
  r.stop_lemmas = stops.get<std::set<std::string>>();

  const std::string wh_path = file("interrogatives.json");
  json wh = parse_json_file(wh_path);
  if (!wh.is_array()) throw DataError(wh_path + ": expected a JSON array");
  for (const json& e : wh) {
    Interrogative i;
    try {
      i.lemma = e.at("lemma").get<std::string>();
      i.traits = e.at("traits").get<std::set<std::string>>();
      i.role = e.value("role", "subject");
      i.preposition = e.value("preposition", "");
    } catch (const json::exception& ex) {
      throw DataError(wh_path + ": " + ex.what());
    }
    if (i.role != "subject" && i.role != "object" && i.role != "adverbial")
      throw DataError(wh_path + ": unknown role '" + i.role + "' for " + i.lemma);
    if (i.role == "adverbial" && i.preposition.empty())
      throw DataError(wh_path + ": adverbial interrogative '" + i.lemma + "' needs a preposition");
    r.interrogatives.emplace(i.lemma, std::move(i));
  }
  return r;
}

AnalyzedSentence parse_sentence(TokenSequence tokens, const Resources& resources) {
  AnalyzedSentence out;
  out.tokens = std::move(tokens);
  out.chunks = chunk(out.tokens, resources.grammar.copulas());
  out.dependencies = extract_dependencies(out.tokens, out.chunks, resources.grammar);
  return out;
}

std::vector<AnalyzedSentence> parse_text(std::string_view text, const Resources& resources) {
  std::vector<AnalyzedSentence> out;
  for (auto& s : analyze_text(text, resources.forms, resources.abbreviations))
    out.push_back(parse_sentence(std::move(s), resources));
  return out;
}

}  // namespace qa

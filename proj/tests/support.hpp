#pragma once

#include <string>

#include "qa/eval.hpp"
#include "qa/index.hpp"
#include "qa/resources.hpp"
#include "qa/wsd.hpp"

namespace qa::testing {

inline std::string data_path(const std::string& rel) { return std::string(QA_DATA_DIR) + "/" + rel; }

// loaded once per binary; read-only afterwards
inline const Resources& bundled() {
  static const Resources r = load_resources(data_path("lexicon"));
  return r;
}

inline const RuleSet& bundled_rules() {
  static const RuleSet rs = compile_rules(bundled().dictionary, bundled());
  return rs;
}

inline std::vector<SentenceRecord> analyze(std::string_view text, const IndexConfig& cfg = config_preset("all")) {
  return analyze_paragraph("t", 1, 1, text, bundled(), bundled_rules(), cfg);
}

inline Index index_of(std::string_view corpus_text, const std::string& preset) {
  return Index::build(parse_corpus(corpus_text), bundled(), bundled_rules(), config_preset(preset), 1);
}

}  // namespace qa::testing

#include "qa/index.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <thread>

namespace qa {

using nlohmann::json;

std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::Sentence: return "sentence";
    case Granularity::Paragraph: return "paragraph";
    case Granularity::Document: return "document";
  }
  return "sentence";
}

Granularity parse_granularity(std::string_view s) {
  for (Granularity g : {Granularity::Sentence, Granularity::Paragraph, Granularity::Document})
    if (to_string(g) == s) return g;
  throw DataError("unknown granularity '" + std::string(s) + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"plancher", "syn-no-sem", "syn-sem", "all"};
  return names;
}

IndexConfig config_preset(std::string_view name) {
  if (name == "plancher") return {"plancher", {false, false, false}};
  if (name == "syn-no-sem") return {"syn-no-sem", {true, false, false}};
  if (name == "syn-sem") return {"syn-sem", {true, true, false}};
  if (name == "all") return {"all", {true, true, true}};
  throw DataError("unknown configuration preset '" + std::string(name) + "'");
}

IndexConfig config_from_json(const json& j) {
  IndexConfig c;
  try {
    c.label = j.value("label", "custom");
    c.expansion.synonyms = j.at("synonyms").get<bool>();
    c.expansion.sense_filter = j.at("sense_filter").get<bool>();
    c.expansion.derivations = j.at("derivations").get<bool>();
  } catch (const json::exception& e) {
    throw DataError(std::string("bad index configuration: ") + e.what());
  }
  return c;
}

json to_json(const IndexConfig& c) {
  return {{"label", c.label},
          {"synonyms", c.expansion.synonyms},
          {"sense_filter", c.expansion.sense_filter},
          {"derivations", c.expansion.derivations}};
}

std::vector<CorpusDocument> parse_corpus(std::string_view content, const std::string& source) {
  std::vector<CorpusDocument> docs;
  std::string paragraph;
  auto flush = [&] {
    if (!paragraph.empty()) docs.back().paragraphs.push_back(std::move(paragraph));
    paragraph.clear();
  };
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    std::string line(content.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#DOC", 0) == 0) {
      if (!docs.empty()) flush();
      std::string id = line.substr(4);
      auto first = id.find_first_not_of(" \t");
      id = first == std::string::npos ? std::string() : id.substr(first, id.find_last_not_of(" \t") - first + 1);
      if (id.empty()) throw ParseError(source, line_no, "#DOC line without an id");
      for (const auto& d : docs)
        if (d.id == id) throw ParseError(source, line_no, "duplicate document id '" + id + "'");
      docs.push_back({id, {}});
      continue;
    }
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) {
      if (!docs.empty()) flush();
      continue;
    }
    if (docs.empty()) throw ParseError(source, line_no, "text before the first #DOC line");
    if (!paragraph.empty()) paragraph += '\n';
    paragraph += line;
    if (nl == content.size()) break;
  }
  if (!docs.empty()) flush();
  return docs;
}

std::vector<CorpusDocument> load_corpus(const std::string& path) { return parse_corpus(text::read_file(path), path); }

PostingMap build_postings(const std::vector<SentenceRecord>& records, const std::set<std::string>& stop_lemmas) {
  PostingMap out;
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& deps = records[r].dependencies;
    for (std::size_t d = 0; d < deps.size(); ++d) {
      for (std::size_t s = 0; s < deps[d].slots.size(); ++s) {
        const EnrichedSlot& slot = deps[d].slots[s];
        if (!stop_lemmas.count(slot.lemma)) out[slot.lemma].push_back({r, d, s, slot.origin});
        for (const auto& a : slot.alternates)
          if (!stop_lemmas.count(a.lemma)) out[a.lemma].push_back({r, d, s, a.origin});
      }
    }
  }
  for (auto& [lemma, list] : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

std::vector<SentenceRecord> analyze_paragraph(const std::string& doc_id, int paragraph, int first_sentence,
                                              std::string_view text, const Resources& resources,
                                              const RuleSet& rules, const IndexConfig& config) {
  std::vector<SentenceRecord> out;
  int n = first_sentence;
  for (auto& tokens : analyze_text(text, resources.forms, resources.abbreviations)) {
    std::size_t b = tokens.front().begin, e = tokens.back().end;
    AnalyzedSentence parsed = parse_sentence(std::move(tokens), resources);
    SentenceRecord rec;
    rec.doc_id = doc_id;
    rec.paragraph = paragraph;
    rec.sentence = n++;
    rec.text = std::string(text.substr(b, e - b));
    rec.senses = apply_rules(parsed.dependencies, rules, resources.dictionary);
    rec.dependencies = enrich(parsed.dependencies, rec.senses, resources, config.expansion);
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

std::vector<SentenceRecord> analyze_document(const CorpusDocument& doc, const Resources& resources,
                                             const RuleSet& rules, const IndexConfig& config) {
  std::vector<SentenceRecord> out;
  int next_sentence = 1;
  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    auto recs = analyze_paragraph(doc.id, static_cast<int>(p) + 1, next_sentence, doc.paragraphs[p], resources, rules,
                                  config);
    next_sentence += static_cast<int>(recs.size());
    out.insert(out.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return out;
}

}  // namespace

Index Index::build(const std::vector<CorpusDocument>& corpus, const Resources& resources, const RuleSet& rules,
                   const IndexConfig& config, unsigned threads) {
  Index idx;
  idx.config_ = config;
  idx.stop_lemmas_ = resources.stop_lemmas;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // documents are analyzed independently and merged back in corpus order
  std::vector<std::vector<SentenceRecord>> per_doc(corpus.size());
  std::vector<std::future<void>> jobs;
  const std::size_t stride = threads;
  for (std::size_t t = 0; t < std::min<std::size_t>(stride, corpus.size()); ++t) {
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t d = t; d < corpus.size(); d += stride)
        per_doc[d] = analyze_document(corpus[d], resources, rules, config);
    }));
  }
  for (auto& j : jobs) j.get();
  for (auto& recs : per_doc)
    idx.records_.insert(idx.records_.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  idx.postings_ = build_postings(idx.records_, idx.stop_lemmas_);
  return idx;
}

std::string Index::unit_key(const SentenceRecord& r, Granularity g) {
  switch (g) {
    case Granularity::Sentence: return r.doc_id + "/s" + std::to_string(r.sentence);
    case Granularity::Paragraph: return r.doc_id + "/p" + std::to_string(r.paragraph);
    case Granularity::Document: return r.doc_id;
  }
  return r.doc_id;
}

std::set<std::string> Index::lookup(const std::string& lemma, Granularity g) const {
  std::set<std::string> out;
  auto it = postings_.find(lemma);
  if (it == postings_.end()) return out;
  for (const Posting& p : it->second) out.insert(unit_key(records_[p.record], g));
  return out;
}

json to_json(const EnrichedDependency& d) {
  json slots = json::array();
  for (const auto& s : d.slots) {
    json alts = json::array();
    for (const auto& a : s.alternates) alts.push_back({a.lemma, std::string(to_string(a.origin))});
    slots.push_back({{"lemma", s.lemma},
                     {"pos", std::string(to_string(s.pos))},
                     {"token", s.token},
                     {"origin", std::string(to_string(s.origin))},
                     {"alternates", alts}});
  }
  json j{{"name", d.name}, {"features", d.features}, {"slots", slots}, {"derived", d.derived}};
  if (d.derived) {
    j["sources"] = d.sources;
    j["kind"] = d.derivation_kind;
  }
  return j;
}

EnrichedDependency enriched_dependency_from_json(const json& j) {
  EnrichedDependency d;
  d.name = j.at("name").get<std::string>();
  d.features = j.at("features").get<FeatureSet>();
  d.derived = j.at("derived").get<bool>();
  if (d.derived) {
    d.sources = j.at("sources").get<std::vector<int>>();
    d.derivation_kind = j.at("kind").get<std::string>();
  }
  for (const json& s : j.at("slots")) {
    EnrichedSlot slot{s.at("lemma").get<std::string>(), parse_pos(s.at("pos").get<std::string>()),
                      s.at("token").get<int>(), parse_origin(s.at("origin").get<std::string>()), {}};
    for (const json& a : s.at("alternates"))
      slot.alternates.push_back({a.at(0).get<std::string>(), parse_origin(a.at(1).get<std::string>())});
    d.slots.push_back(std::move(slot));
  }
  return d;
}

json Index::to_json() const {
  json records = json::array();
  for (const auto& r : records_) {
    json deps = json::array();
    for (const auto& d : r.dependencies) deps.push_back(qa::to_json(d));
    json senses = json::array();
    for (const auto& s : r.senses)
      senses.push_back({{"token", s.token},
                        {"lemma", s.lemma},
                        {"pos", std::string(qa::to_string(s.pos))},
                        {"sense", s.sense_id},
                        {"sem_class", s.sem_class},
                        {"domain", s.domain},
                        {"forced", s.forced}});
    records.push_back({{"doc", r.doc_id},
                       {"paragraph", r.paragraph},
                       {"sentence", r.sentence},
                       {"text", r.text},
                       {"dependencies", deps},
                       {"senses", senses}});
  }
  json postings = json::object();
  for (const auto& [lemma, list] : postings_) {
    json arr = json::array();
    for (const auto& p : list) arr.push_back({p.record, p.dependency, p.slot, std::string(qa::to_string(p.origin))});
    postings[lemma] = arr;
  }
  return {{"format", "qa-index"},
          {"version", kVersion},
          {"config", qa::to_json(config_)},
          {"stop_lemmas", stop_lemmas_},
          {"records", records},
          {"postings", postings}};
}

Index Index::from_json(const json& j, const std::string& source) {
  Index idx;
  try {
    if (j.at("format").get<std::string>() != "qa-index") throw DataError(source + ": not an index file");
    if (j.at("version").get<int>() != kVersion)
      throw DataError(source + ": unsupported index version " + std::to_string(j.at("version").get<int>()));
    idx.config_ = config_from_json(j.at("config"));
    idx.stop_lemmas_ = j.at("stop_lemmas").get<std::set<std::string>>();
    for (const json& r : j.at("records")) {
      SentenceRecord rec;
      rec.doc_id = r.at("doc").get<std::string>();
      rec.paragraph = r.at("paragraph").get<int>();
      rec.sentence = r.at("sentence").get<int>();
      rec.text = r.at("text").get<std::string>();
      for (const json& d : r.at("dependencies")) rec.dependencies.push_back(enriched_dependency_from_json(d));
      for (const json& s : r.at("senses"))
        rec.senses.push_back({s.at("token").get<int>(), s.at("lemma").get<std::string>(),
                              parse_pos(s.at("pos").get<std::string>()), s.at("sense").get<int>(),
                              s.at("sem_class").get<std::string>(), s.at("domain").get<std::string>(),
                              s.at("forced").get<bool>()});
      idx.records_.push_back(std::move(rec));
    }
    for (const auto& [lemma, arr] : j.at("postings").items()) {
      auto& list = idx.postings_[lemma];
      for (const json& p : arr) {
        Posting post{p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>(), p.at(2).get<std::size_t>(),
                     parse_origin(p.at(3).get<std::string>())};
        if (post.record >= idx.records_.size() ||
            post.dependency >= idx.records_[post.record].dependencies.size() ||
            post.slot >= idx.records_[post.record].dependencies[post.dependency].slots.size())
          throw DataError(source + ": posting for '" + lemma + "' points outside the records");
        list.push_back(post);
      }
    }
  } catch (const json::exception& e) {
    throw DataError(source + ": malformed index: " + e.what());
  }
  return idx;
}

void Index::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << to_json().dump(1) << '\n';
  if (!out) throw DataError("write to '" + path + "' failed");
}

Index Index::load(const std::string& path) { return from_json(parse_json_file(path), path); }

}  // namespace qa

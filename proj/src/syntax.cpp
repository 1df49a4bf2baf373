#include "qa/syntax.hpp"

#include <algorithm>

#include "qa/lexicon.hpp"

namespace qa {

using nlohmann::json;

std::string_view to_string(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::NP: return "NP";
    case ChunkKind::VP: return "VP";
    case ChunkKind::PP: return "PP";
    case ChunkKind::AP: return "AP";
    case ChunkKind::UNK: return "UNK";
  }
  return "UNK";
}

namespace {

ChunkKind parse_chunk_kind(std::string_view s) {
  for (ChunkKind k : {ChunkKind::NP, ChunkKind::VP, ChunkKind::PP, ChunkKind::AP, ChunkKind::UNK})
    if (to_string(k) == s) return k;
  throw DataError("unknown chunk kind '" + std::string(s) + "'");
}

Pos pos_at(const TokenSequence& s, std::size_t i) { return s[i].pos(); }

// DET? ADJ* (NOUN|NUM) ADJ* PROPN*  |  DET? ADJ* PROPN+  |  PRON
std::optional<Chunk> try_np(const TokenSequence& s, std::size_t i) {
  if (i >= s.size()) return std::nullopt;
  Chunk c{ChunkKind::NP, i, i, i, {}, {}, false};
  if (pos_at(s, i) == Pos::Pron) return c;
  std::size_t j = i;
  if (pos_at(s, j) == Pos::Det) ++j;
  while (j < s.size() && pos_at(s, j) == Pos::Adj) ++j;
  if (j >= s.size()) return std::nullopt;
  if (pos_at(s, j) == Pos::Noun || pos_at(s, j) == Pos::Num) {
    c.head = j++;
    while (j < s.size() && pos_at(s, j) == Pos::Adj) ++j;
    while (j < s.size() && pos_at(s, j) == Pos::Propn) c.propn = j++;
    c.last = j - 1;
    return c;
  }
  if (pos_at(s, j) == Pos::Propn) {
    while (j < s.size() && pos_at(s, j) == Pos::Propn) c.head = j++;
    c.last = j - 1;
    return c;
  }
  return std::nullopt;
}

std::optional<Chunk> try_vp(const TokenSequence& s, std::size_t i, const std::set<std::string>& copulas) {
  std::size_t j = i;
  std::optional<std::size_t> head;
  while (j < s.size() && (pos_at(s, j) == Pos::Verb || pos_at(s, j) == Pos::Adv)) {
    if (pos_at(s, j) == Pos::Verb) head = j;
    ++j;
  }
  if (!head) return std::nullopt;
  // trailing adverbs belong outside the cluster
  Chunk c{ChunkKind::VP, i, *head, *head, {}, {}, false};
  c.copula = copulas.count(s[*head].lemma()) > 0 || text::to_lower(s[*head].surface) == "fut";
  return c;
}

}  // namespace

std::vector<Chunk> chunk(const TokenSequence& s, const std::set<std::string>& copulas) {
  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::optional<Chunk> c;
    switch (pos_at(s, i)) {
      case Pos::Prep:
        if (auto np = try_np(s, i + 1); np && np->kind == ChunkKind::NP && s[i + 1].pos() != Pos::Pron) {
          c = Chunk{ChunkKind::PP, i, np->last, np->head, i, np->propn, false};
        }
        break;
      case Pos::Det:
      case Pos::Adj:
      case Pos::Noun:
      case Pos::Propn:
      case Pos::Num:
      case Pos::Pron:
        c = try_np(s, i);
        if (!c && pos_at(s, i) == Pos::Adj) {
          std::size_t j = i;
          while (j + 1 < s.size() && pos_at(s, j + 1) == Pos::Adj) ++j;
          c = Chunk{ChunkKind::AP, i, j, i, {}, {}, false};
        }
        break;
      case Pos::Verb:
      case Pos::Adv:
        c = try_vp(s, i, copulas);
        break;
      default:
        break;
    }
    if (!c) c = Chunk{ChunkKind::UNK, i, i, i, {}, {}, false};
    i = c->last + 1;
    out.push_back(*c);
  }
  return out;
}

Grammar Grammar::from_json(const json& doc, const std::string& source) {
  Grammar g;
  const json* rules = &doc;
  if (doc.is_object()) {
    if (doc.contains("copulas")) g.copulas_ = doc["copulas"].get<std::set<std::string>>();
    if (!doc.contains("rules")) throw DataError(source + ": grammar object needs \"rules\"");
    rules = &doc["rules"];
  }
  if (!rules->is_array()) throw DataError(source + ": grammar rules must be a JSON array");
  for (std::size_t n = 0; n < rules->size(); ++n) {
    const json& r = (*rules)[n];
    const std::string where = source + ": rule " + std::to_string(n);
    try {
      GrammarRule rule;
      rule.name = r.at("name").get<std::string>();
      if (r.contains("features")) rule.features = r["features"].get<FeatureSet>();
      for (const auto& elem : r.at("lhs").get<std::vector<std::string>>()) {
        ChunkMatcher m;
        std::string e = elem;
        if (auto colon = e.find(':'); colon != std::string::npos) {
          m.constraint = e.substr(colon + 1);
          e = e.substr(0, colon);
        }
        if (!e.empty() && e.back() == '*') {
          m.repeat = true;
          e.pop_back();
        }
        for (std::size_t start = 0;;) {
          auto bar = e.find('|', start);
          m.kinds.push_back(parse_chunk_kind(e.substr(start, bar - start)));
          if (bar == std::string::npos) break;
          start = bar + 1;
        }
        if (!m.constraint.empty() && m.constraint != "copula" && m.constraint != "-copula" && m.constraint != "nn")
          throw DataError("unknown constraint '" + m.constraint + "'");
        rule.lhs.push_back(std::move(m));
      }
      rule.emit = r.at("emit").get<std::vector<std::string>>();
      if (rule.lhs.empty()) throw DataError("empty lhs");
      if (rule.emit.size() < 2 || rule.emit.size() > 3) throw DataError("emit needs 2 or 3 slots");
      if ((rule.emit.size() == 3) != (rule.features.count("INDIR") > 0))
        throw DataError("3 slots iff INDIR");
      for (const auto& ref : rule.emit) {
        std::size_t idx = std::stoul(ref);
        if (idx >= rule.lhs.size() || rule.lhs[idx].repeat)
          throw DataError("emit reference '" + ref + "' does not name a fixed lhs element");
      }
      g.rules_.push_back(std::move(rule));
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    } catch (const std::exception& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  return g;
}

Grammar load_grammar(const std::string& path) { return Grammar::from_json(parse_json_file(path), path); }

namespace {

bool element_matches(const ChunkMatcher& m, const Chunk& c) {
  if (std::find(m.kinds.begin(), m.kinds.end(), c.kind) == m.kinds.end()) return false;
  if (m.constraint == "copula") return c.copula;
  if (m.constraint == "-copula") return !c.copula;
  if (m.constraint == "nn") return c.propn.has_value();
  return true;
}

std::optional<Slot> resolve(const std::string& ref, const std::vector<std::size_t>& bound,
                            const std::vector<Chunk>& chunks, const TokenSequence& s) {
  auto dot = ref.find('.');
  const Chunk& c = chunks[bound[std::stoul(ref.substr(0, dot))]];
  std::optional<std::size_t> tok = c.head;
  if (dot != std::string::npos) {
    std::string part = ref.substr(dot + 1);
    tok = part == "prep" ? c.preposition : part == "propn" ? c.propn : std::nullopt;
  }
  if (!tok) return std::nullopt;
  return Slot{s[*tok].lemma(), s[*tok].pos(), static_cast<int>(*tok)};
}

void match_rule(const GrammarRule& rule, std::size_t elem, std::size_t pos, std::vector<std::size_t>& bound,
                const std::vector<Chunk>& chunks, const TokenSequence& s, std::vector<Dependency>& out) {
  if (elem == rule.lhs.size()) {
    Dependency d{rule.name, rule.features, {}};
    for (const auto& ref : rule.emit) {
      auto slot = resolve(ref, bound, chunks, s);
      if (!slot) return;
      d.slots.push_back(std::move(*slot));
    }
    out.push_back(std::move(d));
    return;
  }
  const ChunkMatcher& m = rule.lhs[elem];
  if (m.repeat) {
    std::size_t p = pos;
    bound[elem] = pos;
    match_rule(rule, elem + 1, p, bound, chunks, s, out);
    while (p < chunks.size() && element_matches(m, chunks[p])) {
      ++p;
      match_rule(rule, elem + 1, p, bound, chunks, s, out);
    }
    return;
  }
  if (pos >= chunks.size() || !element_matches(m, chunks[pos])) return;
  bound[elem] = pos;
  match_rule(rule, elem + 1, pos + 1, bound, chunks, s, out);
}

}  // namespace

std::vector<Dependency> extract_dependencies(const TokenSequence& sentence, const std::vector<Chunk>& chunks,
                                             const Grammar& grammar) {
  std::vector<Dependency> out;
  for (const GrammarRule& rule : grammar.rules()) {
    std::vector<std::size_t> bound(rule.lhs.size(), 0);
    for (std::size_t start = 0; start < chunks.size(); ++start)
      match_rule(rule, 0, start, bound, chunks, sentence, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qa

#include "property_checks.hpp"

#include <algorithm>
#include <filesystem>
#include <limits>
#include <random>

#include "qa/question.hpp"
#include "support.hpp"

namespace qa::testing {

namespace {

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// --- oracle unification, written independently of the matcher ---

std::string prep_class(const std::string& p) {
  static const std::map<std::string, std::string> table{{"du", "de"}, {"des", "de"}, {"d'", "de"},
                                                        {"au", "à"},  {"aux", "à"}};
  auto it = table.find(p);
  return it == table.end() ? p : it->second;
}

bool subset(const FeatureSet& a, const FeatureSet& b) {
  for (const auto& f : a)
    if (!b.count(f)) return false;
  return true;
}

struct OracleSlot {
  bool variable = false;
  bool original = false;
};

struct OracleUnify {
  std::vector<OracleSlot> slots;
  bool has_binding = false;
  int token = -1;
  std::string lemma;
};

bool focus_ok(const EnrichedSlot& e, const Focus& focus, const SenseDictionary& dict) {
  if (focus.lemma) {
    if (e.lemma == *focus.lemma) return true;
    for (const auto& a : e.alternates)
      if (a.lemma == *focus.lemma) return true;
  }
  for (const auto* s : dict.senses_of_lemma(e.lemma))
    if (focus.constraints.count(s->sem_class) > 0 || focus.constraints.count(s->domain) > 0) return true;
  return false;
}

std::optional<OracleUnify> oracle_unify(const QueryDependency& q, const EnrichedDependency& e, const Focus& focus,
                                        const SenseDictionary& dict) {
  if (q.name != e.name || q.slots.size() != e.slots.size()) return std::nullopt;
  if (!subset(q.features, e.features) && !subset(e.features, q.features)) return std::nullopt;
  const bool both_indir = q.features.count("INDIR") && e.features.count("INDIR");
  OracleUnify out;
  for (std::size_t k = 0; k < q.slots.size(); ++k) {
    const auto& slot = e.slots[k];
    if (!q.slots[k].literal) {
      if (!focus_ok(slot, focus, dict)) return std::nullopt;
      out.has_binding = true;
      out.token = slot.token;
      out.lemma = slot.lemma;
      out.slots.push_back({true, false});
      continue;
    }
    std::string want = *q.slots[k].literal;
    auto eq = [&](const std::string& have) {
      return (both_indir && k == 1) ? prep_class(want) == prep_class(have) : want == have;
    };
    if (eq(slot.lemma)) {
      out.slots.push_back({false, slot.origin == Origin::Original});
      continue;
    }
    bool found = false;
    for (const auto& a : slot.alternates)
      if (eq(a.lemma)) found = true;
    if (!found) return std::nullopt;
    out.slots.push_back({false, false});
  }
  return out;
}

}  // namespace

std::vector<MatchResult> oracle_match(const LocalStructure& local, const Index& index, const SenseDictionary& dict,
                                      Granularity g, std::size_t limit) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::size_t>> units;
  for (std::size_t r = 0; r < index.records().size(); ++r) {
    auto key = Index::unit_key(index.records()[r], g);
    if (!units.count(key)) order.push_back(key);
    units[key].push_back(r);
  }
  std::vector<MatchResult> out;
  for (const auto& key : order) {
    // every (record, dependency) pair of the unit
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t r : units[key])
      for (std::size_t d = 0; d < index.records()[r].dependencies.size(); ++d) all.emplace_back(r, d);
    const std::size_t n = local.dependencies.size();
    if (all.empty() || n == 0) continue;
    std::vector<std::size_t> pick(n, 0);
    bool any = false;
    int best_o = -1, best_a = -1;
    for (;;) {
      bool good = true;
      int o = 0, a = 0;
      bool bound = false;
      std::size_t brec = 0;
      int btok = 0;
      std::string blem;
      for (std::size_t q = 0; q < n && good; ++q) {
        auto [r, d] = all[pick[q]];
        auto u = oracle_unify(local.dependencies[q], index.records()[r].dependencies[d], local.focus, dict);
        if (!u) {
          good = false;
          break;
        }
        if (u->has_binding) {
          if (bound && (brec != r || btok != u->token || blem != u->lemma)) good = false;
          bound = true;
          brec = r;
          btok = u->token;
          blem = u->lemma;
        }
        for (const auto& s : u->slots)
          if (!s.variable) (s.original ? o : a)++;
      }
      if (good && (!any || o > best_o || (o == best_o && a > best_a))) {
        any = true;
        best_o = o;
        best_a = a;
      }
      std::size_t q = 0;
      while (q < n && ++pick[q] == all.size()) pick[q++] = 0;
      if (q == n) break;
    }
    if (!any) continue;
    const auto& first = index.records()[units[key].front()];
    MatchResult m;
    m.unit = key;
    m.doc_id = first.doc_id;
    m.sentence = first.sentence;
    m.position = units[key].front();
    m.original_count = best_o;
    m.alternate_count = best_a;
    out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [](const MatchResult& x, const MatchResult& y) {
    return std::tie(y.original_count, y.alternate_count, x.position) <
           std::tie(x.original_count, x.alternate_count, y.position);
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

// --- random corpora ---

namespace {

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

const std::vector<std::string> kNames{"César", "Crassus", "Darius", "Miltiade", "Domitien", "Brutus", "Romulus",
                                      "Titus", "Xerxès", "Spartacus"};
const std::vector<std::string> kVerbs{"battit", "défit", "vainquit", "fonda", "conquit", "commanda", "remporta",
                                      "dirigea", "assassina", "traversa", "persécuta", "construisit"};
const std::vector<std::string> kObjects{"les Perses", "Spartacus", "Rome", "la Gaule", "la victoire",
                                        "la flotte des Athéniens", "Vercingétorix", "les Helvètes", "les chrétiens"};
const std::vector<std::string> kRoles{"le chef", "le général", "le maître", "le roi", "l'empereur", "l'assassin",
                                      "le précepteur", "le successeur", "le fondateur", "le commandant"};
const std::vector<std::string> kDative{"à l'empereur", "au roi", "au chef", "au général"};
const std::vector<std::string> kPlaces{"Marathon", "Alésia", "Rome", "Issos", "Salamine"};
const std::vector<std::string> kHeads{"chef", "général", "maître", "roi"};
const std::vector<std::string> kPeoples{"Perses", "Gaulois", "Helvètes", "Athéniens"};

struct Generated {
  std::string sentence;
  std::string question;  // asks about the sentence
};

Generated sentence(std::mt19937& rng) {
  const auto& s = pick(rng, kNames);
  const auto& v = pick(rng, kVerbs);
  const auto& o = pick(rng, kObjects);
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return {s + " " + v + " " + o + ".", "Qui " + v + " " + o + " ?"};
    case 1: {
      const auto& place = pick(rng, kPlaces);
      return {s + " " + v + " " + o + " à " + place + ".", "Où " + v + " " + s + " " + o + " ?"};
    }
    case 2: {
      const auto& role = pick(rng, kRoles);
      const auto& other = pick(rng, kNames);
      return {s + " fut " + role + " de " + other + ".", "Qui fut " + role + " de " + other + " ?"};
    }
    case 3: {
      const auto& other = pick(rng, kNames);
      return {s + " succéda " + pick(rng, kDative) + " " + other + ".", "De quel chef " + s + " fut-il le successeur ?"};
    }
    default: {
      const auto& head = pick(rng, kHeads);
      return {"Le " + head + " des " + pick(rng, kPeoples) + " " + v + " " + o + ".",
              "Quel " + head + " " + v + " " + o + " ?"};
    }
  }
}

}  // namespace

std::string random_corpus(std::uint32_t seed, int max_sentences, std::vector<std::string>* questions) {
  std::mt19937 rng(seed);
  int total = std::uniform_int_distribution<int>(1, max_sentences)(rng);
  std::string out;
  int doc = 0;
  while (total > 0) {
    out += "#DOC r" + std::to_string(doc++) + "\n";
    int paragraphs = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int p = 0; p < paragraphs && total > 0; ++p) {
      int n = std::min(total, std::uniform_int_distribution<int>(1, 3)(rng));
      for (int k = 0; k < n; ++k) {
        auto g = sentence(rng);
        out += g.sentence + (k + 1 < n ? " " : "\n");
        if (questions) questions->push_back(g.question);
      }
      total -= n;
      out += "\n";
    }
  }
  return out;
}

std::vector<std::string> random_questions(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
      case 0: out.push_back("Qui " + pick(rng, kVerbs) + " " + pick(rng, kObjects) + " ?"); break;
      case 1: out.push_back("Qui fut " + pick(rng, kRoles) + " de " + pick(rng, kNames) + " ?"); break;
      case 2: out.push_back("De quel chef " + pick(rng, kNames) + " fut-il le successeur ?"); break;
      case 3: out.push_back("Quel " + pick(rng, kHeads) + " " + pick(rng, kVerbs) + " " + pick(rng, kObjects) + " ?"); break;
      case 4: out.push_back("Où " + pick(rng, kVerbs) + " " + pick(rng, kNames) + " " + pick(rng, kObjects) + " ?"); break;
      default: out.push_back("Qui succéda " + pick(rng, kDative) + " " + pick(rng, kNames) + " ?"); break;
    }
  }
  return out;
}

// questions about the corpus itself plus unrelated ones
std::vector<std::string> mixed_questions(std::uint32_t seed, std::vector<std::string> own, int extra) {
  auto more = random_questions(seed, extra);
  own.insert(own.end(), more.begin(), more.end());
  return own;
}

namespace {

std::set<std::string> units_of(const std::vector<MatchResult>& v) {
  std::set<std::string> out;
  for (const auto& m : v) out.insert(m.unit);
  return out;
}

std::vector<LocalStructure> analyzable(const std::vector<std::string>& qs) {
  std::vector<LocalStructure> out;
  for (const auto& q : qs) {
    try {
      out.push_back(analyze_question(q, bundled()));
    } catch (const UnanalyzableQuestion&) {
    }
  }
  return out;
}

template <typename F>
void guarded(CheckResult& r, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.failures.push_back(label + ": exception: " + e.what());
  }
}

}  // namespace

CheckResult check_enrichment_monotonicity(int corpora, std::uint32_t seed) {
  CheckResult res{"enrichment monotonicity"};
  const auto& dict = bundled().dictionary;
  for (int c = 0; c < corpora; ++c) {
    guarded(res, "corpus " + std::to_string(c), [&] {
      std::vector<std::string> own;
      auto text = random_corpus(seed + c, 10, &own);
      auto locals = analyzable(mixed_questions(seed * 7 + c, own, 4));
      std::map<std::string, Index> idx;
      for (const auto& p : preset_names()) idx.emplace(p, index_of(text, p));
      for (const auto& local : locals) {
        for (auto g : {Granularity::Sentence, Granularity::Document}) {
          auto base = units_of(match(local, idx.at("plancher"), dict, g, kNoLimit));
          auto sem = units_of(match(local, idx.at("syn-sem"), dict, g, kNoLimit));
          for (const auto& p : {"syn-no-sem", "syn-sem", "all"}) {
            auto enriched = units_of(match(local, idx.at(p), dict, g, kNoLimit));
            if (!std::includes(enriched.begin(), enriched.end(), base.begin(), base.end()))
              res.failures.push_back("corpus " + std::to_string(c) + ": plancher not within " + p);
          }
          if (!base.empty()) ++res.witnesses;
          auto all = units_of(match(local, idx.at("all"), dict, g, kNoLimit));
          if (!std::includes(all.begin(), all.end(), sem.begin(), sem.end()))
            res.failures.push_back("corpus " + std::to_string(c) + ": syn-sem not within all");
        }
        ++res.cases;
      }
    });
  }
  return res;
}

CheckResult check_index_oracle(int corpora, std::uint32_t seed) {
  CheckResult res{"index brute-force oracle"};
  const auto& dict = bundled().dictionary;
  for (int c = 0; c < corpora; ++c) {
    guarded(res, "corpus " + std::to_string(c), [&] {
      const std::string label = "corpus " + std::to_string(c);
      const auto& preset = preset_names()[c % preset_names().size()];
      std::vector<std::string> own;
      auto idx = index_of(random_corpus(seed + c, 50, &own), preset);
      if (own.size() > 8) own.resize(8);
      if (idx.records().size() > 50) res.failures.push_back(label + ": generator exceeded 50 sentences");

      // postings by scanning every slot
      std::map<std::string, std::vector<Posting>> scan;
      const auto& recs = idx.records();
      for (std::size_t r = 0; r < recs.size(); ++r)
        for (std::size_t d = 0; d < recs[r].dependencies.size(); ++d)
          for (std::size_t k = 0; k < recs[r].dependencies[d].slots.size(); ++k) {
            const auto& s = recs[r].dependencies[d].slots[k];
            if (!idx.stop_lemmas().count(s.lemma)) scan[s.lemma].push_back({r, d, k, s.origin});
            for (const auto& a : s.alternates)
              if (!idx.stop_lemmas().count(a.lemma)) scan[a.lemma].push_back({r, d, k, a.origin});
          }
      for (auto& [lemma, v] : scan) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      }
      if (scan != idx.postings()) res.failures.push_back(label + ": postings differ from a full scan");

      // lookups by scanning records
      for (auto g : {Granularity::Sentence, Granularity::Paragraph, Granularity::Document}) {
        std::map<std::string, std::set<std::string>> where;
        for (const auto& [lemma, v] : scan)
          for (const auto& p : v) where[lemma].insert(Index::unit_key(recs[p.record], g));
        for (const auto& [lemma, units] : where)
          if (idx.lookup(lemma, g) != units) res.failures.push_back(label + ": lookup(" + lemma + ") differs");
      }

      // matcher against the exhaustive oracle
      for (const auto& local : analyzable(mixed_questions(seed * 13 + c, own, 4))) {
        for (auto g : {Granularity::Sentence, Granularity::Paragraph}) {
          auto fast = match(local, idx, dict, g, 5);
          auto slow = oracle_match(local, idx, dict, g, 5);
          bool same = fast.size() == slow.size();
          for (std::size_t i = 0; same && i < fast.size(); ++i)
            same = fast[i].unit == slow[i].unit && fast[i].original_count == slow[i].original_count &&
                   fast[i].alternate_count == slow[i].alternate_count;
          if (!same) res.failures.push_back(label + ": match differs from the oracle (" + preset + ")");
          if (!slow.empty()) ++res.witnesses;
        }
        ++res.cases;
      }
    });
  }
  return res;
}

CheckResult check_wsd_self_consistency() {
  CheckResult res{"WSD self-consistency"};
  const auto& r = bundled();
  const auto& rules = bundled_rules();
  for (const auto& [key, senses] : r.dictionary.entries())
    for (const auto& sense : senses)
      for (const auto& example : sense.examples) {
        const std::string label = key.first + " sens " + std::to_string(sense.sense_id) + " \"" + example + "\"";
        guarded(res, label, [&] {
          ++res.cases;
          ++res.witnesses;
          bool seen = false;
          for (const auto& s : parse_text(example, r)) {
            for (const auto& a : apply_rules(s.dependencies, rules, r.dictionary)) {
              if (a.lemma != key.first || a.pos != key.second) continue;
              seen = true;
              if (a.sense_id != sense.sense_id)
                res.failures.push_back(label + ": assigned sens " + std::to_string(a.sense_id));
            }
          }
          if (!seen) res.failures.push_back(label + ": headword got no sense");
        });
      }
  return res;
}

CheckResult check_span_reconstruction(int samples, std::uint32_t seed) {
  CheckResult res{"tokenizer span reconstruction"};
  static const std::vector<std::string> pieces{
      "César", "l'", "empereur", "fut-il", "a-t-il", "M.", "des", "aujourd'hui", "Alésia", "1905", "...", "?", "!",
      ",", "«", "»", "l’arrivée", "bœufs", "é", "-", "'", "’", "Qu'il", "est-ce", "J.", ".", "env.", "Œuvre",
      "jusqu'à", "peut-être", "x-", "-t-", "\xE2\x80\x94", "(", ")"};
  static const std::vector<std::string> gaps{" ", "", "\n", "  ", "\xC2\xA0", "\t", "\xE2\x80\xAF"};
  std::mt19937 rng(seed);
  for (int n = 0; n < samples; ++n) {
    std::string text;
    int len = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int i = 0; i < len; ++i) text += pick(rng, pieces) + pick(rng, gaps);
    guarded(res, "sample " + std::to_string(n), [&] {
      ++res.cases;
      std::string rebuilt;
      std::size_t at = 0;
      bool ok = true;
      for (const auto& sent : tokenize(text, bundled().abbreviations))
        for (const auto& t : sent) {
          if (t.begin < at || t.end > text.size() || t.surface != text.substr(t.begin, t.end - t.begin) ||
              t.begin == t.end) {
            ok = false;
            break;
          }
          std::string gap = text.substr(at, t.begin - at);
          std::string solid;
          for (std::size_t i = 0; i < gap.size(); i += text::cp_length(gap, i))
            if (!text::is_space(gap, i)) solid += gap.substr(i, text::cp_length(gap, i));
          if (!solid.empty() && solid != "-" && solid != "-t-" && solid != "-T-") ok = false;
          rebuilt += gap + t.surface;
          at = t.end;
        }
      for (std::size_t i = at; i < text.size(); i += text::cp_length(text, i))
        if (!text::is_space(text, i)) ok = false;
      rebuilt += text.substr(std::min(at, text.size()));
      if (text.size() > 0) ++res.witnesses;
      if (!ok || rebuilt != text) res.failures.push_back("spans do not rebuild \"" + text + "\"");
    });
  }
  return res;
}

CheckResult check_reload_equality(int corpora, std::uint32_t seed) {
  CheckResult res{"index reload equality"};
  auto dir = std::filesystem::temp_directory_path();
  for (int c = 0; c < corpora; ++c) {
    guarded(res, "corpus " + std::to_string(c), [&] {
      ++res.cases;
      const auto& preset = preset_names()[c % preset_names().size()];
      auto idx = index_of(random_corpus(seed + c, 20), preset);
      auto path = (dir / ("qa_reload_" + std::to_string(seed) + "_" + std::to_string(c) + ".json")).string();
      idx.save(path);
      auto back = Index::load(path);
      std::filesystem::remove(path);
      if (!idx.postings().empty()) ++res.witnesses;
      if (!(back == idx)) res.failures.push_back("corpus " + std::to_string(c) + ": reloaded index differs");
      if (back.to_json() != idx.to_json()) res.failures.push_back("corpus " + std::to_string(c) + ": json differs");
    });
  }
  return res;
}

}  // namespace qa::testing

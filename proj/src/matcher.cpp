#include "qa/matcher.hpp"

#include <algorithm>
#include <map>

namespace qa {

bool features_compatible(const FeatureSet& a, const FeatureSet& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
         std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool binding_satisfies(const EnrichedSlot& slot, const Focus& focus, const SenseDictionary& dict) {
  if (focus.lemma && (slot.lemma == *focus.lemma || slot.alternate(*focus.lemma))) return true;
  for (const SenseEntry* s : dict.senses_of_lemma(slot.lemma))
    if (focus.constraints.count(s->sem_class) || focus.constraints.count(s->domain)) return true;
  return false;
}

std::optional<UnifyResult> unify_dependency(const QueryDependency& qdep, const EnrichedDependency& edep,
                                            const Focus& focus, const SenseDictionary& dict) {
  if (qdep.name != edep.name || qdep.slots.size() != edep.slots.size()) return std::nullopt;
  if (!features_compatible(qdep.features, edep.features)) return std::nullopt;
  const int qprep = preposition_slot(qdep.features);
  const int eprep = preposition_slot(edep.features);
  UnifyResult out;
  for (std::size_t k = 0; k < qdep.slots.size(); ++k) {
    const QuerySlot& q = qdep.slots[k];
    const EnrichedSlot& e = edep.slots[k];
    if (q.is_variable()) {
      if (!binding_satisfies(e, focus, dict)) return std::nullopt;
      out.binding = Binding{e.lemma, 0, e.token, {}};
      out.slots.push_back({e.lemma, e.origin, true});
      continue;
    }
    const std::string& want = *q.literal;
    const bool prep = static_cast<int>(k) == qprep && static_cast<int>(k) == eprep;
    auto same = [&](const std::string& have) { return prep ? same_preposition(want, have) : want == have; };
    if (same(e.lemma)) {
      out.slots.push_back({e.lemma, e.origin, false});
      continue;
    }
    auto alt = std::find_if(e.alternates.begin(), e.alternates.end(), [&](const Alternate& a) { return same(a.lemma); });
    if (alt == e.alternates.end()) return std::nullopt;
    out.slots.push_back({alt->lemma, alt->origin, false});
  }
  return out;
}

namespace {

struct Candidate {
  std::size_t record;
  std::size_t dependency;
  UnifyResult result;
};

struct Search {
  const std::vector<std::vector<Candidate>>& candidates;
  std::vector<const Candidate*> chosen;
  std::vector<const Candidate*> best;
  int best_original = -1;
  int best_alternate = -1;
  bool found = false;

  static void count(const Candidate& c, int& orig, int& alt) {
    for (const auto& s : c.result.slots) {
      if (s.variable) continue;
      if (s.origin == Origin::Original) ++orig;
      else ++alt;
    }
  }

  void run(std::size_t i, const Binding* bound) {
    if (i == candidates.size()) {
      int orig = 0, alt = 0;
      for (const Candidate* c : chosen) count(*c, orig, alt);
      if (!found || orig > best_original || (orig == best_original && alt > best_alternate)) {
        found = true;
        best = chosen;
        best_original = orig;
        best_alternate = alt;
      }
      return;
    }
    for (const Candidate& c : candidates[i]) {
      const Binding* next = bound;
      if (c.result.binding) {
        if (bound && (bound->record != c.record || bound->token != c.result.binding->token ||
                      bound->lemma != c.result.binding->lemma))
          continue;
        next = &*c.result.binding;
      }
      chosen.push_back(&c);
      run(i + 1, next);
      chosen.pop_back();
    }
  }
};

std::vector<std::string> companions_of(const SentenceRecord& rec, int token) {
  std::vector<std::string> out;
  for (const auto& d : rec.dependencies)
    if (!d.derived && d.name == "NN" && d.slots.size() == 2 && d.slots[0].token == token && token >= 0)
      out.push_back(d.slots[1].lemma);
  return out;
}

}  // namespace

std::optional<MatchResult> match_unit(const LocalStructure& local, const Index& index,
                                      const std::vector<std::size_t>& records, const SenseDictionary& dict,
                                      Granularity g) {
  if (records.empty()) return std::nullopt;
  std::vector<std::vector<Candidate>> candidates(local.dependencies.size());
  for (std::size_t q = 0; q < local.dependencies.size(); ++q) {
    for (std::size_t r : records) {
      const auto& deps = index.records()[r].dependencies;
      for (std::size_t d = 0; d < deps.size(); ++d) {
        if (auto u = unify_dependency(local.dependencies[q], deps[d], local.focus, dict)) {
          if (u->binding) u->binding->record = r;
          candidates[q].push_back({r, d, std::move(*u)});
        }
      }
    }
    if (candidates[q].empty()) return std::nullopt;
  }
  Search search{candidates, {}, {}};
  search.run(0, nullptr);
  if (!search.found) return std::nullopt;

  const SentenceRecord& first = index.records()[records.front()];
  MatchResult m;
  m.unit = Index::unit_key(first, g);
  m.doc_id = first.doc_id;
  m.sentence = first.sentence;
  m.position = records.front();
  m.original_count = search.best_original;
  m.alternate_count = search.best_alternate;
  for (const Candidate* c : search.best) {
    m.evidence.push_back({c->record, c->dependency, c->result.slots});
    if (c->result.binding && !m.binding) {
      m.binding = c->result.binding;
      m.binding->companions = companions_of(index.records()[c->record], m.binding->token);
    }
  }
  return m;
}

bool ranks_before(const MatchResult& a, const MatchResult& b) {
  if (a.original_count != b.original_count) return a.original_count > b.original_count;
  if (a.alternate_count != b.alternate_count) return a.alternate_count > b.alternate_count;
  if (a.position != b.position) return a.position < b.position;
  if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
  return a.sentence < b.sentence;
}

std::vector<MatchResult> match(const LocalStructure& local, const Index& index, const SenseDictionary& dict,
                               Granularity g, std::size_t limit) {
  // units in corpus order
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::size_t>> units;
  for (std::size_t r = 0; r < index.records().size(); ++r) {
    auto key = Index::unit_key(index.records()[r], g);
    auto [it, fresh] = units.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(r);
  }

  // postings narrow the candidate units to those holding every indexed literal
  std::optional<std::set<std::string>> allowed;
  for (const auto& q : local.dependencies) {
    for (const auto& s : q.slots) {
      if (s.is_variable() || index.stop_lemmas().count(*s.literal)) continue;
      auto hits = index.lookup(*s.literal, g);
      if (!allowed) {
        allowed = std::move(hits);
      } else {
        std::set<std::string> both;
        std::set_intersection(allowed->begin(), allowed->end(), hits.begin(), hits.end(),
                              std::inserter(both, both.begin()));
        allowed = std::move(both);
      }
    }
  }

  std::vector<MatchResult> out;
  for (const auto& key : order) {
    if (allowed && !allowed->count(key)) continue;
    if (auto m = match_unit(local, index, units[key], dict, g)) out.push_back(std::move(*m));
  }
  std::sort(out.begin(), out.end(), ranks_before);
  if (out.size() > limit) out.resize(limit);
  return out;
}

}  // namespace qa

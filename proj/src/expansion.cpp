#include "qa/expansion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qa {

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::Original: return "original";
    case Origin::Parasynonym: return "parasynonym";
    case Origin::ExternalSynonym: return "external-synonym";
    case Origin::Derivation: return "derivation";
  }
  return "original";
}

Origin parse_origin(std::string_view s) {
  for (Origin o : {Origin::Original, Origin::Parasynonym, Origin::ExternalSynonym, Origin::Derivation})
    if (to_string(o) == s) return o;
  throw DataError("unknown origin tag '" + std::string(s) + "'");
}

const Alternate* EnrichedSlot::alternate(std::string_view l) const {
  for (const auto& a : alternates)
    if (a.lemma == l) return &a;
  return nullptr;
}

EnrichedDependency lift(const Dependency& dep) {
  EnrichedDependency out{dep.name, dep.features, {}, false, {}, {}};
  for (const auto& s : dep.slots) out.slots.push_back({s.lemma, s.pos, s.token, Origin::Original, {}});
  return out;
}

Dependency strip(const EnrichedDependency& dep) {
  Dependency out{dep.name, dep.features, {}};
  for (const auto& s : dep.slots) out.slots.push_back({s.lemma, s.pos, s.token});
  return out;
}

namespace {

std::vector<Alternate> unfiltered_alternates(const std::string& lemma, Pos pos, const Resources& r) {
  std::map<std::string, Origin> alts;
  if (const auto* senses = r.dictionary.senses(lemma, pos))
    for (const auto& s : *senses)
      for (const auto& p : s.parasynonyms) alts.emplace(p, Origin::Parasynonym);
  for (const auto& s : r.synonyms.synonyms_of(lemma)) alts.emplace(s, Origin::ExternalSynonym);
  alts.erase(lemma);
  std::vector<Alternate> out;
  for (auto& [l, o] : alts) out.push_back({l, o});
  return out;
}

std::vector<Alternate> filtered_alternates(const SenseAssignment& a, const Resources& r) {
  const SenseEntry& sense = r.dictionary.sense(a.lemma, a.pos, a.sense_id);
  std::vector<Alternate> out;
  for (const auto& l : sense_filtered_synonyms(a.lemma, a.pos, a.sense_id, r.dictionary, r.synonyms)) {
    bool para = std::find(sense.parasynonyms.begin(), sense.parasynonyms.end(), l) != sense.parasynonyms.end();
    out.push_back({l, para ? Origin::Parasynonym : Origin::ExternalSynonym});
  }
  return out;
}

}  // namespace

std::vector<EnrichedDependency> enrich_with_synonyms(const std::vector<Dependency>& deps,
                                                     const std::vector<SenseAssignment>& assignments,
                                                     const Resources& resources, bool sense_filter) {
  std::map<int, const SenseAssignment*> by_token;
  for (const auto& a : assignments) by_token[a.token] = &a;

  std::vector<EnrichedDependency> out;
  for (const auto& dep : deps) {
    EnrichedDependency e = lift(dep);
    const int prep = preposition_slot(dep.features);
    for (std::size_t k = 0; k < e.slots.size(); ++k) {
      EnrichedSlot& slot = e.slots[k];
      if (static_cast<int>(k) == prep || resources.is_stop(slot.lemma)) continue;
      if (sense_filter) {
        auto it = by_token.find(slot.token);
        if (it != by_token.end() && it->second->lemma == slot.lemma)
          slot.alternates = filtered_alternates(*it->second, resources);
      } else {
        slot.alternates = unfiltered_alternates(slot.lemma, slot.pos, resources);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

using Bindings = std::map<std::string, EnrichedSlot>;

bool match_pattern(const DependencyPattern& p, const EnrichedDependency& d, int pivot_token, Bindings& vars) {
  if (d.derived || p.name != d.name || p.features != d.features || p.slots.size() != d.slots.size()) return false;
  const int prep = preposition_slot(d.features);
  Bindings local = vars;
  for (std::size_t k = 0; k < p.slots.size(); ++k) {
    const std::string& want = p.slots[k];
    const EnrichedSlot& have = d.slots[k];
    if (want == "$X") {
      if (have.token != pivot_token) return false;
    } else if (!want.empty() && want[0] == '?') {
      auto [it, fresh] = local.emplace(want, have);
      if (!fresh && (it->second.token != have.token || it->second.lemma != have.lemma)) return false;
    } else if (static_cast<int>(k) == prep ? !same_preposition(want, have.lemma) : want != have.lemma) {
      return false;
    }
  }
  vars = std::move(local);
  return true;
}

void find_matches(const RewriteSchema& schema, std::size_t i, const std::vector<EnrichedDependency>& deps,
                  int pivot, std::vector<int>& used, Bindings& vars,
                  std::vector<std::pair<std::vector<int>, Bindings>>& out) {
  if (i == schema.from.size()) {
    out.emplace_back(used, vars);
    return;
  }
  for (std::size_t j = 0; j < deps.size(); ++j) {
    if (std::find(used.begin(), used.end(), static_cast<int>(j)) != used.end()) continue;
    Bindings next = vars;
    if (!match_pattern(schema.from[i], deps[j], pivot, next)) continue;
    used.push_back(static_cast<int>(j));
    find_matches(schema, i + 1, deps, pivot, used, next, out);
    used.pop_back();
  }
}

}  // namespace

std::vector<EnrichedDependency> apply_derivation_rewrites(const std::vector<EnrichedDependency>& deps,
                                                          const std::vector<SenseAssignment>& assignments,
                                                          const Resources& resources) {
  std::vector<EnrichedDependency> out;
  std::set<DependencyPattern> seen;
  for (const auto& a : assignments) {
    for (const Derivative& der : derivatives_of(a.lemma, a.pos, a.sense_id, resources.dictionary)) {
      for (const RewriteSchema& schema : resources.schemas) {
        if (schema.kind != der.kind) continue;
        std::vector<std::pair<std::vector<int>, Bindings>> matches;
        std::vector<int> used;
        Bindings vars;
        find_matches(schema, 0, deps, a.token, used, vars, matches);
        for (auto& [sources, bound] : matches) {
          std::vector<int> sorted_sources = sources;
          std::sort(sorted_sources.begin(), sorted_sources.end());
          for (const DependencyPattern& to : schema.to) {
            EnrichedDependency e{to.name, to.features, {}, true, sorted_sources, der.kind};
            const int prep = preposition_slot(to.features);
            for (std::size_t k = 0; k < to.slots.size(); ++k) {
              const std::string& s = to.slots[k];
              if (s == "$D") e.slots.push_back({der.lemma, der.pos, a.token, Origin::Derivation, {}});
              else if (s[0] == '?') e.slots.push_back(bound.at(s));
              else e.slots.push_back({s, static_cast<int>(k) == prep ? Pos::Prep : Pos::Noun, -1, Origin::Original, {}});
            }
            DependencyPattern key{e.name, e.features, {}};
            for (const auto& slot : e.slots) key.slots.push_back(slot.lemma);
            if (seen.insert(key).second) out.push_back(std::move(e));
          }
        }
      }
    }
  }
  return out;
}

std::vector<EnrichedDependency> enrich(const std::vector<Dependency>& deps,
                                       const std::vector<SenseAssignment>& assignments,
                                       const Resources& resources, const ExpansionConfig& config) {
  std::vector<EnrichedDependency> out;
  if (config.synonyms) {
    out = enrich_with_synonyms(deps, assignments, resources, config.sense_filter);
  } else {
    for (const auto& d : deps) out.push_back(lift(d));
  }
  if (config.derivations) {
    auto derived = apply_derivation_rewrites(out, assignments, resources);
    out.insert(out.end(), std::make_move_iterator(derived.begin()), std::make_move_iterator(derived.end()));
  }
  return out;
}

std::string format(const EnrichedDependency& dep) {
  std::string out = dep.name + format_features(dep.features) + "(";
  for (std::size_t k = 0; k < dep.slots.size(); ++k) {
    if (k) out += ',';
    const auto& s = dep.slots[k];
    if (s.alternates.empty()) {
      out += s.lemma;
    } else {
      out += "{" + s.lemma;
      for (const auto& a : s.alternates) out += "|" + a.lemma;
      out += "}";
    }
  }
  return out + ")";
}

}  // namespace qa

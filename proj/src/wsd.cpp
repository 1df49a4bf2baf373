#include "qa/wsd.hpp"

#include <algorithm>
#include <map>

namespace qa {

std::string DisambRule::to_string() const {
  return lemma + " : " + format(pattern) + " ==> sens " + std::to_string(sense_id);
}

RuleSet::RuleSet(std::vector<DisambRule> rules) : rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

std::vector<const DisambRule*> RuleSet::rules_for(const std::string& lemma, Pos pos) const {
  std::vector<const DisambRule*> out;
  for (const auto& r : rules_)
    if (r.lemma == lemma && r.pos == pos) out.push_back(&r);
  return out;
}

std::string RuleSet::dump() const {
  std::string out;
  for (const auto& r : rules_) out += r.to_string() + "\n";
  return out;
}

std::vector<DisambRule> rules_from_example(const SenseEntry& sense, const std::string& example,
                                           const Resources& resources) {
  std::vector<DisambRule> out;
  for (const auto& sentence : parse_text(example, resources)) {
    for (const Dependency& dep : sentence.dependencies) {
      auto target = std::find_if(dep.slots.begin(), dep.slots.end(), [&](const Slot& s) {
        return s.lemma == sense.lemma && s.pos == sense.pos;
      });
      if (target == dep.slots.end()) continue;
      DisambRule rule{sense.lemma, sense.pos, {dep.name, dep.features, {}},
                      static_cast<std::size_t>(target - dep.slots.begin()), sense.sense_id, 0};
      const int prep = preposition_slot(dep.features);
      int content = 0;
      for (std::size_t k = 0; k < dep.slots.size(); ++k) {
        const Slot& s = dep.slots[k];
        if (k == rule.target_slot) {
          rule.pattern.slots.push_back(s.lemma);
        } else if (static_cast<int>(k) == prep) {
          rule.pattern.slots.push_back(preposition_class(s.lemma));
          ++rule.specificity;
        } else if (is_content_pos(s.pos) && !resources.is_stop(s.lemma)) {
          rule.pattern.slots.push_back(s.lemma);
          ++rule.specificity;
          ++content;
        } else {
          rule.pattern.slots.push_back("*");
        }
      }
      // a rule with no content-word context would fire on every occurrence
      if (content > 0) out.push_back(std::move(rule));
    }
  }
  return out;
}

RuleSet compile_rules(const SenseDictionary& dict, const Resources& resources) {
  std::vector<DisambRule> all;
  std::vector<std::string> warnings;
  for (const auto& [key, senses] : dict.entries()) {
    for (const SenseEntry& sense : senses) {
      for (const auto& example : sense.examples) {
        auto rules = rules_from_example(sense, example, resources);
        if (rules.empty()) {
          warnings.push_back(sense.lemma + " sense " + std::to_string(sense.sense_id) +
                             ": no dependency on the headword in example \"" + example + "\"");
        }
        all.insert(all.end(), rules.begin(), rules.end());
      }
      for (const auto& schema : sense.schemas) {
        DependencyPattern p = parse_pattern(schema);
        auto n = std::count(p.slots.begin(), p.slots.end(), sense.lemma);
        if (n != 1) {
          throw DataError("schema '" + schema + "' of " + sense.lemma + " sense " + std::to_string(sense.sense_id) +
                          " must reference the headword exactly once");
        }
        DisambRule rule{sense.lemma, sense.pos, p, 0, sense.sense_id, 0};
        for (std::size_t k = 0; k < p.slots.size(); ++k) {
          if (p.slots[k] == sense.lemma) rule.target_slot = k;
          else if (p.slots[k] != "*") ++rule.specificity;
        }
        all.push_back(std::move(rule));
      }
    }
  }
  RuleSet set(std::move(all));
  for (auto& w : warnings) set.add_warning(std::move(w));
  return set;
}

bool rule_unifies(const DisambRule& rule, const Dependency& dep, int token) {
  const auto& p = rule.pattern;
  if (p.name != dep.name || p.features != dep.features || p.slots.size() != dep.slots.size()) return false;
  const Slot& target = dep.slots[rule.target_slot];
  if (target.token != token || target.lemma != rule.lemma || target.pos != rule.pos) return false;
  const int prep = preposition_slot(dep.features);
  for (std::size_t k = 0; k < p.slots.size(); ++k) {
    if (k == rule.target_slot || p.slots[k] == "*") continue;
    bool ok = static_cast<int>(k) == prep ? same_preposition(p.slots[k], dep.slots[k].lemma)
                                          : p.slots[k] == dep.slots[k].lemma;
    if (!ok) return false;
  }
  return true;
}

std::vector<SenseAssignment> apply_rules(const std::vector<Dependency>& deps, const RuleSet& rules,
                                         const SenseDictionary& dict) {
  // occurrences in token order
  std::map<int, std::pair<std::string, Pos>> occurrences;
  for (const auto& d : deps)
    for (const auto& s : d.slots)
      if (s.token >= 0 && dict.senses(s.lemma, s.pos)) occurrences.emplace(s.token, std::make_pair(s.lemma, s.pos));

  std::vector<SenseAssignment> out;
  for (const auto& [token, key] : occurrences) {
    const auto& [lemma, pos] = key;
    const DisambRule* best = nullptr;
    for (const DisambRule* r : rules.rules_for(lemma, pos)) {
      bool fires = std::any_of(deps.begin(), deps.end(), [&](const Dependency& d) { return rule_unifies(*r, d, token); });
      if (!fires) continue;
      if (!best || r->specificity > best->specificity ||
          (r->specificity == best->specificity && r->sense_id < best->sense_id))
        best = r;
    }
    const auto& senses = *dict.senses(lemma, pos);
    const SenseEntry* chosen = nullptr;
    bool forced = false;
    if (best) {
      chosen = &dict.sense(lemma, pos, best->sense_id);
    } else if (senses.size() == 1) {
      chosen = &senses.front();
      forced = true;
    }
    if (chosen)
      out.push_back({token, lemma, pos, chosen->sense_id, chosen->sem_class, chosen->domain, forced});
  }
  return out;
}

}  // namespace qa

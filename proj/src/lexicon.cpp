#include "qa/lexicon.hpp"

#include <algorithm>

namespace qa {

using nlohmann::json;

json parse_json_file(const std::string& path) {
  const std::string content = text::read_file(path);
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(path, text::line_of(content, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
}

namespace {

std::string entry_name(const std::string& lemma, Pos pos) {
  return "(" + lemma + ", " + std::string(to_string(pos)) + ")";
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw DataError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw DataError(where + ": field '" + key + "' has the wrong type");
  }
}

template <typename T>
T optional_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return T{};
  return field<T>(obj, key, where);
}

}  // namespace

SenseDictionary SenseDictionary::from_json(const json& doc, const std::string& source) {
  if (!doc.is_array()) throw DataError(source + ": sense dictionary must be a JSON array");
  SenseDictionary dict;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    const json& e = doc[n];
    const std::string where = source + ": entry " + std::to_string(n);
    auto lemma = field<std::string>(e, "lemma", where);
    if (lemma.empty()) throw DataError(where + ": empty lemma");
    Pos pos = parse_pos(field<std::string>(e, "pos", where));
    const std::string name = source + ": entry " + entry_name(lemma, pos);
    if (dict.entries_.count({lemma, pos})) throw DataError(name + ": duplicate headword");

    std::vector<SenseEntry> senses;
    for (const json& s : optional_field<json>(e, "senses", name)) {
      SenseEntry se;
      se.lemma = lemma;
      se.pos = pos;
      se.sense_id = field<int>(s, "id", name);
      se.gloss = optional_field<std::string>(s, "gloss", name);
      se.sem_class = field<std::string>(s, "sem_class", name);
      se.domain = field<std::string>(s, "domain", name);
      se.parasynonyms = optional_field<std::vector<std::string>>(s, "parasynonyms", name);
      se.examples = optional_field<std::vector<std::string>>(s, "examples", name);
      se.schemas = optional_field<std::vector<std::string>>(s, "schemas", name);
      for (const json& d : optional_field<json>(s, "derivatives", name)) {
        Derivative der{field<std::string>(d, "lemma", name), parse_pos(field<std::string>(d, "pos", name)),
                       field<std::string>(d, "kind", name)};
        if (der.lemma == lemma && der.pos == pos)
          throw DataError(name + ": sense " + std::to_string(se.sense_id) + " lists itself as a derivative");
        se.derivatives.push_back(std::move(der));
      }
      if (se.sem_class.empty() || se.domain.empty())
        throw DataError(name + ": sense " + std::to_string(se.sense_id) + " has an empty sem_class or domain");
      if (std::find(se.parasynonyms.begin(), se.parasynonyms.end(), lemma) != se.parasynonyms.end())
        throw DataError(name + ": sense " + std::to_string(se.sense_id) + " lists the headword as parasynonym");
      for (const auto& schema : se.schemas) {
        try {
          parse_pattern(schema);
        } catch (const DataError& err) {
          throw DataError(name + ": " + err.what());
        }
      }
      senses.push_back(std::move(se));
    }
    std::vector<int> ids;
    for (const auto& s : senses) ids.push_back(s.sense_id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0 && ids[i] == ids[i - 1])
        throw DataError(name + ": duplicate sense id " + std::to_string(ids[i]));
      if (ids[i] != static_cast<int>(i) + 1)
        throw DataError(name + ": sense ids must be dense from 1");
    }
    std::sort(senses.begin(), senses.end(),
              [](const SenseEntry& a, const SenseEntry& b) { return a.sense_id < b.sense_id; });
    dict.by_lemma_.emplace(lemma, HeadwordKey{lemma, pos});
    dict.entries_.emplace(HeadwordKey{lemma, pos}, std::move(senses));
  }
  return dict;
}

json SenseDictionary::to_json() const {
  json out = json::array();
  for (const auto& [key, senses] : entries_) {
    json e{{"lemma", key.first}, {"pos", std::string(to_string(key.second))}, {"senses", json::array()}};
    for (const auto& s : senses) {
      json ders = json::array();
      for (const auto& d : s.derivatives)
        ders.push_back({{"lemma", d.lemma}, {"pos", std::string(to_string(d.pos))}, {"kind", d.kind}});
      e["senses"].push_back({{"id", s.sense_id},
                             {"gloss", s.gloss},
                             {"sem_class", s.sem_class},
                             {"domain", s.domain},
                             {"parasynonyms", s.parasynonyms},
                             {"derivatives", ders},
                             {"examples", s.examples},
                             {"schemas", s.schemas}});
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<SenseEntry>* SenseDictionary::senses(const std::string& lemma, Pos pos) const {
  auto it = entries_.find({lemma, pos});
  return it == entries_.end() ? nullptr : &it->second;
}

const SenseEntry* SenseDictionary::find_sense(const std::string& lemma, Pos pos, int sense_id) const {
  const auto* all = senses(lemma, pos);
  if (!all) return nullptr;
  for (const auto& s : *all)
    if (s.sense_id == sense_id) return &s;
  return nullptr;
}

const SenseEntry& SenseDictionary::sense(const std::string& lemma, Pos pos, int sense_id) const {
  if (const auto* s = find_sense(lemma, pos, sense_id)) return *s;
  throw DataError("unknown sense (" + lemma + ", " + std::string(to_string(pos)) + ", " +
                  std::to_string(sense_id) + ")");
}

std::vector<const SenseEntry*> SenseDictionary::senses_of_lemma(const std::string& lemma) const {
  std::vector<const SenseEntry*> out;
  auto [b, e] = by_lemma_.equal_range(lemma);
  for (auto it = b; it != e; ++it)
    for (const auto& s : entries_.at(it->second)) out.push_back(&s);
  return out;
}

bool SenseDictionary::has_lemma(const std::string& lemma) const { return by_lemma_.count(lemma) > 0; }

SenseDictionary load_sense_dictionary(const std::string& path) {
  return SenseDictionary::from_json(parse_json_file(path), path);
}

SynonymGroups SynonymGroups::from_json(const json& doc, const std::string& source) {
  if (!doc.is_array()) throw DataError(source + ": synonym groups must be a JSON array");
  SynonymGroups out;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    const std::string where = source + ": group " + std::to_string(n);
    SynonymGroup g{field<std::string>(doc[n], "source", where),
                   field<std::vector<std::string>>(doc[n], "members", where)};
    std::sort(g.members.begin(), g.members.end());
    g.members.erase(std::unique(g.members.begin(), g.members.end()), g.members.end());
    if (g.members.size() < 2) throw DataError(where + ": a group needs at least two members");
    for (const auto& m : g.members) out.by_member_.emplace(m, out.groups_.size());
    out.groups_.push_back(std::move(g));
  }
  return out;
}

std::set<std::string> SynonymGroups::synonyms_of(const std::string& lemma) const {
  std::set<std::string> out;
  auto [b, e] = by_member_.equal_range(lemma);
  for (auto it = b; it != e; ++it)
    for (const auto& m : groups_[it->second].members)
      if (m != lemma) out.insert(m);
  return out;
}

SynonymGroups load_synonym_groups(const std::string& path) {
  return SynonymGroups::from_json(parse_json_file(path), path);
}

std::set<std::string> sense_filtered_synonyms(const std::string& lemma, Pos pos, int sense_id,
                                              const SenseDictionary& dict,
                                              const SynonymGroups& groups) {
  const SenseEntry& sense = dict.sense(lemma, pos, sense_id);
  std::set<std::string> out(sense.parasynonyms.begin(), sense.parasynonyms.end());
  for (const auto& candidate : groups.synonyms_of(lemma)) {
    for (const SenseEntry* cs : dict.senses_of_lemma(candidate)) {
      if (cs->sem_class == sense.sem_class && cs->domain == sense.domain) {
        out.insert(candidate);
        break;
      }
    }
  }
  out.erase(lemma);
  return out;
}

std::set<Derivative> derivatives_of(const std::string& lemma, Pos pos, int sense_id,
                                    const SenseDictionary& dict) {
  const SenseEntry& sense = dict.sense(lemma, pos, sense_id);
  return {sense.derivatives.begin(), sense.derivatives.end()};
}

namespace {

int count_slot(const DependencyPattern& p, const std::string& slot) {
  return static_cast<int>(std::count(p.slots.begin(), p.slots.end(), slot));
}

}  // namespace

std::vector<RewriteSchema> rewrite_schemas_from_json(const json& doc, const std::string& source) {
  if (!doc.is_array()) throw DataError(source + ": rewrite schemas must be a JSON array");
  std::vector<RewriteSchema> out;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    const std::string where = source + ": schema " + std::to_string(n);
    RewriteSchema r;
    r.kind = field<std::string>(doc[n], "kind", where);
    try {
      r.from = parse_pattern_list(field<std::string>(doc[n], "from", where));
      r.to = parse_pattern_list(field<std::string>(doc[n], "to", where));
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
    std::set<std::string> from_vars;
    for (const auto& p : r.from) {
      if (count_slot(p, "$X") != 1) throw DataError(where + ": each from-pattern must reference $X exactly once");
      if (count_slot(p, "$D") != 0) throw DataError(where + ": from-pattern may not reference $D");
      for (const auto& s : p.slots)
        if (!s.empty() && s[0] == '?') from_vars.insert(s);
    }
    for (const auto& p : r.to) {
      if (count_slot(p, "$D") != 1) throw DataError(where + ": each to-pattern must reference $D exactly once");
      for (const auto& s : p.slots) {
        if (s == "$X") throw DataError(where + ": to-pattern may not reference $X");
        if (!s.empty() && s[0] == '?' && !from_vars.count(s))
          throw DataError(where + ": variable " + s + " of to-pattern is unbound");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RewriteSchema> load_rewrite_schemas(const std::string& path) {
  return rewrite_schemas_from_json(parse_json_file(path), path);
}

}  // namespace qa

#include "qa/pattern.hpp"

#include <cctype>

namespace qa {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

DependencyPattern parse_pattern(std::string_view surface) {
  std::string s = trim(surface);
  auto bad = [&](const std::string& why) {
    return DataError("malformed dependency pattern '" + s + "': " + why);
  };
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw bad("expected NAME(slot,...)");
  DependencyPattern p;
  std::string head = trim(std::string_view(s).substr(0, open));
  if (auto lb = head.find('['); lb != std::string::npos) {
    if (head.back() != ']') throw bad("unterminated feature list");
    for (auto& f : split_commas(std::string_view(head).substr(lb + 1, head.size() - lb - 2)))
      if (!f.empty()) p.features.insert(f);
    head = trim(std::string_view(head).substr(0, lb));
  }
  if (head.empty()) throw bad("missing relation name");
  p.name = head;
  p.slots = split_commas(std::string_view(s).substr(open + 1, s.size() - open - 2));
  if (p.slots.size() < 2 || p.slots.size() > 3) throw bad("expected 2 or 3 slots");
  for (auto& slot : p.slots)
    if (slot.empty()) throw bad("empty slot");
  return p;
}

std::vector<DependencyPattern> parse_pattern_list(std::string_view surface) {
  std::vector<DependencyPattern> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= surface.size(); ++i) {
    if (i < surface.size() && surface[i] == '(') ++depth;
    if (i < surface.size() && surface[i] == ')') --depth;
    if (i == surface.size() || (surface[i] == '+' && depth == 0)) {
      out.push_back(parse_pattern(surface.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string format_features(const FeatureSet& features) {
  if (features.empty()) return {};
  std::string out = "[";
  bool first = true;
  for (const auto& f : features) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  return out + "]";
}

std::string format(const DependencyPattern& p) {
  std::string out = p.name + format_features(p.features) + "(";
  for (std::size_t i = 0; i < p.slots.size(); ++i) {
    if (i) out += ',';
    out += p.slots[i];
  }
  return out + ")";
}

DependencyPattern to_pattern(const Dependency& d) {
  DependencyPattern p{d.name, d.features, {}};
  for (const auto& s : d.slots) p.slots.push_back(s.lemma);
  return p;
}

std::string format(const Dependency& d) { return format(to_pattern(d)); }

std::string preposition_class(std::string_view lemma) {
  if (lemma == "de" || lemma == "du" || lemma == "des" || lemma == "d'") return "de";
  if (lemma == "à" || lemma == "au" || lemma == "aux") return "à";
  return std::string(lemma);
}

bool same_preposition(std::string_view a, std::string_view b) {
  return preposition_class(a) == preposition_class(b);
}

int preposition_slot(const FeatureSet& features) { return features.count("INDIR") ? 1 : -1; }

}  // namespace qa

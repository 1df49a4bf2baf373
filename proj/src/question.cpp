#include "qa/question.hpp"

#include <algorithm>

namespace qa {
namespace {

constexpr const char* kFocusFeature = "focus";
constexpr const char* kFocusPlaceholder = "?";

bool is_focus(const Token& t) {
  const auto& f = t.reading().features;
  return std::find(f.begin(), f.end(), kFocusFeature) != f.end();
}

const MorphReading* interrogative_reading(const Token& t) {
  for (const auto& r : t.readings)
    if (r.pos == Pos::Interrog) return &r;
  return nullptr;
}

void make_focus(Token& t, std::string lemma) {
  t.readings = {MorphReading{std::move(lemma), Pos::Noun, {kFocusFeature}, {}}};
  t.selected = 0;
}

std::string lower_surface(const Token& t) { return text::to_lower(t.surface); }

struct Periphrasis {
  std::size_t at = 0;
  bool object = false;  // "est-ce que" rather than "est-ce qui"
};

// Removes "est-ce que/qui" and hyphenated subject clitics ("fut-il").
std::optional<Periphrasis> strip_interrogative_syntax(TokenSequence& s) {
  std::optional<Periphrasis> found;
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    auto que = lower_surface(s[i + 2]);
    if (lower_surface(s[i]) == "est" && s[i + 1].clitic && lower_surface(s[i + 1]) == "ce" &&
        (que == "que" || que == "qu'" || que == "qui")) {
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 3);
      found = Periphrasis{i, que != "qui"};
      break;
    }
  }
  static const std::set<std::string> subject_clitics = {"il", "elle", "ils", "elles", "on", "ce"};
  std::erase_if(s, [](const Token& t) { return t.clitic && subject_clitics.count(text::to_lower(t.surface)); });
  return found;
}

std::size_t sentence_end(const TokenSequence& s) {
  std::size_t end = s.size();
  while (end > 0 && s[end - 1].pos() == Pos::Punct) --end;
  return end;
}

// Moves s[from, from+count) to just before the trailing punctuation.
void move_to_end(TokenSequence& s, std::size_t from, std::size_t count) {
  std::size_t end = sentence_end(s);
  std::rotate(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(from + count),
              s.begin() + static_cast<std::ptrdiff_t>(end));
}

// "V S" -> "S V" for inverted subjects following a fronted interrogative at
// position `verb_start`.
void uninvert(TokenSequence& s, std::size_t verb_start) {
  std::size_t v = verb_start;
  while (v < s.size() && (s[v].pos() == Pos::Verb || s[v].pos() == Pos::Adv)) ++v;
  if (v == verb_start) return;
  std::size_t end = sentence_end(s);
  if (v >= end) return;
  std::rotate(s.begin() + static_cast<std::ptrdiff_t>(verb_start), s.begin() + static_cast<std::ptrdiff_t>(v),
              s.begin() + static_cast<std::ptrdiff_t>(end));
}

}  // namespace

LocalStructure analyze_question(std::string_view question, const Resources& resources) {
  TokenSequence s;
  for (auto& sentence : analyze_text(question, resources.forms, resources.abbreviations))
    s.insert(s.end(), sentence.begin(), sentence.end());
  auto periphrasis = strip_interrogative_syntax(s);

  auto wh_it = std::find_if(s.begin(), s.end(), [](const Token& t) { return interrogative_reading(t) != nullptr; });
  if (wh_it == s.end()) throw UnanalyzableQuestion("unanalyzable question: no interrogative word");
  std::size_t wh = static_cast<std::size_t>(wh_it - s.begin());
  const std::string wh_lemma = interrogative_reading(*wh_it)->lemma;
  const bool fronted_prep = wh > 0 && s[wh - 1].pos() == Pos::Prep;

  LocalStructure local;
  Focus& focus = local.focus;
  bool explicit_word = wh_lemma == "quel" && wh + 1 < s.size() && s[wh + 1].has_pos(Pos::Noun);
  if (explicit_word) {
    // "De quel chef ...": the noun is the focus, "quel" disappears
    Token& noun = s[wh + 1];
    auto reading = *std::find_if(noun.readings.begin(), noun.readings.end(),
                                 [](const MorphReading& r) { return r.pos == Pos::Noun; });
    focus.kind = FocusKind::ExplicitWord;
    focus.lemma = reading.lemma;
    for (const SenseEntry* sense : resources.dictionary.senses_of_lemma(reading.lemma)) {
      focus.constraints.insert(sense->sem_class);
      focus.constraints.insert(sense->domain);
    }
    make_focus(noun, reading.lemma);
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(wh));
    if (fronted_prep) move_to_end(s, wh - 1, 2);
  } else {
    auto entry = resources.interrogatives.find(wh_lemma);
    if (entry == resources.interrogatives.end())
      throw UnanalyzableQuestion("unanalyzable question: unsupported interrogative '" + wh_lemma + "'");
    Interrogative info = entry->second;
    // "Qui est-ce que Romulus vainquit ?" asks for the object
    if (periphrasis && periphrasis->object && periphrasis->at == wh + 1 && info.role == "subject") info.role = "object";
    focus.kind = FocusKind::InterrogativeOnly;
    focus.constraints = info.traits;
    if (info.role == "adverbial") {
      // "Où mourut Titus ?" -> "Titus mourut à ?"
      Token prep = s[wh];
      prep.readings = {MorphReading{info.preposition, Pos::Prep, {}, {}}};
      prep.selected = 0;
      Token var = s[wh];
      make_focus(var, kFocusPlaceholder);
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(wh));
      uninvert(s, wh);
      std::size_t end = sentence_end(s);
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(end), {prep, var});
    } else if (info.role == "object" && !fronted_prep) {
      // "Que remporta César ?" -> "César remporta ?"
      make_focus(s[wh], kFocusPlaceholder);
      uninvert(s, wh + 1);
      move_to_end(s, wh, 1);
    } else {
      make_focus(s[wh], kFocusPlaceholder);
      if (fronted_prep) move_to_end(s, wh - 1, 2);
    }
  }

  tag(s);
  AnalyzedSentence parsed = parse_sentence(std::move(s), resources);
  for (const Dependency& d : parsed.dependencies) {
    QueryDependency q{d.name, d.features, {}};
    bool interrogative_left = false;
    for (const Slot& slot : d.slots) {
      const Token& tok = parsed.tokens[static_cast<std::size_t>(slot.token)];
      if (is_focus(tok)) {
        q.slots.push_back({std::nullopt});
      } else {
        if (slot.pos == Pos::Interrog || resources.interrogatives.count(slot.lemma) || slot.lemma == "quel")
          interrogative_left = true;
        q.slots.push_back({slot.lemma});
      }
    }
    if (interrogative_left) continue;
    for (std::size_t k = 0; k < q.slots.size(); ++k)
      if (q.slots[k].is_variable()) focus.hosts.emplace_back(local.dependencies.size(), k);
    local.dependencies.push_back(std::move(q));
  }
  if (local.dependencies.empty()) throw UnanalyzableQuestion("unanalyzable question: no dependency extracted");
  return local;
}

std::string format(const QueryDependency& dep) {
  std::string out = dep.name + format_features(dep.features) + "(";
  for (std::size_t k = 0; k < dep.slots.size(); ++k) {
    if (k) out += ',';
    out += dep.slots[k].literal.value_or("VAR");
  }
  return out + ")";
}

}  // namespace qa

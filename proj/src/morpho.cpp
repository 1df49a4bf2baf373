#include "qa/morpho.hpp"

#include <algorithm>
#include <array>

#include "qa/lexicon.hpp"

namespace qa {

using nlohmann::json;

const MorphReading& Token::reading() const {
  if (readings.empty()) throw std::logic_error("token '" + surface + "' has no readings");
  return readings[selected < 0 ? 0 : static_cast<std::size_t>(selected)];
}

bool Token::has_pos(Pos p) const {
  return std::any_of(readings.begin(), readings.end(), [p](const MorphReading& r) { return r.pos == p; });
}

FullFormLexicon FullFormLexicon::from_json(const json& doc, const std::string& source) {
  if (!doc.is_array()) throw DataError(source + ": full-form lexicon must be a JSON array");
  FullFormLexicon lex;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    const json& e = doc[n];
    const std::string where = source + ": form " + std::to_string(n);
    if (!e.contains("surface") || !e.contains("readings"))
      throw DataError(where + ": expected {\"surface\", \"readings\"}");
    auto& readings = lex.forms_[e["surface"].get<std::string>()];
    for (const json& r : e["readings"]) {
      MorphReading m;
      m.lemma = r.at("lemma").get<std::string>();
      if (m.lemma.empty()) throw DataError(where + ": empty lemma");
      m.pos = parse_pos(r.at("pos").get<std::string>());
      if (r.contains("features")) m.features = r["features"].get<std::vector<std::string>>();
      if (r.contains("amalgam")) m.amalgam = r["amalgam"].get<std::string>();
      readings.push_back(std::move(m));
    }
    if (readings.empty()) throw DataError(where + ": no readings");
  }
  return lex;
}

const std::vector<MorphReading>* FullFormLexicon::find(const std::string& surface) const {
  auto it = forms_.find(surface);
  if (it == forms_.end()) it = forms_.find(text::to_lower(surface));
  return it == forms_.end() ? nullptr : &it->second;
}

FullFormLexicon load_fullform_lexicon(const std::string& path) {
  return FullFormLexicon::from_json(parse_json_file(path), path);
}

bool Abbreviations::contains(std::string_view word) const {
  return words.count(std::string(word)) || words.count(text::to_lower(word));
}

Abbreviations load_abbreviations(const std::string& path) {
  json doc = parse_json_file(path);
  if (!doc.is_array()) throw DataError(path + ": abbreviations must be a JSON array of strings");
  return Abbreviations{doc.get<std::set<std::string>>()};
}

namespace {

constexpr std::array<std::string_view, 13> kElisions = {
    "l'", "d'", "j'", "m'", "n'", "s'", "t'", "c'", "qu'", "jusqu'", "lorsqu'", "puisqu'", "quoiqu'"};
constexpr std::array<std::string_view, 11> kClitics = {
    "il", "elle", "ils", "elles", "on", "je", "tu", "nous", "vous", "ce", "t"};

bool is_hyphen(std::string_view s, std::size_t i) { return s[i] == '-'; }

struct Piece {
  std::size_t begin, end;
  bool clitic = false;
};

// Splits one word run into elided prefixes, the body, and hyphenated clitics.
std::vector<Piece> split_run(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<Piece> out;
  std::size_t start = begin;
  // elisions: l'empereur, qu'il
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = start; i < end; i += text::cp_length(text, i)) {
      if (!text::is_apostrophe(text, i)) continue;
      std::string prefix = text::to_lower(text.substr(start, i - start)) + "'";
      if (std::find(kElisions.begin(), kElisions.end(), prefix) != kElisions.end()) {
        std::size_t after = i + text::cp_length(text, i);
        out.push_back({start, after});
        start = after;
        again = start < end;
      }
      break;
    }
  }
  // hyphenated clitics: fut-il, a-t-il, est-ce
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::size_t part = start;
  for (std::size_t i = start; i <= end; ++i) {
    if (i == end || is_hyphen(text, i)) {
      parts.emplace_back(part, i);
      part = i + 1;
    }
  }
  auto is_clitic = [&](std::size_t k) {
    std::string p = text::to_lower(text.substr(parts[k].first, parts[k].second - parts[k].first));
    return std::find(kClitics.begin(), kClitics.end(), p) != kClitics.end();
  };
  std::size_t body_end = parts.size();
  while (body_end > 1 && is_clitic(body_end - 1)) --body_end;
  out.push_back({parts.front().first, parts[body_end - 1].second});
  for (std::size_t k = body_end; k < parts.size(); ++k) {
    bool euphonic = text::to_lower(text.substr(parts[k].first, parts[k].second - parts[k].first)) == "t" &&
                    k + 1 < parts.size();
    if (!euphonic) out.push_back({parts[k].first, parts[k].second, true});
  }
  return out;
}

bool is_terminator(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?" || surface == "...";
}

}  // namespace

std::vector<TokenSequence> tokenize(std::string_view text, const Abbreviations& abbreviations) {
  std::vector<TokenSequence> sentences;
  TokenSequence current;
  auto push = [&](std::size_t b, std::size_t e, bool clitic) {
    Token t;
    t.surface = std::string(text.substr(b, e - b));
    t.begin = b;
    t.end = e;
    t.sentence = sentences.size();
    t.clitic = clitic;
    current.push_back(std::move(t));
  };
  auto close = [&] {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (text::is_space(text, i)) {
      i += text::cp_length(text, i);
      continue;
    }
    if (text::is_word_char(text, i)) {
      std::size_t j = i;
      while (j < text.size()) {
        if (text::is_word_char(text, j)) {
          j += text::cp_length(text, j);
        } else if ((is_hyphen(text, j) || text::is_apostrophe(text, j))) {
          std::size_t next = j + text::cp_length(text, j);
          if (next < text.size() && text::is_word_char(text, next)) j = next;
          else break;
        } else {
          break;
        }
      }
      std::string_view word = text.substr(i, j - i);
      bool initial = text::cp_length(word, 0) == word.size() && text::starts_upper(word);
      if (j < text.size() && text[j] == '.' && (abbreviations.contains(word) || initial)) {
        push(i, j + 1, false);
        i = j + 1;
        continue;
      }
      for (const Piece& p : split_run(text, i, j)) push(p.begin, p.end, p.clitic);
      i = j;
      continue;
    }
    std::size_t len = text.substr(i, 3) == "..." ? 3 : text::cp_length(text, i);
    push(i, i + len, false);
    i += len;
    if (is_terminator(current.back().surface)) {
      std::size_t k = i;
      while (k < text.size() && text::is_space(text, k)) k += text::cp_length(text, k);
      if (k == text.size() || (k > i && text::starts_upper(text.substr(k)))) close();
    }
  }
  close();
  return sentences;
}

MorphReading guess(const Token& token, bool sentence_initial) {
  const std::string& s = token.surface;
  const std::string lower = text::to_lower(s);
  auto ends_with = [&](std::string_view suffix) {
    return lower.size() > suffix.size() && lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (!s.empty() && !text::is_word_char(s, 0)) return {s, Pos::Punct, {}, {}};
  if (std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    return {s, Pos::Num, {}, {}};
  if (text::starts_upper(s)) {
    std::vector<std::string> features{"capitalized"};
    if (sentence_initial) features.push_back("sentence-initial");
    return {s, Pos::Propn, features, {}};
  }
  if (ends_with("ment")) return {lower, Pos::Adv, {"guessed"}, {}};
  if (ends_with("er") || ends_with("ir")) return {lower, Pos::Verb, {"guessed", "infinitive"}, {}};
  if (ends_with("tion") || ends_with("sion") || ends_with("ée") || ends_with("eur") || ends_with("age"))
    return {lower, Pos::Noun, {"guessed"}, {}};
  if (ends_with("ique") || ends_with("eux") || ends_with("euse") || ends_with("able"))
    return {lower, Pos::Adj, {"guessed"}, {}};
  return {lower, Pos::Noun, {"guessed"}, {}};
}

void analyze(Token& token, const FullFormLexicon& lexicon, bool sentence_initial) {
  token.readings.clear();
  if (const auto* found = lexicon.find(token.surface)) {
    token.readings = *found;
    // A capitalized word inside a sentence that the lexicon only knows in
    // lowercase is more likely a name ("Marathon" vs "marathon").
    bool lexicon_knows_upper = lexicon.find(token.surface) != lexicon.find(text::to_lower(token.surface));
    if (text::starts_upper(token.surface) && !sentence_initial && !lexicon_knows_upper &&
        std::none_of(found->begin(), found->end(), [](const MorphReading& r) { return r.pos == Pos::Propn; })) {
      token.readings.insert(token.readings.begin(), guess(token, false));
    }
  } else {
    token.readings.push_back(guess(token, sentence_initial));
  }
  token.selected = 0;
}

namespace {

using PosSet = std::vector<Pos>;

bool in(const PosSet& set, Pos p) { return std::find(set.begin(), set.end(), p) != set.end(); }

// A neighbour context: the neighbour's selected reading (already tagged on
// the left, still ambiguous on the right) must be one of `pos`. Empty means
// "don't care".
struct TagRule {
  const char* name;
  PosSet prev;
  PosSet next;
  PosSet candidates;  // rule applies only when the token has one of these
  Pos prefer;
  bool prefer_amalgam = false;
};

const std::vector<TagRule>& tag_rules() {
  static const std::vector<TagRule> rules = {
      // "le chef des coalisés": amalgam after a noun is de+les, not the plural article
      {"noun-amalgam", {Pos::Noun, Pos::Propn, Pos::Num}, {}, {Pos::Prep}, Pos::Prep, true},
      // "César fixe à": name/pronoun _ preposition/determiner -> verb
      {"subject-verb", {Pos::Propn, Pos::Pron}, {Pos::Prep, Pos::Det, Pos::Propn, Pos::Adv}, {Pos::Verb}, Pos::Verb},
      // after a determiner prefer nominal readings
      {"det-noun", {Pos::Det}, {}, {Pos::Noun}, Pos::Noun},
      {"det-adj", {Pos::Det}, {Pos::Noun}, {Pos::Adj}, Pos::Adj},
      // before a determiner prefer a verb
      {"verb-det", {}, {Pos::Det}, {Pos::Verb}, Pos::Verb},
      // noun followed by a name or a preposition
      {"noun-verb", {Pos::Noun}, {Pos::Det, Pos::Prep}, {Pos::Verb}, Pos::Verb},
  };
  return rules;
}

}  // namespace

void tag(TokenSequence& sentence) {
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    Token& tok = sentence[i];
    if (tok.readings.empty()) throw std::logic_error("tag() before analyze() on '" + tok.surface + "'");
    tok.selected = 0;
    if (tok.readings.size() == 1) continue;
    const Token* prev = i > 0 ? &sentence[i - 1] : nullptr;
    const Token* next = i + 1 < sentence.size() ? &sentence[i + 1] : nullptr;
    for (const TagRule& rule : tag_rules()) {
      if (!rule.prev.empty() && (!prev || !in(rule.prev, prev->pos()))) continue;
      if (!rule.next.empty() && (!next || !in(rule.next, next->readings.front().pos))) continue;
      auto it = std::find_if(tok.readings.begin(), tok.readings.end(), [&](const MorphReading& r) {
        return r.pos == rule.prefer && (!rule.prefer_amalgam || !r.amalgam.empty() || r.pos == Pos::Prep);
      });
      if (it == tok.readings.end()) continue;
      if (!std::any_of(tok.readings.begin(), tok.readings.end(),
                       [&](const MorphReading& r) { return in(rule.candidates, r.pos); }))
        continue;
      tok.selected = static_cast<int>(it - tok.readings.begin());
      break;
    }
  }
}

std::vector<TokenSequence> analyze_text(std::string_view text, const FullFormLexicon& lexicon,
                                        const Abbreviations& abbreviations) {
  auto sentences = tokenize(text, abbreviations);
  for (auto& sentence : sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) analyze(sentence[i], lexicon, i == 0);
    tag(sentence);
  }
  return sentences;
}

}  // namespace qa

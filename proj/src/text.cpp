#include "qa/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qa {

ParseError::ParseError(const std::string& file, std::size_t line, const std::string& what)
    : DataError(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line) {}

namespace {
constexpr std::array<std::string_view, 12> kPosNames = {
    "NOUN", "PROPN", "VERB", "ADJ", "ADV", "DET", "PREP", "PRON", "CONJ", "PUNCT", "NUM", "INTERROG"};
}

std::string_view to_string(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

Pos parse_pos(std::string_view tag) {
  std::string upper(tag);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (std::size_t i = 0; i < kPosNames.size(); ++i)
    if (kPosNames[i] == upper) return static_cast<Pos>(i);
  throw DataError("unknown part of speech '" + std::string(tag) + "'");
}

bool is_content_pos(Pos pos) {
  return pos == Pos::Noun || pos == Pos::Propn || pos == Pos::Verb || pos == Pos::Adj ||
         pos == Pos::Num;
}

namespace text {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto c = static_cast<unsigned char>(out[i]);
    if (c < 0x80) {
      out[i] = static_cast<char>(std::tolower(c));
    } else if (c == 0xC3 && i + 1 < out.size()) {
      auto n = static_cast<unsigned char>(out[i + 1]);
      // U+00C0..U+00DE except U+00D7 (multiplication sign)
      if (n >= 0x80 && n <= 0x9E && n != 0x97) out[i + 1] = static_cast<char>(n + 0x20);
      ++i;
    } else if (c == 0xC5 && i + 1 < out.size() && static_cast<unsigned char>(out[i + 1]) == 0x92) {
      out[i + 1] = static_cast<char>(0x93);  // Œ -> œ
      ++i;
    }
  }
  return out;
}

bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  auto c = static_cast<unsigned char>(s[0]);
  if (c < 0x80) return std::isupper(c) != 0;
  if (c == 0xC3 && s.size() > 1) {
    auto n = static_cast<unsigned char>(s[1]);
    return n >= 0x80 && n <= 0x9E && n != 0x97;
  }
  return c == 0xC5 && s.size() > 1 && static_cast<unsigned char>(s[1]) == 0x92;
}

std::size_t cp_length(std::string_view s, std::size_t i) {
  auto c = static_cast<unsigned char>(s[i]);
  std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 1;
  return std::min(len, s.size() - i);
}

bool is_apostrophe(std::string_view s, std::size_t i) {
  if (s[i] == '\'') return true;
  // U+2019 right single quotation mark
  return s.substr(i, 3) == "\xE2\x80\x99";
}

bool is_space(std::string_view s, std::size_t i) {
  auto c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) return std::isspace(c) != 0;
  // U+00A0 and U+202F (no-break spaces common in French typography)
  return s.substr(i, 2) == "\xC2\xA0" || s.substr(i, 3) == "\xE2\x80\xAF";
}

bool is_word_char(std::string_view s, std::size_t i) {
  auto c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) return std::isalnum(c) != 0;
  // Latin-1 supplement letters and Latin Extended-A (œ); everything else
  // non-ASCII (quotes, dashes, spaces) is punctuation.
  if (c == 0xC3) return true;
  if (c == 0xC5) return true;
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t line_of(std::string_view content, std::size_t pos) {
  pos = std::min(pos, content.size());
  return 1 + static_cast<std::size_t>(std::count(content.begin(), content.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

}  // namespace text
}  // namespace qa

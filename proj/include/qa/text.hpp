#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qa {

/// Malformed or inconsistent input data (lexicons, corpus, index files).
/// The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A DataError that carries the file and 1-based line it was raised for.
class ParseError : public DataError {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

enum class Pos { Noun, Propn, Verb, Adj, Adv, Det, Prep, Pron, Conj, Punct, Num, Interrog };

std::string_view to_string(Pos pos);
/// Case-insensitive; throws DataError for tags outside the closed set.
Pos parse_pos(std::string_view tag);
bool is_content_pos(Pos pos);

namespace text {

// UTF-8 helpers. Case mapping covers ASCII and the Latin-1 letters used by French.
std::string to_lower(std::string_view s);
bool starts_upper(std::string_view s);
/// Byte length of the code point starting at s[i].
std::size_t cp_length(std::string_view s, std::size_t i);
bool is_word_char(std::string_view s, std::size_t i);
bool is_apostrophe(std::string_view s, std::size_t i);
bool is_space(std::string_view s, std::size_t i);
std::string read_file(const std::string& path);
/// 1-based line number of byte offset `pos` in `content`.
std::size_t line_of(std::string_view content, std::size_t pos);

}  // namespace text
}  // namespace qa

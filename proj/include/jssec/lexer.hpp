#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jssec/ast.hpp"

namespace jssec {

enum class Tok : uint8_t { Eof, Name, PrivateName, Punct, Number, BigInt, String, Template, Regex };

struct Token {
  Tok type = Tok::Eof;
  /// Punctuator text, identifier name, cooked string/template text, raw number/regex.
  std::string value;
  uint32_t start = 0;
  uint32_t end = 0;
  bool nl_before = false;
  /// Identifier spelled with unicode escapes (cannot be a keyword).
  bool escaped = false;
  /// Template chunk that closes the literal (ends with a backtick).
  bool template_tail = false;
  /// Numeric literal uses `_` separators.
  bool numeric_separator = false;

  bool is(std::string_view punct) const {
    return type == Tok::Punct && value == punct;
  }
  bool is_name(std::string_view name) const {
    return type == Tok::Name && !escaped && value == name;
  }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(uint32_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  uint32_t offset() const { return offset_; }

 private:
  uint32_t offset_;
};

/// On-demand ECMAScript tokenizer. Slash and closing-brace ambiguities are
/// resolved by the parser through the rescan_* entry points.
class Lexer {
 public:
  Lexer(std::string_view text, std::vector<Comment>& comments, bool html_comments);

  Token next();

  /// Re-reads the token starting at `start` (a `/` or `/=`) as a regular expression.
  Token rescan_regex(const Token& slash);

  /// Re-reads from a `}` token as the continuation of a template literal.
  Token rescan_template_continuation(const Token& brace);

  uint32_t position() const { return pos_; }
  void reset(uint32_t pos) { pos_ = pos; }

 private:
  bool skip_trivia();  // returns true when a line terminator was crossed
  Token scan_name(uint32_t start, bool private_name);
  Token scan_number(uint32_t start);
  Token scan_string(uint32_t start, char quote);
  Token scan_template(uint32_t start);  // pos_ is just past ` or }
  Token scan_punct(uint32_t start);
  uint32_t read_escape(std::string& out, bool in_template);
  uint32_t read_unicode_escape();
  void add_comment(uint32_t start, uint32_t end, bool block);

  bool at_line_terminator(uint32_t i, uint32_t* width = nullptr) const;
  bool is_id_start(uint32_t i) const;
  bool is_id_part(uint32_t i) const;

  std::string_view text_;
  uint32_t pos_ = 0;
  std::vector<Comment>& comments_;
  bool html_comments_;
  bool line_start_ = true;
};

void append_utf8(std::string& out, uint32_t cp);

bool is_reserved_word(std::string_view name);

}  // namespace jssec

#include "jssec/lexer.hpp"

#include <array>
#include <cctype>

namespace jssec {

namespace {

constexpr std::array<std::string_view, 53> kPunctuators = {
    ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "??=",
    "=>",   "==",  "!=",  "<=",  ">=",  "&&",  "||",  "??",  "?.",  "++",  "--",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",  "<<",  ">>",  "**",
    "{",    "}",   "(",   ")",   "[",   "]",   ";",   ",",   "<",   ">",   "+",
    "-",    "*",   "/",   "%",   "&",   "|",   "^",   "!",   "~"};

constexpr std::array<std::string_view, 6> kSinglePunct = {"?", ":", "=", ".", "@", "#"};

bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

uint32_t hex_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<uint32_t>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<uint32_t>(c - 'a' + 10);
  return static_cast<uint32_t>(c - 'A' + 10);
}

}  // namespace

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_reserved_word(std::string_view name) {
  static constexpr std::array<std::string_view, 36> kWords = {
      "break",  "case",   "catch",    "class",  "const",   "continue",   "debugger",
      "default", "delete", "do",      "else",   "export",  "extends",    "finally",
      "for",    "function", "if",     "import", "in",      "instanceof", "new",
      "return", "super",  "switch",   "this",   "throw",   "try",        "typeof",
      "var",    "void",   "while",    "with",   "null",    "true",       "false",
      "enum"};
  for (auto w : kWords) {
    if (w == name) return true;
  }
  return false;
}

Lexer::Lexer(std::string_view text, std::vector<Comment>& comments, bool html_comments)
    : text_(text), comments_(comments), html_comments_(html_comments) {}

bool Lexer::at_line_terminator(uint32_t i, uint32_t* width) const {
  if (i >= text_.size()) return false;
  char c = text_[i];
  if (c == '\n' || c == '\r') {
    if (width) *width = (c == '\r' && i + 1 < text_.size() && text_[i + 1] == '\n') ? 2 : 1;
    return true;
  }
  // U+2028 / U+2029
  if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text_.size() &&
      static_cast<unsigned char>(text_[i + 1]) == 0x80 &&
      (static_cast<unsigned char>(text_[i + 2]) == 0xA8 ||
       static_cast<unsigned char>(text_[i + 2]) == 0xA9)) {
    if (width) *width = 3;
    return true;
  }
  return false;
}

bool Lexer::is_id_start(uint32_t i) const {
  if (i >= text_.size()) return false;
  auto c = static_cast<unsigned char>(text_[i]);
  if (std::isalpha(c) || c == '$' || c == '_' || c == '\\') return true;
  if (c < 0x80) return false;
  // Non-ASCII: everything except the Unicode spaces and line terminators we know of.
  if (c == 0xC2 && i + 1 < text_.size() && static_cast<unsigned char>(text_[i + 1]) == 0xA0)
    return false;
  if (c == 0xEF && i + 2 < text_.size() && static_cast<unsigned char>(text_[i + 1]) == 0xBB &&
      static_cast<unsigned char>(text_[i + 2]) == 0xBF)
    return false;
  if (c == 0xE2 && i + 1 < text_.size() && static_cast<unsigned char>(text_[i + 1]) == 0x80) {
    auto c2 = i + 2 < text_.size() ? static_cast<unsigned char>(text_[i + 2]) : 0;
    if (c2 <= 0x8A || c2 == 0xA8 || c2 == 0xA9 || c2 == 0xAF) return false;
  }
  if (c == 0xE3 && i + 2 < text_.size() && static_cast<unsigned char>(text_[i + 1]) == 0x80 &&
      static_cast<unsigned char>(text_[i + 2]) == 0x80)
    return false;
  return true;
}

bool Lexer::is_id_part(uint32_t i) const {
  if (i >= text_.size()) return false;
  return is_id_start(i) || std::isdigit(static_cast<unsigned char>(text_[i]));
}

void Lexer::add_comment(uint32_t start, uint32_t end, bool block) {
  if (comments_.empty() || start > comments_.back().start) {
    comments_.push_back({start, end, block});
  }
}

bool Lexer::skip_trivia() {
  bool newline = false;
  const auto size = static_cast<uint32_t>(text_.size());
  if (pos_ == 0 && size >= 2 && text_[0] == '#' && text_[1] == '!') {
    while (pos_ < size && !at_line_terminator(pos_)) ++pos_;
    add_comment(0, pos_, false);
  }
  while (pos_ < size) {
    auto c = static_cast<unsigned char>(text_[pos_]);
    uint32_t width = 0;
    if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
      ++pos_;
    } else if (at_line_terminator(pos_, &width)) {
      pos_ += width;
      newline = true;
      line_start_ = true;
    } else if (c == 0xC2 && pos_ + 1 < size && static_cast<unsigned char>(text_[pos_ + 1]) == 0xA0) {
      pos_ += 2;
    } else if (c >= 0xE2 && !is_id_start(pos_)) {
      pos_ += 3;  // BOM and the other three-byte spaces
    } else if (c == '/' && pos_ + 1 < size && text_[pos_ + 1] == '/') {
      uint32_t start = pos_;
      while (pos_ < size && !at_line_terminator(pos_)) ++pos_;
      add_comment(start, pos_, false);
    } else if (c == '/' && pos_ + 1 < size && text_[pos_ + 1] == '*') {
      uint32_t start = pos_;
      pos_ += 2;
      bool closed = false;
      while (pos_ < size) {
        if (text_[pos_] == '*' && pos_ + 1 < size && text_[pos_ + 1] == '/') {
          pos_ += 2;
          closed = true;
          break;
        }
        if (at_line_terminator(pos_, &width)) {
          newline = true;
          line_start_ = true;
          pos_ += width;
        } else {
          ++pos_;
        }
      }
      if (!closed) throw SyntaxError(start, "unterminated comment");
      add_comment(start, pos_, true);
    } else if (html_comments_ && c == '<' && text_.substr(pos_, 4) == "<!--") {
      uint32_t start = pos_;
      while (pos_ < size && !at_line_terminator(pos_)) ++pos_;
      add_comment(start, pos_, false);
    } else if (html_comments_ && line_start_ && c == '-' && text_.substr(pos_, 3) == "-->") {
      uint32_t start = pos_;
      while (pos_ < size && !at_line_terminator(pos_)) ++pos_;
      add_comment(start, pos_, false);
    } else {
      break;
    }
  }
  return newline;
}

Token Lexer::next() {
  bool nl = skip_trivia();
  Token tok;
  uint32_t start = pos_;
  if (pos_ >= text_.size()) {
    tok.type = Tok::Eof;
    tok.start = tok.end = pos_;
    tok.nl_before = nl;
    return tok;
  }
  line_start_ = false;
  char c = text_[pos_];
  if (is_id_start(pos_)) {
    tok = scan_name(start, false);
  } else if (c == '#' && is_id_start(pos_ + 1)) {
    ++pos_;
    tok = scan_name(start, true);
  } else if (std::isdigit(static_cast<unsigned char>(c)) ||
             (c == '.' && pos_ + 1 < text_.size() &&
              std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
    tok = scan_number(start);
  } else if (c == '"' || c == '\'') {
    tok = scan_string(start, c);
  } else if (c == '`') {
    ++pos_;
    tok = scan_template(start);
  } else {
    tok = scan_punct(start);
  }
  tok.nl_before = nl;
  return tok;
}

uint32_t Lexer::read_unicode_escape() {
  // pos_ is just past "\u"
  uint32_t cp = 0;
  if (pos_ < text_.size() && text_[pos_] == '{') {
    ++pos_;
    uint32_t digits = 0;
    while (pos_ < text_.size() && is_hex(text_[pos_])) {
      cp = cp * 16 + hex_value(text_[pos_++]);
      ++digits;
      if (cp > 0x10FFFF) throw SyntaxError(pos_, "code point out of range");
    }
    if (digits == 0 || pos_ >= text_.size() || text_[pos_] != '}')
      throw SyntaxError(pos_, "invalid unicode escape");
    ++pos_;
    return cp;
  }
  for (int i = 0; i < 4; ++i) {
    if (pos_ >= text_.size() || !is_hex(text_[pos_])) throw SyntaxError(pos_, "invalid unicode escape");
    cp = cp * 16 + hex_value(text_[pos_++]);
  }
  return cp;
}

Token Lexer::scan_name(uint32_t start, bool private_name) {
  Token tok;
  tok.type = private_name ? Tok::PrivateName : Tok::Name;
  tok.start = start;
  while (pos_ < text_.size() && is_id_part(pos_)) {
    if (text_[pos_] == '\\') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != 'u')
        throw SyntaxError(pos_, "invalid escape in identifier");
      pos_ += 2;
      append_utf8(tok.value, read_unicode_escape());
      tok.escaped = true;
      continue;
    }
    tok.value += text_[pos_++];
  }
  tok.end = pos_;
  return tok;
}

Token Lexer::scan_number(uint32_t start) {
  Token tok;
  tok.type = Tok::Number;
  tok.start = start;
  auto digits = [&](auto pred) {
    uint32_t n = 0;
    while (pos_ < text_.size() && (pred(text_[pos_]) || text_[pos_] == '_')) {
      if (text_[pos_] == '_') tok.numeric_separator = true;
      ++pos_;
      ++n;
    }
    return n;
  };
  auto dec = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
  char c = text_[pos_];
  char c1 = pos_ + 1 < text_.size() ? static_cast<char>(std::tolower(text_[pos_ + 1])) : 0;
  bool radix = false;
  if (c == '0' && (c1 == 'x' || c1 == 'o' || c1 == 'b')) {
    pos_ += 2;
    uint32_t n = 0;
    if (c1 == 'x') n = digits([](char ch) { return is_hex(ch); });
    if (c1 == 'o') n = digits([](char ch) { return ch >= '0' && ch <= '7'; });
    if (c1 == 'b') n = digits([](char ch) { return ch == '0' || ch == '1'; });
    if (n == 0) throw SyntaxError(pos_, "missing digits in numeric literal");
    radix = true;
  } else {
    bool legacy_octal = c == '0' && pos_ + 1 < text_.size() && dec(text_[pos_ + 1]);
    digits(dec);
    if (!legacy_octal) {
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        digits(dec);
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        if (digits(dec) == 0) throw SyntaxError(pos_, "missing exponent");
      }
    }
  }
  if (pos_ < text_.size() && text_[pos_] == 'n') {
    ++pos_;
    tok.type = Tok::BigInt;
  }
  (void)radix;
  if (is_id_start(pos_)) throw SyntaxError(pos_, "identifier directly after number");
  tok.end = pos_;
  tok.value = std::string(text_.substr(start, pos_ - start));
  return tok;
}

uint32_t Lexer::read_escape(std::string& out, bool in_template) {
  // pos_ is at the character after the backslash
  if (pos_ >= text_.size()) throw SyntaxError(pos_, "unterminated escape");
  uint32_t width = 0;
  if (at_line_terminator(pos_, &width)) {
    pos_ += width;
    return 0;
  }
  char c = text_[pos_++];
  switch (c) {
    case 'n': out += '\n'; break;
    case 't': out += '\t'; break;
    case 'r': out += '\r'; break;
    case 'b': out += '\b'; break;
    case 'f': out += '\f'; break;
    case 'v': out += '\v'; break;
    case 'x': {
      if (pos_ + 1 >= text_.size() || !is_hex(text_[pos_]) || !is_hex(text_[pos_ + 1])) {
        if (in_template) break;
        throw SyntaxError(pos_, "invalid hex escape");
      }
      append_utf8(out, hex_value(text_[pos_]) * 16 + hex_value(text_[pos_ + 1]));
      pos_ += 2;
      break;
    }
    case 'u': {
      if (in_template) {
        uint32_t save = pos_;
        try {
          append_utf8(out, read_unicode_escape());
        } catch (const SyntaxError&) {
          pos_ = save;  // tagged templates tolerate malformed escapes
        }
      } else {
        append_utf8(out, read_unicode_escape());
      }
      break;
    }
    default:
      if (c >= '0' && c <= '7') {
        uint32_t v = static_cast<uint32_t>(c - '0');
        int max_extra = c <= '3' ? 2 : 1;
        for (int i = 0; i < max_extra && pos_ < text_.size() && text_[pos_] >= '0' &&
                        text_[pos_] <= '7';
             ++i) {
          v = v * 8 + static_cast<uint32_t>(text_[pos_++] - '0');
        }
        append_utf8(out, v);
      } else {
        out += c;
      }
  }
  return 0;
}

Token Lexer::scan_string(uint32_t start, char quote) {
  Token tok;
  tok.type = Tok::String;
  tok.start = start;
  ++pos_;
  while (true) {
    if (pos_ >= text_.size()) throw SyntaxError(start, "unterminated string literal");
    char c = text_[pos_];
    if (c == quote) {
      ++pos_;
      break;
    }
    if (c == '\\') {
      ++pos_;
      read_escape(tok.value, false);
      continue;
    }
    if (c == '\n' || c == '\r') throw SyntaxError(start, "unterminated string literal");
    tok.value += c;
    ++pos_;
  }
  tok.end = pos_;
  return tok;
}

Token Lexer::scan_template(uint32_t start) {
  Token tok;
  tok.type = Tok::Template;
  tok.start = start;
  while (true) {
    if (pos_ >= text_.size()) throw SyntaxError(start, "unterminated template literal");
    char c = text_[pos_];
    if (c == '`') {
      ++pos_;
      tok.template_tail = true;
      break;
    }
    if (c == '$' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') {
      pos_ += 2;
      break;
    }
    if (c == '\\') {
      ++pos_;
      read_escape(tok.value, true);
      continue;
    }
    if (c == '\r') {
      // CRLF and CR are normalized to LF in the cooked value
      tok.value += '\n';
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '\n') ++pos_;
      continue;
    }
    tok.value += c;
    ++pos_;
  }
  tok.end = pos_;
  return tok;
}

Token Lexer::scan_punct(uint32_t start) {
  Token tok;
  tok.type = Tok::Punct;
  tok.start = start;
  std::string_view rest = text_.substr(pos_);
  for (auto p : kPunctuators) {
    if (rest.substr(0, p.size()) == p) {
      if (p == "?." && rest.size() > 2 && std::isdigit(static_cast<unsigned char>(rest[2])))
        continue;
      tok.value = std::string(p);
      pos_ += static_cast<uint32_t>(p.size());
      tok.end = pos_;
      return tok;
    }
  }
  for (auto p : kSinglePunct) {
    if (rest.substr(0, 1) == p) {
      tok.value = std::string(p);
      pos_ += 1;
      tok.end = pos_;
      return tok;
    }
  }
  throw SyntaxError(start, std::string("unexpected character '") + text_[pos_] + "'");
}

Token Lexer::rescan_regex(const Token& slash) {
  pos_ = slash.start + 1;
  bool in_class = false;
  while (true) {
    if (pos_ >= text_.size() || at_line_terminator(pos_))
      throw SyntaxError(slash.start, "unterminated regular expression");
    char c = text_[pos_];
    if (c == '\\') {
      pos_ += 2;
      continue;
    }
    if (c == '[') in_class = true;
    if (c == ']') in_class = false;
    ++pos_;
    if (c == '/' && !in_class) break;
  }
  while (pos_ < text_.size() && is_id_part(pos_)) ++pos_;
  Token tok;
  tok.type = Tok::Regex;
  tok.start = slash.start;
  tok.end = pos_;
  tok.nl_before = slash.nl_before;
  tok.value = std::string(text_.substr(tok.start, tok.end - tok.start));
  return tok;
}

Token Lexer::rescan_template_continuation(const Token& brace) {
  pos_ = brace.start + 1;
  Token tok = scan_template(brace.start);
  tok.nl_before = brace.nl_before;
  return tok;
}

}  // namespace jssec

#include "lexer.h"

#include <cctype>

namespace situkg::detail {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Characters that may not appear unescaped inside <...>.
bool is_iri_forbidden(char c) {
  return static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' ||
         c == '}' || c == '|' || c == '^' || c == '`';
}

}  // namespace

bool Token::is_keyword(std::string_view word) const {
  if (kind != TokenKind::kName || text.size() != word.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(text[i])) !=
        std::toupper(static_cast<unsigned char>(word[i])))
      return false;
  }
  return true;
}

bool append_utf8(std::string& out, unsigned long cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
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
  return true;
}

void Lexer::advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < input_.size(); ++i) {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
}

void Lexer::skip_space_and_comments() {
  while (pos_ < input_.size()) {
    char c = cur();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else if (c == '#') {
      while (pos_ < input_.size() && cur() != '\n') advance();
    } else {
      break;
    }
  }
}

Token Lexer::make(TokenKind kind, std::string text, std::size_t line, std::size_t column) const {
  return Token{kind, std::move(text), line, column};
}

Token Lexer::error(std::string message, std::size_t line, std::size_t column) const {
  return Token{TokenKind::kError, std::move(message), line, column};
}

Token Lexer::peek() {
  if (!has_peeked_) {
    peeked_ = scan();
    has_peeked_ = true;
  }
  return peeked_;
}

Token Lexer::next() {
  if (has_peeked_) {
    has_peeked_ = false;
    return std::move(peeked_);
  }
  return scan();
}

bool Lexer::iri_follows() const {
  for (std::size_t i = pos_ + 1; i < input_.size(); ++i) {
    char c = input_[i];
    if (c == '>') return true;
    if (c == '\\') continue;
    if (is_iri_forbidden(c)) return false;
  }
  return false;
}

bool Lexer::read_escape(std::string& out, bool allow_char_escapes, std::string& err) {
  // cur() is the character after the backslash
  char c = cur();
  if (c == 'u' || c == 'U') {
    std::size_t digits = c == 'u' ? 4 : 8;
    unsigned long cp = 0;
    for (std::size_t i = 1; i <= digits; ++i) {
      char h = at(i);
      if (!is_hex(h)) {
        err = "malformed \\" + std::string(1, c) + " escape";
        return false;
      }
      cp = cp * 16 + static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(h))
                                                    ? h - '0'
                                                    : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
    }
    if (!append_utf8(out, cp)) {
      err = "escape is not a valid code point";
      return false;
    }
    advance(digits + 1);
    return true;
  }
  if (allow_char_escapes) {
    char v = 0;
    switch (c) {
      case 't': v = '\t'; break;
      case 'n': v = '\n'; break;
      case 'r': v = '\r'; break;
      case 'b': v = '\b'; break;
      case 'f': v = '\f'; break;
      case '"': v = '"'; break;
      case '\'': v = '\''; break;
      case '\\': v = '\\'; break;
      default: break;
    }
    if (v != 0) {
      out += v;
      advance();
      return true;
    }
  }
  err = std::string("unsupported escape sequence '\\") + (c == '\0' ? std::string() : std::string(1, c)) + "'";
  return false;
}

Token Lexer::scan_iri(std::size_t line, std::size_t column) {
  advance();  // '<'
  std::string value;
  while (true) {
    if (pos_ >= input_.size()) return error("unterminated IRI", line, column);
    char c = cur();
    if (c == '>') {
      advance();
      return make(TokenKind::kIriRef, std::move(value), line, column);
    }
    if (c == '\\') {
      advance();
      std::string err;
      if (!read_escape(value, false, err)) return error(err, line_, column_);
      continue;
    }
    if (is_iri_forbidden(c)) return error("invalid character in IRI", line_, column_);
    value += c;
    advance();
  }
}

Token Lexer::scan_string(std::size_t line, std::size_t column) {
  char quote = cur();
  bool long_form = at(1) == quote && at(2) == quote;
  advance(long_form ? 3 : 1);
  std::string value;
  while (true) {
    if (pos_ >= input_.size()) return error("unterminated string", line, column);
    char c = cur();
    if (long_form) {
      if (c == quote && at(1) == quote && at(2) == quote) {
        advance(3);
        return make(TokenKind::kString, std::move(value), line, column);
      }
    } else {
      if (c == quote) {
        advance();
        return make(TokenKind::kString, std::move(value), line, column);
      }
      if (c == '\n' || c == '\r') return error("unterminated string", line, column);
    }
    if (c == '\\') {
      advance();
      std::string err;
      if (!read_escape(value, true, err)) return error(err, line_, column_);
      continue;
    }
    value += c;
    advance();
  }
}

Token Lexer::scan_number(std::size_t line, std::size_t column) {
  std::size_t start = pos_;
  if (cur() == '+' || cur() == '-') advance();
  bool int_digits = false;
  while (is_digit(cur())) {
    advance();
    int_digits = true;
  }
  TokenKind kind = TokenKind::kInteger;
  if (cur() == '.' && is_digit(at(1))) {
    advance();
    while (is_digit(cur())) advance();
    kind = TokenKind::kDecimal;
  } else if (!int_digits) {
    return error("malformed number", line, column);
  }
  if (cur() == 'e' || cur() == 'E') {
    std::size_t save_pos = pos_, save_line = line_, save_col = column_;
    advance();
    if (cur() == '+' || cur() == '-') advance();
    if (!is_digit(cur())) {
      pos_ = save_pos;
      line_ = save_line;
      column_ = save_col;
      return error("malformed exponent", line, column);
    }
    while (is_digit(cur())) advance();
    kind = TokenKind::kDouble;
  }
  return make(kind, std::string(input_.substr(start, pos_ - start)), line, column);
}

Token Lexer::scan_name(std::size_t line, std::size_t column) {
  std::size_t start = pos_;
  while (is_name_char(cur())) advance();
  if (cur() == ':') {
    advance();
    while (is_name_char(cur())) advance();
    std::string text(input_.substr(start, pos_ - start));
    auto colon = text.find(':');
    if (colon + 1 < text.size() && text[colon + 1] == '-') {
      return error("local name may not start with '-'", line, column);
    }
    return make(TokenKind::kPrefixedName, std::move(text), line, column);
  }
  return make(TokenKind::kName, std::string(input_.substr(start, pos_ - start)), line, column);
}

Token Lexer::scan() {
  skip_space_and_comments();
  std::size_t line = line_, column = column_;
  if (pos_ >= input_.size()) return make(TokenKind::kEnd, "", line, column);
  char c = cur();

  if (c == '<') {
    if (mode_ == Mode::kTurtle || iri_follows()) return scan_iri(line, column);
    advance();
    if (cur() == '=') {
      advance();
      return make(TokenKind::kOperator, "<=", line, column);
    }
    return make(TokenKind::kOperator, "<", line, column);
  }
  if (c == '"' || c == '\'') return scan_string(line, column);
  if (c == '_' && at(1) == ':') {
    advance(2);
    std::size_t start = pos_;
    while (is_name_char(cur())) advance();
    if (pos_ == start) return error("empty blank node label", line, column);
    return make(TokenKind::kBlankLabel, std::string(input_.substr(start, pos_ - start)), line, column);
  }
  if ((c == '?' || c == '$') && mode_ == Mode::kQuery) {
    advance();
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_') advance();
    if (pos_ == start) return error("empty variable name", line, column);
    return make(TokenKind::kVariable, std::string(input_.substr(start, pos_ - start)), line, column);
  }
  if (c == '@') {
    advance();
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '-') advance();
    if (pos_ == start) return error("expected word after '@'", line, column);
    return make(TokenKind::kAtWord, std::string(input_.substr(start, pos_ - start)), line, column);
  }
  if (is_digit(c) || ((c == '+' || c == '-') && (is_digit(at(1)) || (at(1) == '.' && is_digit(at(2))))) ||
      (c == '.' && is_digit(at(1)))) {
    return scan_number(line, column);
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
    return scan_name(line, column);
  }
  if (c == '^' && at(1) == '^') {
    advance(2);
    return make(TokenKind::kOperator, "^^", line, column);
  }
  if (c == '&' && at(1) == '&') {
    advance(2);
    return make(TokenKind::kOperator, "&&", line, column);
  }
  if (c == '|' && at(1) == '|') {
    advance(2);
    return make(TokenKind::kOperator, "||", line, column);
  }
  if (c == '!' && at(1) == '=') {
    advance(2);
    return make(TokenKind::kOperator, "!=", line, column);
  }
  if (c == '>' && at(1) == '=') {
    advance(2);
    return make(TokenKind::kOperator, ">=", line, column);
  }
  if (c == '!' || c == '=' || c == '>') {
    advance();
    return make(TokenKind::kOperator, std::string(1, c), line, column);
  }
  static constexpr std::string_view kPunct = ".;,{}()[]*";
  if (kPunct.find(c) != std::string_view::npos) {
    advance();
    return make(TokenKind::kPunct, std::string(1, c), line, column);
  }
  advance();
  return error(std::string("unexpected character '") + c + "'", line, column);
}

}  // namespace situkg::detail

#pragma once

// Tokenizer shared by the Turtle and query parsers. Internal header.

#include <cstddef>
#include <string>
#include <string_view>

namespace situkg::detail {

enum class TokenKind {
  kEnd,
  kError,
  kIriRef,        // text = IRI with escapes resolved
  kPrefixedName,  // text = "prefix:local" (local may be empty)
  kBlankLabel,    // text = label without "_:"
  kVariable,      // text = name without '?'/'$'
  kString,        // text = unescaped value
  kInteger,
  kDecimal,
  kDouble,
  kAtWord,        // text = word after '@' (language tag or directive)
  kName,          // bare word: keywords, `a`, function names, true/false
  kPunct,         // . ; , { } ( ) [ ] *
  kOperator,      // ^^ && || ! = != < <= > >=
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::kPunct, t); }
  bool is_op(std::string_view t) const { return is(TokenKind::kOperator, t); }
  /// Case-insensitive keyword match for kName tokens.
  bool is_keyword(std::string_view word) const;
};

class Lexer {
 public:
  enum class Mode { kTurtle, kQuery };

  Lexer(std::string_view input, Mode mode) : input_(input), mode_(mode) {}

  Token next();
  Token peek();

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  char cur() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }
  char at(std::size_t offset) const {
    return pos_ + offset < input_.size() ? input_[pos_ + offset] : '\0';
  }
  void advance(std::size_t n = 1);
  void skip_space_and_comments();

  Token scan();
  Token make(TokenKind kind, std::string text, std::size_t line, std::size_t column) const;
  Token error(std::string message, std::size_t line, std::size_t column) const;

  Token scan_iri(std::size_t line, std::size_t column);
  Token scan_string(std::size_t line, std::size_t column);
  Token scan_number(std::size_t line, std::size_t column);
  Token scan_name(std::size_t line, std::size_t column);
  bool read_escape(std::string& out, bool allow_char_escapes, std::string& err);
  bool iri_follows() const;

  std::string_view input_;
  Mode mode_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool has_peeked_ = false;
  Token peeked_;
};

/// Appends the UTF-8 encoding of `code_point`; returns false if invalid.
bool append_utf8(std::string& out, unsigned long code_point);

}  // namespace situkg::detail

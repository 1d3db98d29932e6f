#include "situkg/turtle.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "lexer.h"

namespace situkg {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

std::string ParseError::to_string() const {
  std::ostringstream out;
  out << line << ":" << column << ": " << message;
  if (!token.empty()) out << " (at '" << token << "')";
  return out.str();
}

TurtleSyntaxError::TurtleSyntaxError(std::vector<ParseError> errors)
    : Error(errors.empty() ? std::string("turtle syntax error")
                           : errors.front().to_string() +
                                 (errors.size() > 1
                                      ? " (+" + std::to_string(errors.size() - 1) + " more)"
                                      : std::string())),
      errors_(std::move(errors)) {}

namespace {

struct StatementFailed {};

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : lexer_(text, Lexer::Mode::kTurtle) {}

  TurtleParseResult run() {
    while (true) {
      Token t = lexer_.peek();
      if (t.kind == TokenKind::kEnd) break;
      try {
        statement();
      } catch (const StatementFailed&) {
        recover();
      }
    }
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(const Token& at, std::string message) {
    std::string token = at.kind == TokenKind::kError || at.kind == TokenKind::kEnd ? "" : at.text;
    if (at.kind == TokenKind::kError) message = at.text;
    result_.errors.push_back(ParseError{at.line, at.column, std::move(message), std::move(token)});
    throw StatementFailed{};
  }

  // Skip to just after the next '.' (or end of input).
  void recover() {
    while (true) {
      Token t = lexer_.next();
      if (t.kind == TokenKind::kEnd || t.is_punct(".")) return;
    }
  }

  Token expect_punct(std::string_view p) {
    Token t = lexer_.next();
    if (!t.is_punct(p)) fail(t, "expected '" + std::string(p) + "'");
    return t;
  }

  void statement() {
    Token t = lexer_.peek();
    if (t.kind == TokenKind::kAtWord) {
      lexer_.next();
      if (t.text == "prefix") {
        prefix_directive();
        expect_punct(".");
        return;
      }
      fail(t, "unsupported directive '@" + t.text + "'");
    }
    if (t.is_keyword("PREFIX")) {
      lexer_.next();
      prefix_directive();
      return;
    }
    if (t.is_keyword("BASE")) fail(t, "BASE is not supported");

    pending_.clear();
    Term subject = read_subject();
    predicate_object_list(subject);
    expect_punct(".");
    for (auto& triple : pending_) result_.graph.insert(triple);
    pending_.clear();
  }

  void prefix_directive() {
    Token name = lexer_.next();
    if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':' ||
        name.text.find(':') != name.text.size() - 1) {
      fail(name, "expected prefix label ending in ':'");
    }
    Token iri = lexer_.next();
    if (iri.kind != TokenKind::kIriRef) fail(iri, "expected <namespace IRI>");
    std::string label = name.text.substr(0, name.text.size() - 1);
    result_.graph.prefixes().declare(label, iri.text);
  }

  Term iri_term(const Token& t) {
    try {
      return Term::iri(t.text);
    } catch (const StructuralError&) {
      fail(t, "relative IRIs are not supported");
    }
  }

  Term prefixed(const Token& t) {
    try {
      return result_.graph.prefixes().expand(t.text);
    } catch (const UnknownPrefixError& e) {
      fail(t, "undeclared prefix '" + e.prefix() + ":'");
    }
  }

  Term read_subject() {
    Token t = lexer_.next();
    switch (t.kind) {
      case TokenKind::kIriRef:
        return iri_term(t);
      case TokenKind::kPrefixedName:
        return prefixed(t);
      case TokenKind::kBlankLabel:
        return Term::blank(t.text);
      default:
        break;
    }
    if (t.is_punct("[") || t.is_punct("(")) {
      fail(t, "anonymous blank nodes and collections are not supported");
    }
    fail(t, "expected subject");
  }

  Term read_predicate() {
    Token t = lexer_.next();
    if (t.kind == TokenKind::kIriRef) return iri_term(t);
    if (t.kind == TokenKind::kPrefixedName) return prefixed(t);
    if (t.kind == TokenKind::kName && t.text == "a") return Term::iri(iri::kRdfType);
    fail(t, "expected predicate");
  }

  Term read_object() {
    Token t = lexer_.next();
    switch (t.kind) {
      case TokenKind::kIriRef:
        return iri_term(t);
      case TokenKind::kPrefixedName:
        return prefixed(t);
      case TokenKind::kBlankLabel:
        return Term::blank(t.text);
      case TokenKind::kInteger:
        return Term::literal(t.text, iri::kXsdInteger);
      case TokenKind::kDecimal:
        return Term::literal(t.text, iri::kXsdDecimal);
      case TokenKind::kDouble:
        return Term::literal(t.text, iri::kXsdDouble);
      case TokenKind::kString:
        return literal_suffix(t);
      case TokenKind::kName:
        if (t.text == "true" || t.text == "false") return Term::literal(t.text, iri::kXsdBoolean);
        break;
      default:
        break;
    }
    if (t.is_punct("[") || t.is_punct("(")) {
      fail(t, "anonymous blank nodes and collections are not supported");
    }
    fail(t, "expected object");
  }

  Term literal_suffix(const Token& string_token) {
    Token next = lexer_.peek();
    if (next.kind == TokenKind::kAtWord) {
      lexer_.next();
      return Term::lang_literal(string_token.text, next.text);
    }
    if (next.is_op("^^")) {
      lexer_.next();
      Token dt = lexer_.next();
      Term datatype = dt.kind == TokenKind::kIriRef        ? iri_term(dt)
                      : dt.kind == TokenKind::kPrefixedName ? prefixed(dt)
                                                            : (fail(dt, "expected datatype IRI"), Term());
      if (datatype.value() == iri::kRdfLangString) fail(dt, "rdf:langString needs a language tag");
      return Term::literal(string_token.text, datatype.value());
    }
    return Term::literal(string_token.text);
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      Term predicate = read_predicate();
      while (true) {
        Term object = read_object();
        pending_.push_back(Triple{subject, predicate, std::move(object)});
        if (!lexer_.peek().is_punct(",")) break;
        lexer_.next();
      }
      if (!lexer_.peek().is_punct(";")) return;
      // one or more ';', optionally trailing before '.'
      while (lexer_.peek().is_punct(";")) lexer_.next();
      Token t = lexer_.peek();
      if (t.is_punct(".") || t.is_punct("]")) return;
    }
  }

  Lexer lexer_;
  TurtleParseResult result_;
  std::vector<Triple> pending_;
};

std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string escape_iri(std::string_view s) {
  std::string out;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04X", u);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

bool bare_form_reparses(const Term& t) {
  static const std::regex kInteger("[+-]?[0-9]+");
  static const std::regex kDecimal("[+-]?[0-9]*\\.[0-9]+");
  static const std::regex kDouble("[+-]?([0-9]+(\\.[0-9]*)?|\\.[0-9]+)[eE][+-]?[0-9]+");
  const auto& dt = t.datatype();
  const auto& v = t.value();
  if (dt == iri::kXsdInteger) return std::regex_match(v, kInteger);
  if (dt == iri::kXsdDecimal) return std::regex_match(v, kDecimal);
  if (dt == iri::kXsdDouble) return std::regex_match(v, kDouble);
  if (dt == iri::kXsdBoolean) return v == "true" || v == "false";
  return false;
}

std::string iri_text(const std::string& iri, const PrefixMap& prefixes) {
  if (auto curie = prefixes.shorten(iri)) return *curie;
  return "<" + escape_iri(iri) + ">";
}

}  // namespace

TurtleParseResult try_parse_turtle(std::string_view text) { return TurtleParser(text).run(); }

Graph parse_turtle(std::string_view text) {
  auto result = try_parse_turtle(text);
  if (!result.errors.empty()) throw TurtleSyntaxError(std::move(result.errors));
  return std::move(result.graph);
}

std::string turtle_term(const Term& term, const PrefixMap& prefixes) {
  switch (term.kind()) {
    case TermKind::kIri:
      return iri_text(term.value(), prefixes);
    case TermKind::kBlankNode:
      return "_:" + term.value();
    case TermKind::kLiteral:
      break;
  }
  if (!term.language().empty()) return "\"" + escape_string(term.value()) + "\"@" + term.language();
  if (term.datatype() == iri::kXsdString) return "\"" + escape_string(term.value()) + "\"";
  if (bare_form_reparses(term)) return term.value();
  return "\"" + escape_string(term.value()) + "\"^^" + iri_text(term.datatype(), prefixes);
}

std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [label, ns] : prefixes.entries()) {
    out << "@prefix " << label << ": <" << escape_iri(ns) << "> .\n";
  }

  const Term rdf_type = Term::iri(iri::kRdfType);
  auto predicate_less = [&](const Term& a, const Term& b) {
    bool at = a == rdf_type, bt = b == rdf_type;
    if (at != bt) return at;
    return compare_terms(a, b) < 0;
  };
  using ObjectList = std::vector<Term>;
  using PredicateMap = std::map<Term, ObjectList, decltype(predicate_less)>;
  std::map<Term, PredicateMap, TermLess> grouped;
  for (const auto& t : graph.triples()) {
    auto it = grouped.try_emplace(t.subject, PredicateMap(predicate_less)).first;
    it->second[t.predicate].push_back(t.object);
  }

  for (auto& [subject, predicates] : grouped) {
    out << "\n" << turtle_term(subject, prefixes);
    bool first_predicate = true;
    for (auto& [predicate, objects] : predicates) {
      std::sort(objects.begin(), objects.end(), TermLess{});
      out << (first_predicate ? " " : " ;\n    ");
      first_predicate = false;
      out << (predicate == rdf_type ? std::string("a") : turtle_term(predicate, prefixes));
      for (std::size_t i = 0; i < objects.size(); ++i) {
        out << (i == 0 ? " " : ",\n        ") << turtle_term(objects[i], prefixes);
      }
    }
    out << " .\n";
  }
  return out.str();
}

std::string serialize_turtle(const Graph& graph) { return serialize_turtle(graph, graph.prefixes()); }

}  // namespace situkg

#include <set>
#include <sstream>

#include "lexer.h"
#include "situkg/query.h"
#include "situkg/turtle.h"

namespace situkg {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

Expr Expr::var(std::string name) {
  Expr e;
  e.op = ExprOp::kVariable;
  e.variable = std::move(name);
  return e;
}

Expr Expr::constant_term(Term t) {
  Expr e;
  e.op = ExprOp::kConstant;
  e.constant = std::move(t);
  return e;
}

Expr Expr::call(ExprOp op, std::vector<Expr> args) {
  Expr e;
  e.op = op;
  e.args = std::move(args);
  return e;
}

bool QueryAst::is_grouped() const {
  if (!group_by.empty()) return true;
  for (const auto& item : projection) {
    if (item.aggregate) return true;
  }
  return false;
}

QuerySyntaxError::QuerySyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : Error("query syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

void collect_bound(const std::vector<PatternElement>& elements, std::vector<std::string>& out,
                   std::set<std::string>& seen) {
  auto note = [&](const PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (seen.insert(v->name).second) out.push_back(v->name);
    }
  };
  for (const auto& e : elements) {
    switch (e.kind) {
      case PatternElement::Kind::kTriple:
        note(e.triple.subject);
        note(e.triple.predicate);
        note(e.triple.object);
        break;
      case PatternElement::Kind::kOptional:
        collect_bound(e.group, out, seen);
        break;
      case PatternElement::Kind::kFilter:
      case PatternElement::Kind::kNotExists:
        break;
    }
  }
}

}  // namespace

std::vector<std::string> bound_variables(const GroupPattern& group) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_bound(group.elements, out, seen);
  return out;
}

// ---------------------------------------------------------------------------
// substitute_params

std::string substitute_params(std::string_view text, const QueryParams& params) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto open = text.find("{{", pos);
    if (open == std::string_view::npos) break;
    auto close = text.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    std::string_view name = text.substr(open + 2, close - open - 2);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    auto it = params.find(name);
    if (it == params.end()) throw MissingParameterError(std::string(name));
    out.append(text.substr(pos, open - pos));
    out += it->second;
    pos = close + 2;
  }
  out.append(text.substr(pos));
  return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class QueryParser {
 public:
  QueryParser(std::string_view text, const PrefixMap& prefixes)
      : lexer_(text, Lexer::Mode::kQuery), prefixes_(prefixes) {}

  QueryAst parse() {
    prologue();
    Token select = lexer_.next();
    if (!select.is_keyword("SELECT")) fail(select, "expected SELECT");
    if (lexer_.peek().is_keyword("DISTINCT")) {
      lexer_.next();
      ast_.distinct = true;
    }
    projection();
    if (lexer_.peek().is_keyword("WHERE")) lexer_.next();
    ast_.where.elements = group();
    modifiers();
    Token end = lexer_.next();
    if (end.kind != TokenKind::kEnd) fail(end, "unexpected trailing input");
    check_scope();
    return std::move(ast_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) {
    if (at.kind == TokenKind::kError) throw QuerySyntaxError(at.line, at.column, at.text);
    std::string where = at.kind == TokenKind::kEnd ? " (at end of input)" : " (at '" + at.text + "')";
    throw QuerySyntaxError(at.line, at.column, message + where);
  }

  Token expect_punct(std::string_view p) {
    Token t = lexer_.next();
    if (!t.is_punct(p)) fail(t, "expected '" + std::string(p) + "'");
    return t;
  }

  void expect_keyword(std::string_view word) {
    Token t = lexer_.next();
    if (!t.is_keyword(word)) fail(t, "expected " + std::string(word));
  }

  std::string expect_variable() {
    Token t = lexer_.next();
    if (t.kind != TokenKind::kVariable) fail(t, "expected variable");
    return t.text;
  }

  void prologue() {
    while (true) {
      Token t = lexer_.peek();
      if (t.is_keyword("PREFIX")) {
        lexer_.next();
        Token name = lexer_.next();
        if (name.kind != TokenKind::kPrefixedName || name.text.find(':') != name.text.size() - 1) {
          fail(name, "expected prefix label ending in ':'");
        }
        Token iri = lexer_.next();
        if (iri.kind != TokenKind::kIriRef) fail(iri, "expected <namespace IRI>");
        prefixes_.declare(name.text.substr(0, name.text.size() - 1), iri.text);
      } else if (t.is_keyword("BASE")) {
        fail(t, "BASE is not supported");
      } else {
        return;
      }
    }
  }

  void projection() {
    if (lexer_.peek().is_punct("*")) {
      lexer_.next();
      ast_.select_all = true;
      return;
    }
    while (true) {
      Token t = lexer_.peek();
      if (t.kind == TokenKind::kVariable) {
        lexer_.next();
        ast_.projection.push_back(ProjectionItem{t.text, std::nullopt});
        projection_tokens_.push_back(t);
      } else if (t.is_punct("(")) {
        lexer_.next();
        Token fn = lexer_.next();
        if (fn.kind != TokenKind::kName) fail(fn, "expected aggregate");
        if (!fn.is_keyword("COUNT")) fail(fn, "unsupported aggregate '" + fn.text + "'");
        expect_punct("(");
        CountAggregate agg;
        if (lexer_.peek().is_keyword("DISTINCT")) {
          lexer_.next();
          agg.distinct = true;
        }
        Token arg = lexer_.next();
        if (arg.kind == TokenKind::kVariable) {
          agg.variable = arg.text;
        } else if (!arg.is_punct("*")) {
          fail(arg, "expected variable or '*' in COUNT");
        }
        expect_punct(")");
        expect_keyword("AS");
        Token alias = lexer_.next();
        if (alias.kind != TokenKind::kVariable) fail(alias, "expected alias variable after AS");
        expect_punct(")");
        ast_.projection.push_back(ProjectionItem{alias.text, agg});
        projection_tokens_.push_back(alias);
      } else {
        break;
      }
    }
    if (ast_.projection.empty()) fail(lexer_.peek(), "expected projection (variables, COUNT or '*')");
  }

  std::vector<PatternElement> group() {
    expect_punct("{");
    std::vector<PatternElement> elements;
    while (true) {
      Token t = lexer_.peek();
      if (t.is_punct("}")) {
        lexer_.next();
        return elements;
      }
      if (t.is_punct(".")) {
        lexer_.next();
        continue;
      }
      if (t.is_keyword("OPTIONAL")) {
        lexer_.next();
        PatternElement e;
        e.kind = PatternElement::Kind::kOptional;
        e.group = group();
        elements.push_back(std::move(e));
        continue;
      }
      if (t.is_keyword("FILTER")) {
        lexer_.next();
        elements.push_back(filter());
        continue;
      }
      if (t.is_punct("{")) fail(t, "nested groups are not supported");
      if (t.kind == TokenKind::kName && !t.is_keyword("a") && !t.is_keyword("true") && !t.is_keyword("false")) {
        fail(t, "unsupported keyword '" + t.text + "'");
      }
      if (t.kind == TokenKind::kEnd) fail(t, "expected '}'");
      triples_block(elements);
    }
  }

  PatternElement filter() {
    PatternElement e;
    Token t = lexer_.peek();
    if (t.is_keyword("NOT")) {
      lexer_.next();
      expect_keyword("EXISTS");
      e.kind = PatternElement::Kind::kNotExists;
      e.group = group();
      return e;
    }
    if (t.is_keyword("EXISTS")) fail(t, "FILTER EXISTS is not supported");
    e.kind = PatternElement::Kind::kFilter;
    if (t.is_punct("(")) {
      lexer_.next();
      e.filter = expression();
      expect_punct(")");
    } else if (t.kind == TokenKind::kName) {
      e.filter = primary();
    } else {
      fail(t, "expected '(' after FILTER");
    }
    return e;
  }

  void triples_block(std::vector<PatternElement>& out) {
    PatternTerm subject = pattern_term(lexer_.next(), "subject");
    while (true) {
      Token pt = lexer_.next();
      PatternTerm predicate = pt.kind == TokenKind::kName && pt.text == "a"
                                  ? PatternTerm(Term::iri(iri::kRdfType))
                                  : pattern_term(pt, "predicate");
      if (const auto* term = std::get_if<Term>(&predicate); term && !term->is_iri()) {
        fail(pt, "predicate must be an IRI or variable");
      }
      while (true) {
        PatternTerm object = pattern_term(lexer_.next(), "object");
        PatternElement e;
        e.kind = PatternElement::Kind::kTriple;
        e.triple = TriplePattern{subject, predicate, std::move(object)};
        out.push_back(std::move(e));
        if (!lexer_.peek().is_punct(",")) break;
        lexer_.next();
      }
      if (!lexer_.peek().is_punct(";")) break;
      while (lexer_.peek().is_punct(";")) lexer_.next();
      Token t = lexer_.peek();
      if (t.is_punct(".") || t.is_punct("}")) break;
    }
    Token t = lexer_.peek();
    if (t.is_punct(".")) {
      lexer_.next();
    } else if (!t.is_punct("}") && !t.is_keyword("OPTIONAL") && !t.is_keyword("FILTER")) {
      fail(t, "expected '.' or '}' after triple pattern");
    }
  }

  Term resolve(const Token& t) {
    try {
      if (t.kind == TokenKind::kIriRef) return Term::iri(t.text);
      return prefixes_.expand(t.text);
    } catch (const UnknownPrefixError&) {
      throw;
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  Term literal_after_string(const Token& s) {
    Token next = lexer_.peek();
    if (next.kind == TokenKind::kAtWord) {
      lexer_.next();
      return Term::lang_literal(s.text, next.text);
    }
    if (next.is_op("^^")) {
      lexer_.next();
      Token dt = lexer_.next();
      if (dt.kind != TokenKind::kIriRef && dt.kind != TokenKind::kPrefixedName) fail(dt, "expected datatype IRI");
      Term datatype = resolve(dt);
      if (datatype.value() == iri::kRdfLangString) fail(dt, "rdf:langString needs a language tag");
      return Term::literal(s.text, datatype.value());
    }
    return Term::literal(s.text);
  }

  // Constant term from a token, or nullopt if the token is not one.
  std::optional<Term> constant(const Token& t) {
    switch (t.kind) {
      case TokenKind::kIriRef:
      case TokenKind::kPrefixedName:
        return resolve(t);
      case TokenKind::kString:
        return literal_after_string(t);
      case TokenKind::kInteger:
        return Term::literal(t.text, iri::kXsdInteger);
      case TokenKind::kDecimal:
        return Term::literal(t.text, iri::kXsdDecimal);
      case TokenKind::kDouble:
        return Term::literal(t.text, iri::kXsdDouble);
      case TokenKind::kName:
        if (t.text == "true" || t.text == "false") return Term::literal(t.text, iri::kXsdBoolean);
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }

  PatternTerm pattern_term(const Token& t, const char* position) {
    if (t.kind == TokenKind::kVariable) return Variable{t.text};
    if (t.kind == TokenKind::kBlankLabel) fail(t, "blank nodes are not supported in queries");
    if (auto c = constant(t)) return *c;
    fail(t, std::string("expected ") + position);
  }

  // expression grammar: or := and ('||' and)* ; and := rel ('&&' rel)* ;
  // rel := unary (cmp unary)? ; unary := '!' unary | primary
  Expr expression() {
    Expr left = conjunction();
    while (lexer_.peek().is_op("||")) {
      lexer_.next();
      left = Expr::call(ExprOp::kOr, {std::move(left), conjunction()});
    }
    return left;
  }

  Expr conjunction() {
    Expr left = relational();
    while (lexer_.peek().is_op("&&")) {
      lexer_.next();
      left = Expr::call(ExprOp::kAnd, {std::move(left), relational()});
    }
    return left;
  }

  Expr relational() {
    Expr left = unary();
    Token t = lexer_.peek();
    if (t.kind != TokenKind::kOperator) return left;
    static const std::pair<std::string_view, ExprOp> kOps[] = {
        {"=", ExprOp::kEqual},  {"!=", ExprOp::kNotEqual},    {"<", ExprOp::kLess},
        {"<=", ExprOp::kLessEqual}, {">", ExprOp::kGreater}, {">=", ExprOp::kGreaterEqual},
    };
    for (const auto& [text, op] : kOps) {
      if (t.text == text) {
        lexer_.next();
        return Expr::call(op, {std::move(left), unary()});
      }
    }
    return left;
  }

  Expr unary() {
    if (lexer_.peek().is_op("!")) {
      lexer_.next();
      return Expr::call(ExprOp::kNot, {unary()});
    }
    return primary();
  }

  Expr primary() {
    Token t = lexer_.next();
    if (t.is_punct("(")) {
      Expr inner = expression();
      expect_punct(")");
      return inner;
    }
    if (t.kind == TokenKind::kVariable) return Expr::var(t.text);
    if (t.kind == TokenKind::kName && t.text != "true" && t.text != "false") {
      if (!t.is_keyword("YEAR")) fail(t, "unknown function '" + t.text + "'");
      expect_punct("(");
      Expr arg = expression();
      expect_punct(")");
      return Expr::call(ExprOp::kYear, {std::move(arg)});
    }
    if (auto c = constant(t)) return Expr::constant_term(*c);
    fail(t, "expected expression");
  }

  void modifiers() {
    if (lexer_.peek().is_keyword("GROUP")) {
      lexer_.next();
      expect_keyword("BY");
      ast_.group_by.push_back(expect_variable());
      while (lexer_.peek().kind == TokenKind::kVariable) ast_.group_by.push_back(lexer_.next().text);
    }
    if (lexer_.peek().is_keyword("ORDER")) {
      lexer_.next();
      expect_keyword("BY");
      do {
        ast_.order_by.push_back(order_key());
      } while (starts_order_key(lexer_.peek()));
    }
  }

  static bool starts_order_key(const Token& t) {
    return t.kind == TokenKind::kVariable || t.is_punct("(") || t.is_keyword("ASC") || t.is_keyword("DESC") ||
           t.is_keyword("YEAR");
  }

  OrderKey order_key() {
    Token t = lexer_.peek();
    OrderKey key;
    if (t.is_keyword("ASC") || t.is_keyword("DESC")) {
      lexer_.next();
      key.descending = t.is_keyword("DESC");
      expect_punct("(");
      key.expr = expression();
      expect_punct(")");
      return key;
    }
    if (t.kind == TokenKind::kVariable) {
      lexer_.next();
      key.expr = Expr::var(t.text);
      return key;
    }
    if (!starts_order_key(t)) fail(t, "expected ORDER BY key");
    key.expr = primary();
    return key;
  }

  void check_scope() {
    if (ast_.select_all) {
      if (!ast_.group_by.empty()) {
        throw QuerySyntaxError(1, 1, "SELECT * cannot be combined with GROUP BY");
      }
      return;
    }
    const bool grouped = ast_.is_grouped();
    const auto bound = bound_variables(ast_.where);
    const std::set<std::string> in_where(bound.begin(), bound.end());
    const std::set<std::string> grouped_vars(ast_.group_by.begin(), ast_.group_by.end());
    for (std::size_t i = 0; i < ast_.projection.size(); ++i) {
      const auto& item = ast_.projection[i];
      if (item.aggregate) continue;
      const Token& at = projection_tokens_[i];
      if (grouped && grouped_vars.count(item.name) == 0) {
        throw QuerySyntaxError(at.line, at.column,
                               "variable ?" + item.name + " is projected but not listed in GROUP BY");
      }
      if (!grouped && in_where.count(item.name) == 0) {
        throw QuerySyntaxError(at.line, at.column,
                               "projected variable ?" + item.name + " does not occur in the WHERE pattern");
      }
    }
  }

  Lexer lexer_;
  PrefixMap prefixes_;
  QueryAst ast_;
  std::vector<Token> projection_tokens_;
};

// ---------------------------------------------------------------------------
// printing

std::string term_text(const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return "?" + v->name;
  return turtle_term(std::get<Term>(t), PrefixMap{});
}

std::string expr_text(const Expr& e) {
  auto binary = [&](std::string_view op) {
    return "(" + expr_text(e.args.at(0)) + " " + std::string(op) + " " + expr_text(e.args.at(1)) + ")";
  };
  switch (e.op) {
    case ExprOp::kVariable: return "?" + e.variable;
    case ExprOp::kConstant: return turtle_term(e.constant, PrefixMap{});
    case ExprOp::kEqual: return binary("=");
    case ExprOp::kNotEqual: return binary("!=");
    case ExprOp::kLess: return binary("<");
    case ExprOp::kLessEqual: return binary("<=");
    case ExprOp::kGreater: return binary(">");
    case ExprOp::kGreaterEqual: return binary(">=");
    case ExprOp::kAnd: return binary("&&");
    case ExprOp::kOr: return binary("||");
    case ExprOp::kNot: return "(!" + expr_text(e.args.at(0)) + ")";
    case ExprOp::kYear: return "YEAR(" + expr_text(e.args.at(0)) + ")";
  }
  return {};
}

void group_text(const std::vector<PatternElement>& elements, std::ostringstream& out, int depth) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out << "{\n";
  for (const auto& e : elements) {
    out << indent << "  ";
    switch (e.kind) {
      case PatternElement::Kind::kTriple:
        out << term_text(e.triple.subject) << ' ' << term_text(e.triple.predicate) << ' '
            << term_text(e.triple.object) << " .\n";
        break;
      case PatternElement::Kind::kOptional:
        out << "OPTIONAL ";
        group_text(e.group, out, depth + 1);
        break;
      case PatternElement::Kind::kFilter:
        out << "FILTER (" << expr_text(e.filter) << ")\n";
        break;
      case PatternElement::Kind::kNotExists:
        out << "FILTER NOT EXISTS ";
        group_text(e.group, out, depth + 1);
        break;
    }
  }
  out << indent << "}\n";
}

}  // namespace

QueryAst parse_query(std::string_view text, const PrefixMap& prefixes) {
  return QueryParser(text, prefixes).parse();
}

QueryAst parse_query(std::string_view text) { return parse_query(text, PrefixMap::standard()); }

std::string query_to_string(const QueryAst& ast) {
  std::ostringstream out;
  out << "SELECT ";
  if (ast.distinct) out << "DISTINCT ";
  if (ast.select_all) out << "* ";
  for (const auto& item : ast.projection) {
    if (!item.aggregate) {
      out << '?' << item.name << ' ';
      continue;
    }
    out << "(COUNT(" << (item.aggregate->distinct ? "DISTINCT " : "")
        << (item.aggregate->variable ? "?" + *item.aggregate->variable : std::string("*")) << ") AS ?"
        << item.name << ") ";
  }
  out << "WHERE ";
  group_text(ast.where.elements, out, 0);
  if (!ast.group_by.empty()) {
    out << "GROUP BY";
    for (const auto& v : ast.group_by) out << " ?" << v;
    out << '\n';
  }
  if (!ast.order_by.empty()) {
    out << "ORDER BY";
    for (const auto& key : ast.order_by) {
      out << (key.descending ? " DESC(" : " ASC(") << expr_text(key.expr) << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace situkg

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "situkg/error.h"
#include "situkg/graph.h"

namespace situkg {

// ---------------------------------------------------------------------------
// AST

struct Variable {
  std::string name;  // without '?'
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

enum class ExprOp {
  kVariable,
  kConstant,
  kEqual,
  kNotEqual,
  kLess,
  kLessEqual,
  kGreater,
  kGreaterEqual,
  kAnd,
  kOr,
  kNot,
  kYear,
};

struct Expr {
  ExprOp op = ExprOp::kConstant;
  std::string variable;    // kVariable
  Term constant;           // kConstant
  std::vector<Expr> args;  // operands, in source order

  static Expr var(std::string name);
  static Expr constant_term(Term t);
  static Expr call(ExprOp op, std::vector<Expr> args);

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct PatternElement {
  enum class Kind { kTriple, kOptional, kFilter, kNotExists };

  Kind kind = Kind::kTriple;
  TriplePattern triple;               // kTriple
  Expr filter;                        // kFilter
  std::vector<PatternElement> group;  // kOptional, kNotExists

  friend bool operator==(const PatternElement&, const PatternElement&) = default;
};

struct GroupPattern {
  std::vector<PatternElement> elements;
  friend bool operator==(const GroupPattern&, const GroupPattern&) = default;
};

struct CountAggregate {
  bool distinct = false;
  std::optional<std::string> variable;  // nullopt means COUNT(*)
  friend bool operator==(const CountAggregate&, const CountAggregate&) = default;
};

struct ProjectionItem {
  std::string name;                         // output column (alias for aggregates)
  std::optional<CountAggregate> aggregate;  // set for (COUNT(...) AS ?name)
  friend bool operator==(const ProjectionItem&, const ProjectionItem&) = default;
};

struct OrderKey {
  Expr expr;
  bool descending = false;
  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

struct QueryAst {
  bool distinct = false;
  bool select_all = false;  // SELECT *; projection is then empty
  std::vector<ProjectionItem> projection;
  GroupPattern where;
  std::vector<std::string> group_by;
  std::vector<OrderKey> order_by;

  /// True when the query aggregates (GROUP BY present or any COUNT projected).
  bool is_grouped() const;

  friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

/// Variables a group can bind (triple patterns of the group and its
/// OPTIONALs; NOT EXISTS and FILTER bind nothing), in order of first
/// appearance.
std::vector<std::string> bound_variables(const GroupPattern& group);

/// SPARQL text for `ast`, with full IRIs. parse_query(query_to_string(q))
/// reproduces q.
std::string query_to_string(const QueryAst& ast);

// ---------------------------------------------------------------------------
// Errors

class QuerySyntaxError : public Error {
 public:
  QuerySyntaxError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class QueryEvaluationError : public Error {
 public:
  using Error::Error;
};

class MissingParameterError : public Error {
 public:
  explicit MissingParameterError(std::string slot)
      : Error("missing value for template parameter '{{" + slot + "}}'"), slot_(std::move(slot)) {}
  const std::string& slot() const noexcept { return slot_; }

 private:
  std::string slot_;
};

// ---------------------------------------------------------------------------
// Operations

using QueryParams = std::map<std::string, std::string, std::less<>>;

/// Replaces every `{{name}}` slot with params[name] verbatim. Throws
/// MissingParameterError naming the first slot without a value.
std::string substitute_params(std::string_view text, const QueryParams& params);

/// Parses the SELECT subset: PREFIX lines (extending `prefixes`), DISTINCT,
/// plain variables, (COUNT([DISTINCT] ?v | *) AS ?alias), SELECT *, WHERE
/// groups of triple patterns with `;` and `,` lists, OPTIONAL, FILTER(expr),
/// FILTER NOT EXISTS, GROUP BY and ORDER BY [ASC|DESC]. Throws
/// QuerySyntaxError or UnknownPrefixError.
QueryAst parse_query(std::string_view text, const PrefixMap& prefixes);
QueryAst parse_query(std::string_view text);  // with PrefixMap::standard()

/// Result rows. rows[i][j] is the value of variables[j], or nullopt if unbound.
struct SolutionSequence {
  using Row = std::vector<std::optional<Term>>;

  std::vector<std::string> variables;
  std::vector<Row> rows;

  std::size_t size() const noexcept { return rows.size(); }
  bool empty() const noexcept { return rows.empty(); }
  /// Column index of `variable`, or nullopt.
  std::optional<std::size_t> column(std::string_view variable) const;
  /// Value of `variable` in row `row`; nullopt when unbound or not projected.
  std::optional<Term> get(std::size_t row, std::string_view variable) const;

  friend bool operator==(const SolutionSequence&, const SolutionSequence&) = default;
};

/// Evaluates `ast` over `graph`. Throws QueryEvaluationError when an
/// aggregate alias collides with another variable of the query.
SolutionSequence evaluate(const Graph& graph, const QueryAst& ast);

/// Expression value under a binding: nullopt means an evaluation error
/// (unbound variable, YEAR of a non-date, incomparable operands). Exposed
/// for testing.
std::optional<Term> evaluate_expr(const Expr& expr, const std::map<std::string, Term, std::less<>>& binding);

/// Effective boolean value of a term, or nullopt when it has none.
std::optional<bool> effective_boolean(const Term& term);

}  // namespace situkg

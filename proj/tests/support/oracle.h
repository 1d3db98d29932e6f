#pragma once

// Reference query evaluator used only by tests. It reads the same AST as the
// engine but evaluates it the slow, literal way: triple patterns are matched
// in source order against a linear scan of every triple, OPTIONAL is an
// algebraic left join of independently computed solution sets, and
// expressions go through a separate interpreter working on long doubles.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "situkg/graph.h"
#include "situkg/query.h"

namespace situkg::testing {

using OracleRow = std::map<std::string, Term>;

/// Solutions of `ast` over `graph`, projected, as an unordered multiset
/// (each row is the projected columns in projection order).
std::vector<std::vector<std::optional<Term>>> oracle_evaluate(const Graph& graph, const QueryAst& ast);

/// Oracle value of a FILTER expression: nullopt on error, else truth.
std::optional<bool> oracle_filter(const Expr& expr, const OracleRow& row);

/// Canonical text of a row multiset, sorted, for equality checks and failure
/// messages.
std::string canonical_rows(std::vector<std::vector<std::optional<Term>>> rows);

}  // namespace situkg::testing

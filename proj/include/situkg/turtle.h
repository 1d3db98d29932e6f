#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "situkg/error.h"
#include "situkg/graph.h"

namespace situkg {

struct ParseError {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::string message;
  std::string token;       // offending token text, may be empty at end of input

  std::string to_string() const;
};

class TurtleSyntaxError : public Error {
 public:
  explicit TurtleSyntaxError(std::vector<ParseError> errors);
  const std::vector<ParseError>& errors() const noexcept { return errors_; }

 private:
  std::vector<ParseError> errors_;
};

struct TurtleParseResult {
  Graph graph;  // prefixes() holds the declared prefixes
  std::vector<ParseError> errors;
};

/// Parses the Turtle subset: @prefix/PREFIX, IRIs, prefixed names, `a`,
/// `;`/`,` lists, strings (short and long, with escapes), language tags,
/// `^^` datatypes, bare integers/decimals/doubles/booleans, comments and
/// labeled blank nodes. Collections and `[ ]` nodes are reported as errors.
/// After an error the parser resumes at the next statement, so every problem
/// in a file is reported; statements containing errors add no triples.
TurtleParseResult try_parse_turtle(std::string_view text);

/// As try_parse_turtle, but throws TurtleSyntaxError if anything failed.
Graph parse_turtle(std::string_view text);

/// Subject-grouped Turtle with one prefix block. Subjects, predicates (rdf:type
/// first) and objects are sorted with compare_terms, so output is deterministic.
std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes);
std::string serialize_turtle(const Graph& graph);

/// Turtle rendering of one term (CURIE when a prefix applies).
std::string turtle_term(const Term& term, const PrefixMap& prefixes);

}  // namespace situkg

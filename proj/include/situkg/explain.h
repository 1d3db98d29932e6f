#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "situkg/error.h"
#include "situkg/graph.h"
#include "situkg/query.h"

namespace situkg {

/// Rejected entity id or label (empty, invalid characters, or characters
/// that could alter the query text).
class ExplanationInputError : public Error {
 public:
  using Error::Error;
};

enum class AnnotatorKind { kArtificial, kHuman, kUnknown };

/// One situated reading of "entity was labeled with label". Terms are kept
/// exactly as stored, so literal lexical forms survive unchanged.
struct ExplanationContext {
  Term entity;
  Term entity_type;
  std::string label;
  Term strength;
  Term date;
  Term place;
  Term annotator;
  AnnotatorKind annotator_kind = AnnotatorKind::kUnknown;
  std::optional<Term> architecture;
  std::optional<Term> training_dataset;
  std::optional<Term> annotated_dataset;

  friend bool operator==(const ExplanationContext&, const ExplanationContext&) = default;
};

/// The bundled explanation query text with both slots filled. `entity_id`
/// must be a non-empty local name; `label` must be non-empty and free of
/// double quotes, backslashes and line breaks. When `base_namespace` differs
/// from the default, the query's empty-prefix declaration is rebound to it.
std::string explanation_query_text(std::string_view entity_id, std::string_view label,
                                   std::string_view base_namespace = ns::kSituAnnotate);

/// explanation_query_text parsed into an AST.
QueryAst build_explanation_query(std::string_view entity_id, std::string_view label,
                                 std::string_view base_namespace = ns::kSituAnnotate);

/// Runs the explanation query over a materialized graph, one context per
/// solution row. Annotators without architecture or pretraining triples (for
/// example human annotators) are found by a second pass in which those two
/// patterns are optional; its extra rows follow the strict ones.
std::vector<ExplanationContext> explain(const Graph& graph, std::string_view entity_id, std::string_view label,
                                        std::string_view base_namespace = ns::kSituAnnotate);

/// Fixed-template paragraph naming every field of `ctx` (IRIs by local name,
/// literals by lexical form).
std::string render_narrative(const ExplanationContext& ctx);

}  // namespace situkg

#include "situkg/explain.h"

#include "situkg/queries.h"
#include "situkg/schema.h"

namespace situkg {

namespace {

void check_inputs(std::string_view entity_id, std::string_view label) {
  if (entity_id.empty()) throw ExplanationInputError("entity id must not be empty");
  if (!is_valid_local_name(entity_id)) {
    throw ExplanationInputError("entity id '" + std::string(entity_id) +
                                "' is not a valid local name (letters, digits, '_' and '-')");
  }
  if (label.empty()) throw ExplanationInputError("label must not be empty");
  if (label.find_first_of("\"\\\r\n") != std::string_view::npos) {
    throw ExplanationInputError(
        "label must not contain double quotes, backslashes or line breaks; it is inserted into the query text");
  }
}

std::optional<Term> cell(const SolutionSequence& s, std::size_t row, std::string_view var) {
  return s.get(row, var);
}

bool mentions_predicate(const PatternElement& e, const std::string& iri) {
  if (e.kind != PatternElement::Kind::kTriple) return false;
  const auto* p = std::get_if<Term>(&e.triple.predicate);
  return p != nullptr && p->is_iri() && p->value() == iri;
}

// Moves the architecture and pretraining patterns into OPTIONAL groups.
QueryAst relaxed_variant(const QueryAst& strict, const OntologySchema& schema) {
  QueryAst relaxed = strict;
  const std::string arch = schema.iri("hasModelArchitecture");
  const std::string pre = schema.iri("pretrainedOnDataset");
  std::vector<PatternElement> kept;
  std::vector<PatternElement> optional;
  for (auto& e : relaxed.where.elements) {
    if (mentions_predicate(e, arch) || mentions_predicate(e, pre)) {
      PatternElement o;
      o.kind = PatternElement::Kind::kOptional;
      o.group.push_back(std::move(e));
      optional.push_back(std::move(o));
    } else {
      kept.push_back(std::move(e));
    }
  }
  for (auto& o : optional) kept.push_back(std::move(o));
  relaxed.where.elements = std::move(kept);
  return relaxed;
}

AnnotatorKind kind_of(const Graph& graph, const OntologySchema& schema, const Term& annotator) {
  bool artificial = false;
  bool human = false;
  for (const auto& type : graph.objects(annotator, Term::iri(iri::kRdfType))) {
    if (!type.is_iri()) continue;
    artificial = artificial || schema.is_subclass_of(type.value(), schema.iri("ArtificialAnnotator"));
    human = human || schema.is_subclass_of(type.value(), schema.iri("HumanAnnotator"));
  }
  if (artificial && !human) return AnnotatorKind::kArtificial;
  if (human && !artificial) return AnnotatorKind::kHuman;
  return AnnotatorKind::kUnknown;
}

}  // namespace

std::string explanation_query_text(std::string_view entity_id, std::string_view label,
                                   std::string_view base_namespace) {
  check_inputs(entity_id, label);
  std::string text(explanation_query_template());
  if (base_namespace != ns::kSituAnnotate) {
    const std::string from = "<" + std::string(ns::kSituAnnotate) + ">";
    const std::string to = "<" + std::string(base_namespace) + ">";
    for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
      text.replace(pos, from.size(), to);
    }
  }
  QueryParams params;
  params["entity_ID"] = std::string(entity_id);
  params["label"] = "\"" + std::string(label) + "\"";
  return substitute_params(text, params);
}

QueryAst build_explanation_query(std::string_view entity_id, std::string_view label,
                                 std::string_view base_namespace) {
  return parse_query(explanation_query_text(entity_id, label, base_namespace),
                     PrefixMap::standard(base_namespace));
}

std::vector<ExplanationContext> explain(const Graph& graph, std::string_view entity_id, std::string_view label,
                                        std::string_view base_namespace) {
  const OntologySchema schema = builtin_schema(base_namespace);
  QueryAst strict = build_explanation_query(entity_id, label, base_namespace);
  strict.projection.push_back(ProjectionItem{"pretrainedDataset", std::nullopt});
  const QueryAst relaxed = relaxed_variant(strict, schema);

  SolutionSequence rows = evaluate(graph, strict);
  SolutionSequence extra = evaluate(graph, relaxed);
  for (std::size_t r = 0; r < extra.size(); ++r) {
    if (!cell(extra, r, "architecture") || !cell(extra, r, "pretrainedDataset")) rows.rows.push_back(extra.rows[r]);
  }

  std::vector<ExplanationContext> out;
  const Term entity = Term::iri(std::string(base_namespace) + std::string(entity_id));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ExplanationContext ctx;
    ctx.entity = entity;
    ctx.label = std::string(label);
    ctx.entity_type = cell(rows, r, "entity_type").value_or(Term());
    ctx.strength = cell(rows, r, "strength").value_or(Term());
    ctx.date = cell(rows, r, "date").value_or(Term());
    ctx.place = cell(rows, r, "place").value_or(Term());
    ctx.annotator = cell(rows, r, "annotator").value_or(Term());
    ctx.architecture = cell(rows, r, "architecture");
    ctx.training_dataset = cell(rows, r, "pretrainedDataset");
    ctx.annotated_dataset = cell(rows, r, "dataset");
    ctx.annotator_kind = ctx.architecture || ctx.training_dataset ? AnnotatorKind::kArtificial
                                                                   : kind_of(graph, schema, ctx.annotator);
    out.push_back(std::move(ctx));
  }
  return out;
}

std::string render_narrative(const ExplanationContext& ctx) {
  auto name = [](const Term& t) { return local_name(t); };
  std::string s = "The entity '" + name(ctx.entity) + "' (a " + name(ctx.entity_type) +
                  ") was annotated with the label '" + ctx.label + "' with strength " + ctx.strength.value() +
                  ". This annotation was produced on " + ctx.date.value() + " in " + name(ctx.place);
  switch (ctx.annotator_kind) {
    case AnnotatorKind::kHuman:
      s += " by human annotator '" + name(ctx.annotator) + "'";
      break;
    case AnnotatorKind::kArtificial:
      s += " by annotator '" + name(ctx.annotator) + "', an artificial annotator";
      if (ctx.architecture) s += " with a " + name(*ctx.architecture) + " model architecture";
      if (ctx.training_dataset) s += " pretrained on the " + name(*ctx.training_dataset) + " dataset";
      break;
    case AnnotatorKind::kUnknown:
      s += " by annotator '" + name(ctx.annotator) + "'";
      break;
  }
  if (ctx.annotated_dataset) s += ", within an annotation of the " + name(*ctx.annotated_dataset) + " dataset";
  s += ".";
  return s;
}

}  // namespace situkg

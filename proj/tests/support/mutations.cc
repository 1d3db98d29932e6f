#include "mutations.h"

namespace situkg::testing {

namespace {

Term sa(const std::string& local) { return Term::iri(std::string(ns::kSituAnnotate) + local); }

// Replaces the object of every (subject, predicate, *) triple.
Graph replace_object(const Graph& g, const Term& s, const Term& p, const Term& o) {
  Graph out = without(g, [&](const Triple& t) { return t.subject == s && t.predicate == p; });
  out.insert(s, p, o);
  return out;
}

Graph with(const Graph& g, std::vector<Triple> extra) {
  Graph out = g;
  for (auto& t : extra) out.insert(t);
  return out;
}

}  // namespace

Graph without(const Graph& g, const std::function<bool(const Triple&)>& drop) {
  Graph out;
  out.prefixes() = g.prefixes();
  for (const auto& t : g.triples()) {
    if (!drop(t)) out.insert(t);
  }
  return out;
}

std::vector<Mutation> fixture_mutations() {
  const Term annotation = sa("14978_ARTstract_as_2023_06_26");
  const Term situation = sa("ARTstract_as_2023_06_26");
  return {
      {"out-of-range strength", "STRENGTH_RANGE", true,
       [=](const Graph& g) {
         return replace_object(g, annotation, sa("hasAnnotationStrength"), Term::literal("1.5", iri::kXsdDecimal));
       }},
      {"negative strength", "STRENGTH_RANGE", true,
       [=](const Graph& g) {
         return replace_object(g, annotation, sa("hasAnnotationStrength"), Term::literal("-0.1", iri::kXsdDecimal));
       }},
      {"non-numeric strength", "STRENGTH_RANGE", true,
       [=](const Graph& g) {
         return replace_object(g, annotation, sa("hasAnnotationStrength"), Term::literal("high"));
       }},
      {"malformed date", "DATE_FORM", true,
       [=](const Graph& g) {
         return replace_object(g, situation, sa("onDate"), Term::literal("26/06/2023", iri::kXsdDate));
       }},
      {"dangling annotation", "ANNOTATION_SHAPE", true,
       [=](const Graph& g) {
         return without(g, [&](const Triple& t) {
           return t.subject == annotation && t.predicate == sa("isAnnotationInvolvedInSituation");
         });
       }},
      {"missing lexical entry", "ANNOTATION_SHAPE", true,
       [=](const Graph& g) {
         return without(g, [&](const Triple& t) {
           return t.subject == annotation && t.predicate == sa("annotationWithLexicalEntry");
         });
       }},
      {"missing annotated entity", "ANNOTATION_SHAPE", true,
       [=](const Graph& g) {
         return without(g, [&](const Triple& t) {
           return t.subject == annotation && t.predicate == sa("aboutAnnotatedEntity");
         });
       }},
      {"literal-valued involvesAnnotator", "DANGLING_REF", true,
       [=](const Graph& g) {
         return replace_object(g, situation, sa("involvesAnnotator"), Term::literal("oschamp_vit-artworkclassifier"));
       }},
      {"literal-valued atPlace", "DANGLING_REF", true,
       [=](const Graph& g) { return replace_object(g, situation, sa("atPlace"), Term::literal("Italy")); }},
      {"orphan situation", "SITUATION_SHAPE", false,
       [=](const Graph& g) {
         const Term orphan = sa("ARTstract_orphan_2023_06_27");
         return with(g, {make_triple(orphan, Term::iri(iri::kRdfType), sa("ColorAnnotationSituation")),
                         make_triple(orphan, sa("onDate"), Term::literal("2023-06-27", iri::kXsdDate)),
                         make_triple(orphan, sa("atPlace"), sa("Italy"))});
       }},
      {"situation satisfies a non-description", "SITUATION_SHAPE", true,
       [=](const Graph& g) { return replace_object(g, situation, sa("satisfies"), sa("Italy")); }},
      {"malformed coordinate", "COORDINATE_FORM", false,
       [=](const Graph& g) { return with(g, {make_triple(annotation, sa("hasCoordinate"), Term::literal("left"))}); }},
      {"property outside its domain", "DOMAIN", false,
       [=](const Graph& g) {
         return with(g, {make_triple(sa("Italy"), sa("hasModelArchitecture"), sa("visual_transformer"))});
       }},
      {"target outside its range", "RANGE", false,
       [=](const Graph& g) {
         return replace_object(g, situation, sa("involvesRemunerationScheme"), sa("ARTstract_14978"));
       }},
  };
}

}  // namespace situkg::testing

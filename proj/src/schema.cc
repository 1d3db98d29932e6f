#include "situkg/schema.h"

#include <array>
#include <functional>

#include "situkg/error.h"

namespace situkg {

OntologySchema::OntologySchema(std::string base_namespace, std::vector<ClassDef> classes,
                               std::vector<PropertyDef> properties)
    : base_(std::move(base_namespace)), classes_(std::move(classes)), properties_(std::move(properties)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!class_index_.emplace(classes_[i].iri, i).second) {
      throw Error("duplicate class declaration: " + classes_[i].iri);
    }
  }
  for (std::size_t i = 0; i < properties_.size(); ++i) {
    if (!property_index_.emplace(properties_[i].iri, i).second) {
      throw Error("duplicate property declaration: " + properties_[i].iri);
    }
  }
  for (const auto& p : properties_) {
    if (!p.inverse) continue;
    const PropertyDef* partner = find_property(*p.inverse);
    if (partner == nullptr) throw Error("inverse of " + p.iri + " is not declared: " + *p.inverse);
    if (partner->inverse != p.iri) throw Error("inverse declaration is not symmetric: " + p.iri);
  }

  // Transitive closure by depth-first search with cycle detection.
  enum class Mark { kNone, kActive, kDone };
  std::map<std::string, Mark, std::less<>> marks;
  std::function<void(const std::string&)> visit = [&](const std::string& c) {
    auto& mark = marks[c];
    if (mark == Mark::kDone) return;
    if (mark == Mark::kActive) throw Error("cyclic subclass declaration through " + c);
    mark = Mark::kActive;
    std::set<std::string> all;
    if (const ClassDef* def = find_class(c)) {
      for (const auto& super : def->superclasses) {
        visit(super);
        all.insert(super);
        const auto& inherited = closure_[super];
        all.insert(inherited.begin(), inherited.end());
      }
    }
    closure_[c] = std::move(all);
    marks[c] = Mark::kDone;
  };
  for (const auto& c : classes_) visit(c.iri);
}

const ClassDef* OntologySchema::find_class(std::string_view iri) const {
  auto it = class_index_.find(iri);
  return it == class_index_.end() ? nullptr : &classes_[it->second];
}

const PropertyDef* OntologySchema::find_property(std::string_view iri) const {
  auto it = property_index_.find(iri);
  return it == property_index_.end() ? nullptr : &properties_[it->second];
}

const std::set<std::string>& OntologySchema::superclasses(std::string_view class_iri) const {
  static const std::set<std::string> kEmpty;
  auto it = closure_.find(class_iri);
  return it == closure_.end() ? kEmpty : it->second;
}

bool OntologySchema::is_subclass_of(std::string_view sub, std::string_view super) const {
  if (sub == super) return true;
  const auto& supers = superclasses(sub);
  return supers.find(std::string(super)) != supers.end();
}

std::vector<std::pair<std::string, std::string>> OntologySchema::inverse_pairs() const {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : properties_) {
    if (p.inverse && p.iri < *p.inverse) pairs.emplace_back(p.iri, *p.inverse);
  }
  return pairs;
}

OntologySchema builtin_schema(std::string_view base_namespace) {
  const std::string base(base_namespace);
  const std::string dul(ns::kDul);
  auto c = [&](std::string_view local) { return base + std::string(local); };

  std::vector<ClassDef> classes = {
      {dul + "Situation", {}},
      {dul + "Role", {}},
      {c("Annotation"), {}},
      {c("AnnotationSituation"), {dul + "Situation"}},
      {c("AnnotationDescription"), {}},
      {c("AnnotationRole"), {dul + "Role"}},
      {c("AnnotatedEntity"), {}},
      {c("Annotator"), {}},
      {c("ArtificialAnnotator"), {c("Annotator")}},
      {c("HumanAnnotator"), {c("Annotator")}},
      {c("IndividualHumanAnnotator"), {c("HumanAnnotator")}},
      {c("HumanAnnotatorCommunity"), {c("HumanAnnotator")}},
      {c("Place"), {}},
      {c("Dataset"), {}},
      {c("RemunerationScheme"), {}},
      {c("ModelArchitecture"), {}},
      {c("PoliticalAffiliation"), {}},
      {c("ReligiousAffiliation"), {}},
      {c("IndigenousAffiliation"), {}},
      {c("Image"), {c("AnnotatedEntity")}},
      {c("ImageAnnotationSituation"), {c("AnnotationSituation")}},
      {c("ImageAnnotationDescription"), {c("AnnotationDescription")}},
  };
  static constexpr std::array<std::string_view, 8> kImageAnnotationKinds = {
      "ArtStyle", "Color", "Object", "Action", "Emotion", "ImageCaption", "Age", "HumanPresence"};
  for (auto kind : kImageAnnotationKinds) {
    classes.push_back({c(std::string(kind) + "Annotation"), {c("Annotation")}});
    classes.push_back({c(std::string(kind) + "AnnotationSituation"), {c("ImageAnnotationSituation")}});
  }

  auto resource = [&](std::string_view local, std::set<std::string> domain, std::string range_class,
                      bool required = false) {
    PropertyDef p;
    p.iri = c(local);
    p.domain = std::move(domain);
    p.range = RangeKind::kResource;
    p.range_class = std::move(range_class);
    p.required = required;
    return p;
  };
  auto literal = [&](std::string_view local, std::set<std::string> domain, std::string datatype) {
    PropertyDef p;
    p.iri = c(local);
    p.domain = std::move(domain);
    p.range = RangeKind::kLiteral;
    p.range_datatype = std::move(datatype);
    return p;
  };
  auto with_inverse = [&](PropertyDef p, std::string_view inverse_local) {
    p.inverse = c(inverse_local);
    return p;
  };

  const std::set<std::string> situation = {c("AnnotationSituation")};
  const std::set<std::string> annotation = {c("Annotation")};
  const std::set<std::string> entity = {c("AnnotatedEntity")};
  const std::set<std::string> image = {c("Image")};
  const std::set<std::string> artificial = {c("ArtificialAnnotator")};
  const std::set<std::string> human = {c("HumanAnnotator")};
  const std::set<std::string> community = {c("HumanAnnotatorCommunity")};

  std::vector<PropertyDef> properties = {
      // situation context
      resource("atPlace", situation, c("Place")),
      literal("onDate", situation, iri::kXsdDate),
      resource("involvesAnnotator", situation, c("Annotator")),
      resource("involvesDataset", situation, c("Dataset")),
      resource("involvesRemunerationScheme", situation, c("RemunerationScheme")),
      literal("hasDetectionThreshold", situation, ""),
      resource("satisfies", situation, c("AnnotationDescription")),
      with_inverse(resource("involvesAnnotation", situation, c("Annotation")),
                   "isAnnotationInvolvedInSituation"),
      with_inverse(resource("involvesAnnotatedEntity", situation, c("AnnotatedEntity")),
                   "isInvolvedInAnnotationSituation"),
      // annotations
      resource("aboutAnnotatedEntity", annotation, c("AnnotatedEntity"), true),
      resource("annotationWithLexicalEntry", annotation, "", true),
      resource("isClassifiedBy", annotation, c("AnnotationRole")),
      resource("typedByConcept", annotation, ""),
      literal("hasAnnotationStrength", annotation, ""),
      with_inverse(resource("isAnnotationInvolvedInSituation", annotation, c("AnnotationSituation"), true),
                   "involvesAnnotation"),
      literal("hasCoordinate", annotation, iri::kXsdString),
      // annotated entities
      with_inverse(resource("isInvolvedInAnnotationSituation", entity, c("AnnotationSituation")),
                   "involvesAnnotatedEntity"),
      resource("hasImageLabelTypedBy", image, ""),
      resource("isAnnotatedWithLexicalEntry", image, ""),
      // descriptions
      resource("defines", {c("AnnotationDescription")}, c("AnnotationRole")),
      // annotators
      resource("hasModelArchitecture", artificial, c("ModelArchitecture")),
      resource("pretrainedOnDataset", artificial, c("Dataset")),
      resource("hasPoliticalAffiliation", human, ""),
      resource("hasReligiousAffiliation", human, ""),
      resource("hasIndigenousAffiliation", human, ""),
      resource("hasCountryOfUpbringing", human, ""),
      resource("hasPredominantPoliticalAffiliation", community, ""),
      resource("hasPredominantReligiousAffiliation", community, ""),
      resource("hasPredominantIndigenousAffiliation", community, ""),
      resource("hasPredominantCountryOfUpbringing", community, ""),
  };

  return OntologySchema(base, std::move(classes), std::move(properties));
}

std::size_t materialize_in_place(Graph& graph, const OntologySchema& schema) {
  const Term rdf_type = Term::iri(iri::kRdfType);
  const Term sub_class_of = Term::iri(iri::kRdfsSubClassOf);
  std::vector<std::pair<Term, Term>> inverses;
  for (const auto& [p, q] : schema.inverse_pairs()) {
    inverses.emplace_back(Term::iri(p), Term::iri(q));
  }

  std::size_t total = 0;
  std::size_t added = 0;
  do {
    added = 0;
    for (const auto& cls : schema.classes()) {
      for (const auto& super : cls.superclasses) {
        added += graph.insert(Term::iri(cls.iri), sub_class_of, Term::iri(super)) ? 1 : 0;
      }
    }
    for (const auto& t : graph.match({std::nullopt, rdf_type, std::nullopt})) {
      if (!t.object.is_iri()) continue;
      for (const auto& super : schema.superclasses(t.object.value())) {
        added += graph.insert(t.subject, rdf_type, Term::iri(super)) ? 1 : 0;
      }
    }
    for (const auto& [p, q] : inverses) {
      for (const auto& [forward, backward] : {std::pair{p, q}, std::pair{q, p}}) {
        for (const auto& t : graph.match({std::nullopt, forward, std::nullopt})) {
          if (t.object.is_literal()) continue;
          added += graph.insert(t.object, backward, t.subject) ? 1 : 0;
        }
      }
    }
    total += added;
  } while (added > 0);
  return total;
}

Graph materialize_inference(const Graph& graph, const OntologySchema& schema) {
  Graph out = graph;
  materialize_in_place(out, schema);
  return out;
}

}  // namespace situkg

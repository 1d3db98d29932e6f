#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "situkg/graph.h"

namespace situkg {

struct ClassDef {
  std::string iri;
  std::set<std::string> superclasses;  // direct superclasses only
};

enum class RangeKind {
  kResource,  // IRI or blank node; optionally constrained to range_class
  kLiteral,   // literal; optionally constrained to range_datatype
  kAny,
};

struct PropertyDef {
  std::string iri;
  std::set<std::string> domain;  // empty = unconstrained
  RangeKind range = RangeKind::kAny;
  std::string range_class;       // for kResource, may be empty
  std::string range_datatype;    // for kLiteral, may be empty
  std::optional<std::string> inverse;
  bool required = false;         // at least one value expected on domain instances
};

/// Class hierarchy and property declarations of the situated-annotation
/// vocabulary, held as data. Immutable once built.
class OntologySchema {
 public:
  /// Throws Error on duplicate declarations, undeclared inverse partners,
  /// asymmetric inverse declarations or cyclic subclass links.
  OntologySchema(std::string base_namespace, std::vector<ClassDef> classes,
                 std::vector<PropertyDef> properties);

  const std::string& base_namespace() const noexcept { return base_; }
  /// base_namespace() + local.
  std::string iri(std::string_view local) const { return base_ + std::string(local); }
  Term term(std::string_view local) const { return Term::iri(iri(local)); }

  const std::vector<ClassDef>& classes() const noexcept { return classes_; }
  const std::vector<PropertyDef>& properties() const noexcept { return properties_; }
  const ClassDef* find_class(std::string_view iri) const;
  const PropertyDef* find_property(std::string_view iri) const;
  bool has_class(std::string_view iri) const { return find_class(iri) != nullptr; }

  /// Transitive superclasses of `class_iri` (excluding itself). Unknown
  /// classes have none.
  const std::set<std::string>& superclasses(std::string_view class_iri) const;
  /// True if `sub` equals `super` or reaches it through subclass links.
  bool is_subclass_of(std::string_view sub, std::string_view super) const;

  /// Declared inverse pairs, each listed once.
  std::vector<std::pair<std::string, std::string>> inverse_pairs() const;

 private:
  std::string base_;
  std::vector<ClassDef> classes_;
  std::vector<PropertyDef> properties_;
  std::map<std::string, std::size_t, std::less<>> class_index_;
  std::map<std::string, std::size_t, std::less<>> property_index_;
  std::map<std::string, std::set<std::string>, std::less<>> closure_;
};

/// The compiled-in vocabulary: core annotation classes, annotator taxonomy,
/// image-annotation specializations and their properties. `base_namespace`
/// defaults to the situannotate namespace.
OntologySchema builtin_schema(std::string_view base_namespace = ns::kSituAnnotate);

/// Adds, to a fixpoint: superclass rdf:type triples for typed nodes, one
/// rdfs:subClassOf triple per declared subclass link, and the missing half of
/// every asserted inverse-property pair. Returns the number of triples added.
std::size_t materialize_in_place(Graph& graph, const OntologySchema& schema);

/// Copying form of materialize_in_place.
Graph materialize_inference(const Graph& graph, const OntologySchema& schema);

}  // namespace situkg

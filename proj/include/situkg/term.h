#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace situkg {

namespace ns {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSituAnnotate = "https://w3id.org/situannotate#";
inline constexpr std::string_view kDul = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#";
inline constexpr std::string_view kConceptNet =
    "http://etna.istc.cnr.it/framester2/conceptnet/5.7.0/c/en/";
}  // namespace ns

namespace iri {
inline const std::string kRdfType = std::string(ns::kRdf) + "type";
inline const std::string kRdfLangString = std::string(ns::kRdf) + "langString";
inline const std::string kRdfsSubClassOf = std::string(ns::kRdfs) + "subClassOf";
inline const std::string kRdfsLabel = std::string(ns::kRdfs) + "label";
inline const std::string kRdfsComment = std::string(ns::kRdfs) + "comment";
inline const std::string kXsdString = std::string(ns::kXsd) + "string";
inline const std::string kXsdBoolean = std::string(ns::kXsd) + "boolean";
inline const std::string kXsdInteger = std::string(ns::kXsd) + "integer";
inline const std::string kXsdDecimal = std::string(ns::kXsd) + "decimal";
inline const std::string kXsdDouble = std::string(ns::kXsd) + "double";
inline const std::string kXsdDate = std::string(ns::kXsd) + "date";
inline const std::string kXsdDateTime = std::string(ns::kXsd) + "dateTime";
}  // namespace iri

/// Ordering of kinds is part of the term order: blank < IRI < literal.
enum class TermKind : unsigned char { kBlankNode = 0, kIri = 1, kLiteral = 2 };

/// An RDF node: IRI, labeled blank node, or literal.
///
/// Literals always carry a datatype; plain strings use xsd:string and
/// language-tagged strings use rdf:langString. Construction validates these
/// invariants and throws StructuralError on violation.
class Term {
 public:
  /// Default-constructed terms are the blank node `_:b0`; they exist so terms
  /// can live in containers, not as a meaningful value.
  Term() : kind_(TermKind::kBlankNode), value_("b0") {}

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = iri::kXsdString);
  static Term lang_literal(std::string lexical, std::string language);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::kIri; }
  bool is_blank() const noexcept { return kind_ == TermKind::kBlankNode; }
  bool is_literal() const noexcept { return kind_ == TermKind::kLiteral; }

  /// IRI string, blank-node label, or literal lexical form.
  const std::string& value() const noexcept { return value_; }
  /// Empty unless this is a literal.
  const std::string& datatype() const noexcept { return datatype_; }
  /// Empty unless this is a language-tagged literal.
  const std::string& language() const noexcept { return language_; }

  friend bool operator==(const Term&, const Term&) = default;

  /// Debug/N-Triples style rendering, e.g. `<http://x>`, `_:b`, `"v"^^<dt>`.
  std::string to_string() const;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

/// Local part of an IRI after the last '#', '/' or ':'; other terms yield value().
std::string local_name(const Term& term);

/// Total order over terms.
///
/// Blank nodes sort before IRIs, IRIs before literals. Numeric literals compare
/// by value (exactly for xsd:integer/decimal and derived types, binary floating
/// point once an xsd:double/float is involved), xsd:date literals by calendar
/// order, everything else by (datatype, lexical form, language). Terms that
/// compare equal are identical. Literals whose lexical form does not parse for
/// their datatype fall back to the lexical comparison.
std::strong_ordering compare_terms(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare_terms(a, b) < 0; }
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Throws StructuralError unless the subject is an IRI or blank node and the
/// predicate is an IRI.
void check_triple(const Triple& triple);

/// Builds a triple and checks it.
Triple make_triple(Term subject, Term predicate, Term object);

std::strong_ordering compare_triples(const Triple& a, const Triple& b);

}  // namespace situkg

template <>
struct std::hash<situkg::Term> {
  std::size_t operator()(const situkg::Term& t) const noexcept;
};

template <>
struct std::hash<situkg::Triple> {
  std::size_t operator()(const situkg::Triple& t) const noexcept;
};

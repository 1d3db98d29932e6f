#include "situkg/term.h"

#include <cctype>
#include <cmath>
#include <optional>

#include "situkg/error.h"
#include "situkg/literal.h"

namespace situkg {
namespace {

bool looks_absolute(const std::string& value) {
  auto colon = value.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    char c = value[i];
    bool ok = std::isalpha(static_cast<unsigned char>(c)) ||
              (i > 0 && (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
                         c == '.'));
    if (!ok) return false;
  }
  return true;
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Literal sort buckets; numeric and date buckets only hold well-formed values.
enum class LiteralBucket { kNumeric = 0, kDate = 1, kOther = 2 };

LiteralBucket bucket_of(const Term& t, std::optional<Numeric>& num, std::optional<Date>& date) {
  num = numeric_value(t);
  if (num) return LiteralBucket::kNumeric;
  if (t.datatype() == iri::kXsdDate) {
    date = Date::parse(t.value());
    if (date) return LiteralBucket::kDate;
  }
  return LiteralBucket::kOther;
}

std::strong_ordering to_strong(std::partial_ordering p) {
  if (p < 0) return std::strong_ordering::less;
  if (p > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_literals(const Term& a, const Term& b) {
  std::optional<Numeric> na, nb;
  std::optional<Date> da, db;
  auto ba = bucket_of(a, na, da);
  auto bb = bucket_of(b, nb, db);
  if (ba != bb) return ba <=> bb;

  if (ba == LiteralBucket::kNumeric) {
    // NaN has no numeric position; it sorts after every other number.
    const bool nan_a = std::isnan(na->approx);
    const bool nan_b = std::isnan(nb->approx);
    if (nan_a != nan_b) return nan_a ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = to_strong(na->approx <=> nb->approx); c != 0) return c;
    // exact values sort before doubles of the same approximate value
    if (na->exact != nb->exact) return na->exact ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    if (na->exact) {
      if (auto c = na->decimal <=> nb->decimal; c != 0) return c;
    }
  } else if (ba == LiteralBucket::kDate) {
    if (auto c = *da <=> *db; c != 0) return c;
  }
  if (auto c = a.datatype() <=> b.datatype(); c != 0) return c;
  if (auto c = a.value() <=> b.value(); c != 0) return c;
  return a.language() <=> b.language();
}

}  // namespace

Term Term::iri(std::string value) {
  if (!looks_absolute(value)) {
    throw StructuralError("IRI is not absolute: '" + value + "'");
  }
  return Term(TermKind::kIri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  if (label.empty()) throw StructuralError("blank node label is empty");
  return Term(TermKind::kBlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (datatype == iri::kRdfLangString) {
    throw StructuralError("rdf:langString literal requires a language tag");
  }
  if (!looks_absolute(datatype)) {
    throw StructuralError("literal datatype is not an absolute IRI: '" + datatype + "'");
  }
  return Term(TermKind::kLiteral, std::move(lexical), std::move(datatype), {});
}

Term Term::lang_literal(std::string lexical, std::string language) {
  if (language.empty()) throw StructuralError("empty language tag");
  for (auto& c : language) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return Term(TermKind::kLiteral, std::move(lexical), iri::kRdfLangString, std::move(language));
}

std::string Term::to_string() const {
  switch (kind_) {
    case TermKind::kIri:
      return "<" + value_ + ">";
    case TermKind::kBlankNode:
      return "_:" + value_;
    case TermKind::kLiteral:
      if (!language_.empty()) return "\"" + value_ + "\"@" + language_;
      return "\"" + value_ + "\"^^<" + datatype_ + ">";
  }
  return {};
}

std::string local_name(const Term& term) {
  if (!term.is_iri()) return term.value();
  const auto& v = term.value();
  auto cut = v.find_last_of("#/");
  if (cut == std::string::npos) cut = v.find_last_of(':');
  return cut == std::string::npos ? v : v.substr(cut + 1);
}

std::strong_ordering compare_terms(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  if (a.is_literal()) return compare_literals(a, b);
  return a.value() <=> b.value();
}

void check_triple(const Triple& t) {
  if (t.subject.is_literal()) {
    throw StructuralError("literal in subject position: " + t.subject.to_string());
  }
  if (!t.predicate.is_iri()) {
    throw StructuralError("predicate must be an IRI: " + t.predicate.to_string());
  }
}

Triple make_triple(Term subject, Term predicate, Term object) {
  Triple t{std::move(subject), std::move(predicate), std::move(object)};
  check_triple(t);
  return t;
}

std::strong_ordering compare_triples(const Triple& a, const Triple& b) {
  if (auto c = compare_terms(a.subject, b.subject); c != 0) return c;
  if (auto c = compare_terms(a.predicate, b.predicate); c != 0) return c;
  return compare_terms(a.object, b.object);
}

}  // namespace situkg

std::size_t std::hash<situkg::Term>::operator()(const situkg::Term& t) const noexcept {
  std::hash<std::string> h;
  std::size_t seed = static_cast<std::size_t>(t.kind());
  seed = situkg::mix(seed, h(t.value()));
  if (t.is_literal()) {
    seed = situkg::mix(seed, h(t.datatype()));
    seed = situkg::mix(seed, h(t.language()));
  }
  return seed;
}

std::size_t std::hash<situkg::Triple>::operator()(const situkg::Triple& t) const noexcept {
  std::hash<situkg::Term> h;
  return situkg::mix(situkg::mix(h(t.subject), h(t.predicate)), h(t.object));
}

#include <random>

#include "doctest.h"
#include "generators.h"
#include "situkg/error.h"
#include "situkg/term.h"

using namespace situkg;

namespace {
const std::string kSa(ns::kSituAnnotate);
int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }
}  // namespace

TEST_CASE("term construction enforces the RDF invariants") {
  CHECK_THROWS_AS(Term::iri(""), StructuralError);
  CHECK_THROWS_AS(Term::iri("no-scheme"), StructuralError);
  CHECK_NOTHROW(Term::iri("urn:x"));
  CHECK_THROWS_AS(Term::literal("x", ""), StructuralError);
  CHECK_THROWS_AS(Term::literal("x", iri::kRdfLangString), StructuralError);
  CHECK_THROWS_AS(Term::lang_literal("x", ""), StructuralError);
  CHECK_THROWS_AS(Term::blank(""), StructuralError);

  const Term plain = Term::literal("top_one");
  CHECK(plain.datatype() == iri::kXsdString);
  CHECK(plain.language().empty());
  const Term tagged = Term::lang_literal("hallo", "de");
  CHECK(tagged.datatype() == iri::kRdfLangString);
  CHECK(tagged.language() == "de");
}

TEST_CASE("triples reject literal subjects and non-IRI predicates") {
  const Term s = Term::iri(kSa + "ARTstract_as_2023_06_26");
  const Term p = Term::iri(kSa + "atPlace");
  const Term o = Term::iri(kSa + "Italy");
  CHECK_NOTHROW(make_triple(s, p, o));
  CHECK_NOTHROW(make_triple(Term::blank("x"), p, Term::literal("v")));
  CHECK_THROWS_AS(make_triple(Term::literal("v"), p, o), StructuralError);
  CHECK_THROWS_AS(make_triple(s, Term::blank("p"), o), StructuralError);
  CHECK_THROWS_AS(make_triple(s, Term::literal("p"), o), StructuralError);
}

TEST_CASE("compare_terms orders kinds blank < IRI < literal") {
  CHECK(compare_terms(Term::blank("z"), Term::iri("http://a")) < 0);
  CHECK(compare_terms(Term::iri("http://z"), Term::literal("a")) < 0);
  CHECK(compare_terms(Term::iri("http://a"), Term::iri("http://b")) < 0);
}

TEST_CASE("strength literals compare by exact decimal value") {
  const Term strength = Term::literal("0.6149182915687561", iri::kXsdDecimal);
  const Term threshold = Term::literal("0.85", iri::kXsdDecimal);
  CHECK(compare_terms(strength, threshold) < 0);
  CHECK(compare_terms(strength, strength) == 0);
  // Values that differ beyond double precision still order correctly.
  CHECK(compare_terms(Term::literal("0.10000000000000000001", iri::kXsdDecimal),
                      Term::literal("0.1", iri::kXsdDecimal)) > 0);
  // Integer and decimal compare by value across datatypes.
  CHECK(compare_terms(Term::literal("1", iri::kXsdInteger), Term::literal("0.5", iri::kXsdDecimal)) > 0);
  // Equal values with different lexical forms are ordered but not equal.
  CHECK(compare_terms(Term::literal("1.0", iri::kXsdDecimal), Term::literal("1.00", iri::kXsdDecimal)) != 0);
}

TEST_CASE("dates compare in calendar order") {
  CHECK(compare_terms(Term::literal("2020-01-01", iri::kXsdDate), Term::literal("2023-06-26", iri::kXsdDate)) < 0);
  CHECK(compare_terms(Term::literal("2023-06-26", iri::kXsdDate), Term::literal("2023-06-26", iri::kXsdDate)) == 0);
  CHECK(compare_terms(Term::literal("999-01-01", iri::kXsdDate), Term::literal("0999-01-01", iri::kXsdDate)) != 0);
}

TEST_CASE("unparseable lexical forms fall back to lexical order without failing") {
  const Term bad = Term::literal("abc", iri::kXsdDecimal);
  const Term good = Term::literal("1.5", iri::kXsdDecimal);
  CHECK_NOTHROW(compare_terms(bad, good));
  CHECK((compare_terms(bad, good) < 0) == (compare_terms(good, bad) > 0));
  CHECK(compare_terms(Term::literal("2023-13-01", iri::kXsdDate), Term::literal("2023-12-01", iri::kXsdDate)) != 0);
}

TEST_CASE("compare_terms is a total order on random terms") {
  std::mt19937 rng(20240611);
  std::vector<Term> terms;
  for (int i = 0; i < 160; ++i) terms.push_back(testing::random_term(rng));
  for (const auto& a : terms) {
    for (const auto& b : terms) {
      const int ab = sign(compare_terms(a, b));
      const int ba = sign(compare_terms(b, a));
      REQUIRE(ab == -ba);
      // Equal under the order means identical.
      REQUIRE((ab == 0) == (a == b));
    }
  }
  for (std::size_t i = 0; i + 2 < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); j += 7) {
      for (std::size_t k = 0; k < terms.size(); k += 5) {
        const auto& a = terms[i];
        const auto& b = terms[j];
        const auto& c = terms[k];
        if (compare_terms(a, b) <= 0 && compare_terms(b, c) <= 0) REQUIRE(compare_terms(a, c) <= 0);
      }
    }
  }
}

TEST_CASE("local_name takes the part after the last separator") {
  CHECK(local_name(Term::iri(kSa + "visual_transformer")) == "visual_transformer");
  CHECK(local_name(Term::iri("http://example.org/a/b")) == "b");
  CHECK(local_name(Term::iri("urn:isbn:123")) == "123");
  CHECK(local_name(Term::literal("2023-06-26", iri::kXsdDate)) == "2023-06-26");
}

TEST_CASE("equal terms hash equally") {
  const Term a = Term::literal("0.9", iri::kXsdDecimal);
  const Term b = Term::literal("0.9", iri::kXsdDecimal);
  CHECK(std::hash<Term>{}(a) == std::hash<Term>{}(b));
  CHECK(a.to_string() == "\"0.9\"^^<http://www.w3.org/2001/XMLSchema#decimal>");
  CHECK(Term::blank("x").to_string() == "_:x");
}

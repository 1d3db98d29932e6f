#include "doctest.h"
#include "situkg/error.h"
#include "situkg/prefix_map.h"

using namespace situkg;

TEST_CASE("expand_curie resolves declared prefixes and the keyword a") {
  const PrefixMap p = PrefixMap::standard();
  CHECK(expand_curie(p, ":ARTstract_14978").value() == "https://w3id.org/situannotate#ARTstract_14978");
  CHECK(expand_curie(p, "a").value() == iri::kRdfType);
  CHECK(expand_curie(p, "conceptnet:impressionism").value() ==
        "http://etna.istc.cnr.it/framester2/conceptnet/5.7.0/c/en/impressionism");
  CHECK(expand_curie(p, ":le_20-29").value() == "https://w3id.org/situannotate#le_20-29");
}

TEST_CASE("undeclared prefixes raise an error naming the prefix") {
  const PrefixMap p = PrefixMap::standard();
  try {
    p.expand("ns1:ImageAnnotationDescription");
    FAIL("expected UnknownPrefixError");
  } catch (const UnknownPrefixError& e) {
    CHECK(e.prefix() == "ns1");
    CHECK(std::string(e.what()).find("ns1") != std::string::npos);
  }
  CHECK_THROWS_AS(PrefixMap{}.expand(":x"), UnknownPrefixError);
}

TEST_CASE("shorten picks the longest namespace and round-trips with expand") {
  PrefixMap p = PrefixMap::standard();
  p.declare("ex", "http://example.org/");
  p.declare("exa", "http://example.org/a/");
  CHECK(p.shorten("http://example.org/a/b") == "exa:b");
  CHECK(p.shorten("http://example.org/x") == "ex:x");
  CHECK_FALSE(p.shorten("http://example.org/a b"));
  CHECK_FALSE(p.shorten("http://nowhere.org/x"));
  CHECK(p.shorten(std::string(ns::kSituAnnotate) + "oschamp_vit-artworkclassifier") ==
        ":oschamp_vit-artworkclassifier");

  // expand then shorten reproduces the CURIE for every declared prefix.
  for (const auto& [prefix, ns_iri] : p.entries()) {
    const std::string curie = prefix + ":local_1";
    const Term expanded = p.expand(curie);
    auto back = p.shorten(expanded.value());
    REQUIRE(back);
    // The longest namespace wins, so the CURIE may use a more specific prefix
    // that expands to the same IRI.
    CHECK(p.expand(*back) == expanded);
    if (prefix != "ex") CHECK(*back == curie);
  }
}

TEST_CASE("local name and prefix label rules") {
  CHECK(is_valid_local_name("vit-artworkclassifier"));
  CHECK(is_valid_local_name("20-29"));
  CHECK(is_valid_local_name(""));
  CHECK_FALSE(is_valid_local_name("-lead"));
  CHECK_FALSE(is_valid_local_name("a b"));
  CHECK_FALSE(is_valid_local_name("a.b"));
  CHECK(is_valid_prefix_label("ns1"));
  CHECK(is_valid_prefix_label(""));
  CHECK_FALSE(is_valid_prefix_label("1ns"));
}

TEST_CASE("merge overrides existing labels") {
  PrefixMap a;
  a.declare("x", "http://one/");
  PrefixMap b;
  b.declare("x", "http://two/");
  b.declare("y", "http://three/");
  a.merge(b);
  CHECK(a.namespace_of("x") == "http://two/");
  CHECK(a.contains("y"));
  CHECK_FALSE(a.namespace_of("z"));
}

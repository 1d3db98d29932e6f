// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. Each criterion is checked from scratch against the shipped data.

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "criteria.h"
#include "fixtures.h"
#include "generators.h"
#include "mutations.h"
#include "oracle.h"
#include "situkg/query.h"
#include "situkg/schema.h"
#include "situkg/turtle.h"
#include "situkg/validation.h"

using namespace situkg;

namespace {

using Failures = std::vector<std::string>;

Failures ac1_competency_suite() { return testing::check_competency_suite(testing::load_fixture()); }

Failures ac2_explanation() { return testing::check_impressionism_explanation(testing::load_fixture()); }

Failures ac3_oracle_equivalence() {
  Failures failures;
  std::mt19937 rng(20240611);
  constexpr int kCases = 250;
  for (int i = 0; i < kCases; ++i) {
    const Graph g = testing::random_small_graph(rng, 40);
    const QueryAst q = testing::random_query(rng);
    const auto engine = testing::canonical_rows(evaluate(g, q).rows);
    const auto oracle = testing::canonical_rows(testing::oracle_evaluate(g, q));
    if (engine != oracle) failures.push_back("case " + std::to_string(i) + ": " + query_to_string(q));
  }
  return failures;
}

Failures ac4_round_trip() {
  Failures failures;
  std::mt19937 rng(8675309);
  constexpr int kGraphs = 250;
  for (int i = 0; i < kGraphs; ++i) {
    const Graph g = testing::random_roundtrip_graph(rng, 30);
    for (const bool with_prefixes : {true, false}) {
      const std::string text = with_prefixes ? serialize_turtle(g, g.prefixes()) : serialize_turtle(g, PrefixMap());
      try {
        if (!parse_turtle(text).same_triples(g)) failures.push_back("graph " + std::to_string(i) + " changed");
      } catch (const std::exception& e) {
        failures.push_back("graph " + std::to_string(i) + ": " + e.what());
      }
    }
  }
  const Graph fixture = testing::load_fixture_raw();
  const Graph again = parse_turtle(serialize_turtle(fixture, fixture.prefixes()));
  if (again.size() != fixture.size() || !again.same_triples(fixture)) {
    failures.push_back("fixture: " + std::to_string(fixture.size()) + " triples became " +
                       std::to_string(again.size()));
  }
  return failures;
}

Failures ac5_inference() {
  Failures failures;
  const auto schema = builtin_schema();
  Graph g = testing::load_fixture_raw();
  materialize_in_place(g, schema);
  if (const auto second = materialize_in_place(g, schema); second != 0) {
    failures.push_back("second materialization added " + std::to_string(second) + " triples");
  }
  for (const auto& cls : schema.classes()) {
    std::set<std::string> seen;
    std::deque<std::string> todo{cls.iri};
    while (!todo.empty()) {
      const ClassDef* def = schema.find_class(todo.front());
      todo.pop_front();
      if (def == nullptr) continue;
      for (const auto& s : def->superclasses) {
        if (seen.insert(s).second) todo.push_back(s);
      }
    }
    if (schema.superclasses(cls.iri) != seen) failures.push_back("closure differs for " + cls.iri);
  }
  return failures;
}

Failures ac6_mutations() {
  Failures failures;
  const auto schema = builtin_schema();
  const Graph raw = testing::load_fixture_raw();
  const auto clean = validate(materialize_inference(raw, schema), schema);
  if (clean.error_count() != 0) failures.push_back("clean fixture has errors:\n" + clean.to_text());
  const auto mutations = testing::fixture_mutations();
  if (mutations.size() < 6) failures.push_back("fewer than six mutations");
  for (const auto& m : mutations) {
    const auto report = validate(materialize_inference(m.apply(raw), schema), schema);
    if (report.count(m.code) == 0) failures.push_back(m.name + ": no " + m.code + " finding");
  }
  return failures;
}

Failures ac7_builder_round_trip() {
  Failures failures;
  const Graph g = testing::load_built_fixture();
  const auto report = validate(g, builtin_schema());
  if (report.error_count() != 0) failures.push_back("built graph has errors:\n" + report.to_text());
  for (const auto& f : testing::check_competency_suite(g)) failures.push_back("criterion 1: " + f);
  for (const auto& f : testing::check_impressionism_explanation(g)) failures.push_back("criterion 2: " + f);
  return failures;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Failures()>>> criteria = {
      {"AC1 competency questions answer on the fixture with the pinned bindings", ac1_competency_suite},
      {"AC2 explanation of impressionism on ARTstract_14978", ac2_explanation},
      {"AC3 engine equals brute-force evaluation on 250 random cases", ac3_oracle_equivalence},
      {"AC4 Turtle round trip on 250 random graphs and the fixture", ac4_round_trip},
      {"AC5 materialization idempotent and closure equals reachability", ac5_inference},
      {"AC6 every seeded fault is reported and the clean fixture has no errors", ac6_mutations},
      {"AC7 graph built from events validates and satisfies AC1 and AC2", ac7_builder_round_trip},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, check] : criteria) {
    Failures failures;
    try {
      failures = check();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (failures.empty() ? "[PASS] " : "[FAIL] ") << name << "\n";
    for (const auto& f : failures) std::cout << "    " << f << "\n";
    failed += failures.empty() ? 0 : 1;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << ms << " ms\n";
  return failed == 0 ? 0 : 1;
}

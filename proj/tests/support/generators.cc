#include "generators.h"

#include <algorithm>

namespace situkg::testing {

namespace {

std::string ex(std::string_view local) { return std::string(kEx) + std::string(local); }

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int between(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

std::vector<Term> node_pool() {
  return {Term::iri(ex("s0")), Term::iri(ex("s1")), Term::iri(ex("s2")), Term::iri(ex("s3")),
          Term::iri(ex("s4")), Term::blank("b0"),   Term::blank("b1")};
}

std::vector<Term> predicate_pool() {
  return {Term::iri(ex("p0")), Term::iri(ex("p1")), Term::iri(ex("p2")), Term::iri(iri::kRdfType)};
}

std::vector<Term> literal_pool() {
  return {Term::literal("1", iri::kXsdInteger),
          Term::literal("2", iri::kXsdInteger),
          Term::literal("1.0", iri::kXsdDecimal),
          Term::literal("0.5", iri::kXsdDecimal),
          Term::literal("0.85", iri::kXsdDecimal),
          Term::literal("2.5E0", iri::kXsdDouble),
          Term::literal("a"),
          Term::literal("b"),
          Term::literal(""),
          Term::lang_literal("a", "en"),
          Term::literal("2021-03-04", iri::kXsdDate),
          Term::literal("2019-12-31", iri::kXsdDate),
          Term::literal("2024-02-29", iri::kXsdDate),
          Term::literal("true", iri::kXsdBoolean),
          Term::literal("false", iri::kXsdBoolean)};
}

Graph random_small_graph(std::mt19937& rng, std::size_t max_triples) {
  const auto nodes = node_pool();
  const auto preds = predicate_pool();
  const auto lits = literal_pool();
  Graph g;
  const auto n = std::uniform_int_distribution<std::size_t>(0, max_triples)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Term& p = pick(rng, preds);
    Term o = p.value() == iri::kRdfType ? Term::iri(ex(chance(rng, 0.5) ? "C0" : "C1"))
             : chance(rng, 0.5)         ? pick(rng, nodes)
                                        : pick(rng, lits);
    g.insert(pick(rng, nodes), p, o);
  }
  return g;
}

Term random_term(std::mt19937& rng) {
  static const std::vector<std::string> kLexical = {"a", "b", "", "A", "é", "a b", "z"};
  switch (between(rng, 0, 9)) {
    case 0: return Term::blank("b" + std::to_string(between(rng, 0, 3)));
    case 1:
    case 2: return Term::iri(ex("n" + std::to_string(between(rng, 0, 5))));
    case 3: return Term::literal(pick(rng, kLexical), chance(rng, 0.5) ? iri::kXsdString : ex("dt"));
    case 4: return Term::lang_literal(pick(rng, kLexical) + "x", chance(rng, 0.5) ? "en" : "it");
    case 5: {
      static const std::vector<std::string> kInts = {"0", "-1", "1", "01", "+1", "10", "-0"};
      return Term::literal(pick(rng, kInts), iri::kXsdInteger);
    }
    case 6: {
      static const std::vector<std::string> kDecimals = {"1.0", "1.00", "0.5", ".5", "-0.5", "0.85", "1", "abc"};
      return Term::literal(pick(rng, kDecimals), iri::kXsdDecimal);
    }
    case 7: {
      static const std::vector<std::string> kDoubles = {"1.0E0", "5E-1", "0.5", "1e0", "-INF", "INF", "NaN", "x"};
      return Term::literal(pick(rng, kDoubles), iri::kXsdDouble);
    }
    case 8: {
      static const std::vector<std::string> kDates = {"2020-01-01", "2023-06-26", "2023-06-26Z", "1999-12-31",
                                                      "2023-13-01", "not-a-date"};
      return Term::literal(pick(rng, kDates), iri::kXsdDate);
    }
    default: return Term::literal(chance(rng, 0.5) ? "true" : "false", iri::kXsdBoolean);
  }
}

Graph random_roundtrip_graph(std::mt19937& rng, std::size_t max_triples) {
  static const std::vector<std::string> kLocals = {"a", "b_c", "le_20-29", "x1", "vit-artworkclassifier", "Z", "_u"};
  static const std::vector<std::string> kOddIris = {
      "http://example.org/path/with#frag", "urn:isbn:0451450523",  "http://example.org/caf\xC3\xA9",
      "http://example.org/a.b",            "http://other.org/x?q=1", "https://w3id.org/situannotate#-lead",
      "http://example.org/"};
  static const std::vector<std::string> kStrings = {
      "",       "plain",     "with \"quotes\"", "back\\slash", "line\nbreak", "tab\there",
      "caf\xC3\xA9", "\xE6\x97\xA5\xE6\x9C\xAC", "'single'", "ends with quote\"", "a # not a comment", "\r"};
  static const std::vector<std::pair<std::string, std::string>> kTyped = {
      {"42", iri::kXsdInteger},
      {"-7", iri::kXsdInteger},
      {"+3", iri::kXsdInteger},
      {"007", iri::kXsdInteger},
      {"0.6149182915687561", iri::kXsdDecimal},
      {"1.50", iri::kXsdDecimal},
      {"-0.0", iri::kXsdDecimal},
      {"1.0E3", iri::kXsdDouble},
      {"2e-1", iri::kXsdDouble},
      {"true", iri::kXsdBoolean},
      {"false", iri::kXsdBoolean},
      {"2023-06-26", iri::kXsdDate},
      {"top_one", iri::kXsdString},
      {"12", std::string(kEx) + "custom"},
      {"x", std::string(ns::kXsd) + "token"}};
  PrefixMap prefixes = PrefixMap::standard();
  prefixes.declare("ex", std::string(kEx));

  auto node = [&]() -> Term {
    switch (between(rng, 0, 4)) {
      case 0: return Term::blank("n" + std::to_string(between(rng, 0, 3)));
      case 1: return Term::iri(pick(rng, kOddIris));
      case 2: return Term::iri(std::string(ns::kSituAnnotate) + pick(rng, kLocals));
      default: return Term::iri(ex(pick(rng, kLocals)));
    }
  };
  auto object = [&]() -> Term {
    switch (between(rng, 0, 4)) {
      case 0:
      case 1: return node();
      case 2: return Term::literal(pick(rng, kStrings));
      case 3: return Term::lang_literal(pick(rng, kStrings), chance(rng, 0.5) ? "en" : "en-US");
      default: {
        const auto& [lex, dt] = pick(rng, kTyped);
        return Term::literal(lex, dt);
      }
    }
  };
  Graph g;
  g.prefixes() = prefixes;
  const auto n = std::uniform_int_distribution<std::size_t>(0, max_triples)(rng);
  for (std::size_t i = 0; i < n; ++i) {
    Term s = node();
    Term p = chance(rng, 0.2) ? Term::iri(iri::kRdfType) : Term::iri(ex("p" + std::to_string(between(rng, 0, 3))));
    if (chance(rng, 0.1)) p = Term::iri(pick(rng, kOddIris));
    if (p.value() == "http://example.org/") p = Term::iri(ex("p0"));
    g.insert(s, p, object());
  }
  return g;
}

namespace {

const std::vector<std::string> kVars = {"a", "b", "c", "d", "e"};

PatternTerm random_position(std::mt19937& rng, const std::vector<Term>& constants, double var_chance) {
  if (chance(rng, var_chance)) return Variable{pick(rng, kVars)};
  return pick(rng, constants);
}

TriplePattern random_pattern(std::mt19937& rng) {
  auto nodes = node_pool();
  nodes.erase(std::remove_if(nodes.begin(), nodes.end(), [](const Term& t) { return t.is_blank(); }), nodes.end());
  auto objects = nodes;
  for (auto& l : literal_pool()) objects.push_back(l);
  objects.push_back(Term::iri(ex("C0")));
  TriplePattern p;
  p.subject = random_position(rng, nodes, 0.8);
  // Predicate variables get their own names: a predicate never occurs as a
  // subject here, so sharing names would mostly produce empty joins.
  if (chance(rng, 0.15)) {
    p.predicate = Variable{chance(rng, 0.5) ? "p" : "q"};
  } else {
    p.predicate = pick(rng, predicate_pool());
  }
  p.object = random_position(rng, objects, 0.85);
  return p;
}

PatternElement triple_element(TriplePattern p) {
  PatternElement e;
  e.kind = PatternElement::Kind::kTriple;
  e.triple = std::move(p);
  return e;
}

Expr random_expr(std::mt19937& rng, const std::vector<std::string>& vars, int depth) {
  static const std::vector<ExprOp> kCompare = {ExprOp::kEqual,       ExprOp::kNotEqual, ExprOp::kLess,
                                               ExprOp::kLessEqual,   ExprOp::kGreater,  ExprOp::kGreaterEqual};
  auto operand = [&]() -> Expr {
    // Mostly variables that the group can bind; sometimes one it cannot.
    if (!vars.empty() && chance(rng, 0.6)) return Expr::var(pick(rng, vars));
    if (chance(rng, 0.1)) return Expr::var("zz");
    auto lits = literal_pool();
    lits.push_back(Term::iri(ex("s1")));
    return Expr::constant_term(pick(rng, lits));
  };
  const int choice = depth >= 2 ? 0 : between(rng, 0, 5);
  switch (choice) {
    case 1: return Expr::call(ExprOp::kAnd, {random_expr(rng, vars, depth + 1), random_expr(rng, vars, depth + 1)});
    case 2: return Expr::call(ExprOp::kOr, {random_expr(rng, vars, depth + 1), random_expr(rng, vars, depth + 1)});
    case 3: return Expr::call(ExprOp::kNot, {random_expr(rng, vars, depth + 1)});
    case 4: {
      Expr year = Expr::call(ExprOp::kYear, {operand()});
      return Expr::call(pick(rng, kCompare),
                        {year, Expr::constant_term(Term::literal(chance(rng, 0.5) ? "2020" : "2021",
                                                                 iri::kXsdInteger))});
    }
    default: return Expr::call(pick(rng, kCompare), {operand(), operand()});
  }
}

}  // namespace

QueryAst random_query(std::mt19937& rng) {
  QueryAst q;
  const int patterns = between(rng, 1, 4);
  std::vector<std::string> subjects;
  for (int i = 0; i < patterns; ++i) {
    TriplePattern p = random_pattern(rng);
    // Reuse an earlier subject variable half the time, giving star-shaped
    // joins that actually connect instead of mostly disjoint patterns.
    if (!subjects.empty() && chance(rng, 0.5)) p.subject = Variable{pick(rng, subjects)};
    if (const auto* v = std::get_if<Variable>(&p.subject)) subjects.push_back(v->name);
    q.where.elements.push_back(triple_element(std::move(p)));
  }

  const auto main_vars = bound_variables(q.where);
  switch (between(rng, 0, 3)) {
    case 1: {
      PatternElement opt;
      opt.kind = PatternElement::Kind::kOptional;
      const int n = between(rng, 1, 2);
      for (int i = 0; i < n; ++i) opt.group.push_back(triple_element(random_pattern(rng)));
      if (chance(rng, 0.3)) {
        PatternElement f;
        f.kind = PatternElement::Kind::kFilter;
        f.filter = random_expr(rng, bound_variables(GroupPattern{opt.group}), 1);
        opt.group.push_back(std::move(f));
      }
      // Place it anywhere in the group: later triple patterns then join
      // against the left-joined rows.
      auto at = q.where.elements.begin() + between(rng, 0, static_cast<int>(q.where.elements.size()));
      q.where.elements.insert(at, std::move(opt));
      break;
    }
    case 2: {
      PatternElement f;
      f.kind = PatternElement::Kind::kFilter;
      f.filter = random_expr(rng, main_vars, 0);
      auto at = q.where.elements.begin() + between(rng, 0, static_cast<int>(q.where.elements.size()));
      q.where.elements.insert(at, std::move(f));
      break;
    }
    case 3: {
      PatternElement ne;
      ne.kind = PatternElement::Kind::kNotExists;
      ne.group.push_back(triple_element(random_pattern(rng)));
      if (chance(rng, 0.4)) {
        PatternElement f;
        f.kind = PatternElement::Kind::kFilter;
        auto vars = bound_variables(GroupPattern{ne.group});
        vars.insert(vars.end(), main_vars.begin(), main_vars.end());
        f.filter = random_expr(rng, vars, 1);
        ne.group.push_back(std::move(f));
      }
      q.where.elements.push_back(std::move(ne));
      break;
    }
    default: break;
  }

  const auto vars = bound_variables(q.where);
  if (vars.empty()) {
    // Constant-only patterns: project a count so the query stays legal.
    q.projection.push_back({"n", CountAggregate{chance(rng, 0.5), std::nullopt}});
    return q;
  }
  const int shape = between(rng, 0, 9);
  if (shape == 0) {
    q.select_all = true;
  } else if (shape <= 2) {
    // Aggregation.
    if (chance(rng, 0.7)) {
      const std::string key = pick(rng, vars);
      q.group_by.push_back(key);
      q.projection.push_back({key, std::nullopt});
    }
    CountAggregate agg;
    agg.distinct = chance(rng, 0.4);
    if (chance(rng, 0.7)) agg.variable = pick(rng, vars);
    q.projection.push_back({"n", agg});
  } else {
    std::vector<std::string> shuffled = vars;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto keep = std::uniform_int_distribution<std::size_t>(1, shuffled.size())(rng);
    for (std::size_t i = 0; i < keep; ++i) q.projection.push_back({shuffled[i], std::nullopt});
  }
  q.distinct = chance(rng, 0.3);
  if (chance(rng, 0.3)) {
    std::vector<std::string> orderable;
    if (q.is_grouped()) {
      for (const auto& item : q.projection) orderable.push_back(item.name);
    } else {
      orderable = vars;
    }
    q.order_by.push_back({Expr::var(pick(rng, orderable)), chance(rng, 0.5)});
  }
  return q;
}

}  // namespace situkg::testing

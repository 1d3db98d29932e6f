#include <algorithm>
#include <set>

#include "situkg/literal.h"
#include "situkg/query.h"

namespace situkg {

using Binding = std::map<std::string, Term, std::less<>>;

std::optional<std::size_t> SolutionSequence::column(std::string_view variable) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i] == variable) return i;
  }
  return std::nullopt;
}

std::optional<Term> SolutionSequence::get(std::size_t row, std::string_view variable) const {
  auto c = column(variable);
  if (!c || row >= rows.size()) return std::nullopt;
  return rows[row][*c];
}

// ---------------------------------------------------------------------------
// expressions

namespace {

Term boolean_term(bool b) { return Term::literal(b ? "true" : "false", iri::kXsdBoolean); }

bool is_plain_string(const Term& t) {
  return t.is_literal() && (t.datatype() == iri::kXsdString || t.datatype() == iri::kRdfLangString);
}

// Returns the ordering of a and b for relational operators, or nullopt if
// they are not comparable.
std::optional<std::partial_ordering> order_values(const Term& a, const Term& b) {
  auto na = numeric_value(a);
  auto nb = numeric_value(b);
  if (na && nb) return compare_numeric(*na, *nb);
  auto da = date_value(a);
  auto db = date_value(b);
  if (da && db) return *da <=> *db;
  if (is_plain_string(a) && is_plain_string(b) && a.language() == b.language()) {
    return a.value() <=> b.value();
  }
  return std::nullopt;
}

std::optional<bool> compare(ExprOp op, const Term& a, const Term& b) {
  auto ord = order_values(a, b);
  if (op == ExprOp::kEqual || op == ExprOp::kNotEqual) {
    bool equal = ord ? *ord == std::partial_ordering::equivalent : a == b;
    return op == ExprOp::kEqual ? equal : !equal;
  }
  if (!ord) return std::nullopt;
  switch (op) {
    case ExprOp::kLess: return *ord == std::partial_ordering::less;
    case ExprOp::kLessEqual:
      return *ord == std::partial_ordering::less || *ord == std::partial_ordering::equivalent;
    case ExprOp::kGreater: return *ord == std::partial_ordering::greater;
    case ExprOp::kGreaterEqual:
      return *ord == std::partial_ordering::greater || *ord == std::partial_ordering::equivalent;
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<bool> effective_boolean(const Term& term) {
  if (!term.is_literal()) return std::nullopt;
  if (term.datatype() == iri::kXsdBoolean) {
    if (term.value() == "true" || term.value() == "1") return true;
    if (term.value() == "false" || term.value() == "0") return false;
    return std::nullopt;
  }
  if (is_numeric_datatype(term.datatype())) {
    auto n = numeric_value(term);
    if (!n) return false;
    if (n->exact) return !n->decimal.is_zero();
    return n->approx == n->approx && n->approx != 0.0;
  }
  if (is_plain_string(term)) return !term.value().empty();
  return std::nullopt;
}

std::optional<Term> evaluate_expr(const Expr& expr, const Binding& binding) {
  switch (expr.op) {
    case ExprOp::kVariable: {
      auto it = binding.find(expr.variable);
      if (it == binding.end()) return std::nullopt;
      return it->second;
    }
    case ExprOp::kConstant:
      return expr.constant;
    case ExprOp::kEqual:
    case ExprOp::kNotEqual:
    case ExprOp::kLess:
    case ExprOp::kLessEqual:
    case ExprOp::kGreater:
    case ExprOp::kGreaterEqual: {
      auto a = evaluate_expr(expr.args.at(0), binding);
      auto b = evaluate_expr(expr.args.at(1), binding);
      if (!a || !b) return std::nullopt;
      auto r = compare(expr.op, *a, *b);
      if (!r) return std::nullopt;
      return boolean_term(*r);
    }
    case ExprOp::kAnd:
    case ExprOp::kOr: {
      auto ebv = [&](const Expr& e) -> std::optional<bool> {
        auto v = evaluate_expr(e, binding);
        return v ? effective_boolean(*v) : std::nullopt;
      };
      auto a = ebv(expr.args.at(0));
      auto b = ebv(expr.args.at(1));
      const bool dominant = expr.op == ExprOp::kOr;  // value that decides the result alone
      if ((a && *a == dominant) || (b && *b == dominant)) return boolean_term(dominant);
      if (!a || !b) return std::nullopt;
      return boolean_term(!dominant);
    }
    case ExprOp::kNot: {
      auto v = evaluate_expr(expr.args.at(0), binding);
      if (!v) return std::nullopt;
      auto b = effective_boolean(*v);
      if (!b) return std::nullopt;
      return boolean_term(!*b);
    }
    case ExprOp::kYear: {
      auto v = evaluate_expr(expr.args.at(0), binding);
      if (!v) return std::nullopt;
      auto d = date_value(*v);
      if (!d) return std::nullopt;
      return Term::literal(std::to_string(d->year), iri::kXsdInteger);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

bool filter_passes(const Expr& e, const Binding& b) {
  auto v = evaluate_expr(e, b);
  if (!v) return false;
  auto ebv = effective_boolean(*v);
  return ebv.value_or(false);
}

class Evaluator {
 public:
  explicit Evaluator(const Graph& graph) : graph_(graph) {}

  std::vector<Binding> group(const std::vector<PatternElement>& elements, const Binding& seed) const {
    std::vector<Binding> current{seed};
    std::vector<const PatternElement*> filters;
    std::size_t i = 0;
    while (i < elements.size()) {
      const auto& e = elements[i];
      if (e.kind == PatternElement::Kind::kFilter || e.kind == PatternElement::Kind::kNotExists) {
        filters.push_back(&e);
        ++i;
        continue;
      }
      if (e.kind == PatternElement::Kind::kOptional) {
        std::vector<Binding> next;
        for (const auto& row : current) {
          auto extended = group(e.group, row);
          if (extended.empty()) {
            next.push_back(row);
          } else {
            for (auto& r : extended) next.push_back(std::move(r));
          }
        }
        current = std::move(next);
        ++i;
        continue;
      }
      // A run of triple patterns (filters in between belong to the group
      // scope and do not split the basic graph pattern).
      std::vector<const TriplePattern*> run;
      while (i < elements.size() && elements[i].kind != PatternElement::Kind::kOptional) {
        if (elements[i].kind == PatternElement::Kind::kTriple) {
          run.push_back(&elements[i].triple);
        } else {
          filters.push_back(&elements[i]);
        }
        ++i;
      }
      std::vector<Binding> next;
      for (const auto& row : current) {
        Binding b = row;
        join(run, b, next);
      }
      current = std::move(next);
    }

    for (const auto* f : filters) {
      std::vector<Binding> kept;
      for (auto& row : current) {
        bool keep = f->kind == PatternElement::Kind::kFilter ? filter_passes(f->filter, row)
                                                             : group(f->group, row).empty();
        if (keep) kept.push_back(std::move(row));
      }
      current = std::move(kept);
    }
    return current;
  }

 private:
  static const Term* resolve(const PatternTerm& t, const Binding& b) {
    if (const auto* term = std::get_if<Term>(&t)) return term;
    auto it = b.find(std::get<Variable>(t).name);
    return it == b.end() ? nullptr : &it->second;
  }

  static int bound_count(const TriplePattern& p, const Binding& b) {
    return (resolve(p.subject, b) ? 1 : 0) + (resolve(p.predicate, b) ? 1 : 0) + (resolve(p.object, b) ? 1 : 0);
  }

  // Index nested-loop join; at each step the pattern with the most bound
  // positions goes next.
  void join(std::vector<const TriplePattern*>& remaining, Binding& b, std::vector<Binding>& out) const {
    if (remaining.empty()) {
      out.push_back(b);
      return;
    }
    std::size_t best = 0;
    int best_count = -1;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      int c = bound_count(*remaining[i], b);
      if (c > best_count) {
        best = i;
        best_count = c;
      }
    }
    const TriplePattern* p = remaining[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));

    MatchPattern mp;
    if (const Term* s = resolve(p->subject, b)) mp.subject = *s;
    if (const Term* pr = resolve(p->predicate, b)) mp.predicate = *pr;
    if (const Term* o = resolve(p->object, b)) mp.object = *o;

    for (const auto& t : graph_.match(mp)) {
      std::vector<std::string> added;
      bool ok = bind(p->subject, t.subject, b, added) && bind(p->predicate, t.predicate, b, added) &&
                bind(p->object, t.object, b, added);
      if (ok) join(remaining, b, out);
      for (const auto& name : added) b.erase(name);
    }
    remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(best), p);
  }

  static bool bind(const PatternTerm& pt, const Term& value, Binding& b, std::vector<std::string>& added) {
    const auto* v = std::get_if<Variable>(&pt);
    if (v == nullptr) return true;
    auto [it, inserted] = b.emplace(v->name, value);
    if (inserted) {
      added.push_back(v->name);
      return true;
    }
    return it->second == value;
  }

  const Graph& graph_;
};

using KeyRow = std::vector<std::optional<Term>>;

int compare_optional(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (!a || !b) return static_cast<int>(a.has_value()) - static_cast<int>(b.has_value());
  auto c = compare_terms(*a, *b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

struct KeyRowLess {
  bool operator()(const KeyRow& a, const KeyRow& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (int c = compare_optional(a[i], b[i]); c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

KeyRow key_of(const Binding& b, const std::vector<std::string>& vars) {
  KeyRow key;
  key.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = b.find(v);
    key.push_back(it == b.end() ? std::nullopt : std::optional<Term>(it->second));
  }
  return key;
}

void check_aliases(const QueryAst& ast) {
  const auto bound = bound_variables(ast.where);
  std::set<std::string> taken(bound.begin(), bound.end());
  taken.insert(ast.group_by.begin(), ast.group_by.end());
  for (const auto& item : ast.projection) {
    if (!item.aggregate) continue;
    auto uses = std::count_if(ast.projection.begin(), ast.projection.end(),
                              [&](const ProjectionItem& other) { return other.name == item.name; });
    if (taken.count(item.name) != 0 || uses > 1) {
      throw QueryEvaluationError("aggregate alias ?" + item.name + " collides with another variable of the query");
    }
  }
}

std::vector<Binding> aggregate(const QueryAst& ast, const std::vector<Binding>& rows) {
  std::vector<KeyRow> order;
  std::map<KeyRow, std::vector<const Binding*>, KeyRowLess> groups;
  for (const auto& row : rows) {
    KeyRow key = key_of(row, ast.group_by);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&row);
  }
  if (rows.empty() && ast.group_by.empty()) {
    order.emplace_back();
    groups[KeyRow{}];
  }

  const auto all_vars = bound_variables(ast.where);
  std::vector<Binding> out;
  for (const auto& key : order) {
    const auto& members = groups[key];
    Binding result;
    for (std::size_t i = 0; i < ast.group_by.size(); ++i) {
      if (key[i]) result.emplace(ast.group_by[i], *key[i]);
    }
    for (const auto& item : ast.projection) {
      if (!item.aggregate) continue;
      const auto& agg = *item.aggregate;
      std::size_t n = 0;
      if (agg.variable) {
        std::set<Term, TermLess> seen;
        for (const auto* m : members) {
          auto it = m->find(*agg.variable);
          if (it == m->end()) continue;
          if (!agg.distinct || seen.insert(it->second).second) ++n;
        }
      } else if (agg.distinct) {
        std::set<KeyRow, KeyRowLess> seen;
        for (const auto* m : members) seen.insert(key_of(*m, all_vars));
        n = seen.size();
      } else {
        n = members.size();
      }
      result.emplace(item.name, Term::literal(std::to_string(n), iri::kXsdInteger));
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace

SolutionSequence evaluate(const Graph& graph, const QueryAst& ast) {
  const bool grouped = ast.is_grouped();
  if (grouped) check_aliases(ast);

  std::vector<Binding> rows = Evaluator(graph).group(ast.where.elements, Binding{});
  if (grouped) rows = aggregate(ast, rows);

  if (!ast.order_by.empty()) {
    std::vector<std::pair<KeyRow, Binding>> keyed;
    keyed.reserve(rows.size());
    for (auto& row : rows) {
      KeyRow key;
      for (const auto& k : ast.order_by) key.push_back(evaluate_expr(k.expr, row));
      keyed.emplace_back(std::move(key), std::move(row));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      for (std::size_t i = 0; i < ast.order_by.size(); ++i) {
        int c = compare_optional(a.first[i], b.first[i]);
        if (c != 0) return ast.order_by[i].descending ? c > 0 : c < 0;
      }
      return false;
    });
    rows.clear();
    for (auto& [key, row] : keyed) rows.push_back(std::move(row));
  }

  SolutionSequence result;
  if (ast.select_all) {
    result.variables = bound_variables(ast.where);
  } else {
    for (const auto& item : ast.projection) result.variables.push_back(item.name);
  }
  std::set<KeyRow, KeyRowLess> seen;
  for (const auto& row : rows) {
    KeyRow projected = key_of(row, result.variables);
    if (ast.distinct && !seen.insert(projected).second) continue;
    result.rows.push_back(std::move(projected));
  }
  return result;
}

}  // namespace situkg

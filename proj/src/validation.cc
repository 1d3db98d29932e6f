#include "situkg/validation.h"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "situkg/literal.h"

namespace situkg {

std::string_view severity_name(Severity severity) {
  return severity == Severity::kError ? "ERROR" : "WARNING";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::kError;
  }));
}

std::size_t ValidationReport::warning_count() const { return findings.size() - error_count(); }

std::size_t ValidationReport::count(std::string_view c) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.code == c; }));
}

namespace {

std::string node_text(const Term& t) {
  if (t.is_iri()) return "<" + t.value() + ">";
  return t.to_string();
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& f : findings) {
    out << severity_name(f.severity) << ' ' << f.code << ' ' << node_text(f.focus) << " - " << f.message
        << '\n';
  }
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["errors"] = error_count();
  doc["warnings"] = warning_count();
  doc["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : findings) {
    nlohmann::ordered_json item;
    item["severity"] = f.severity == Severity::kError ? "error" : "warning";
    item["code"] = f.code;
    item["node"] = f.focus.is_iri() ? f.focus.value() : f.focus.to_string();
    item["message"] = f.message;
    doc["findings"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

namespace {

class Validator {
 public:
  Validator(const Graph& graph, const OntologySchema& schema)
      : graph_(graph), schema_(schema), rdf_type_(Term::iri(iri::kRdfType)) {
    for (const auto& t : graph_.match({std::nullopt, rdf_type_, std::nullopt})) {
      if (t.object.is_iri()) types_[t.subject].insert(t.object.value());
    }
  }

  ValidationReport run() {
    check_strengths();
    check_dates();
    check_annotations();
    check_situations();
    check_dangling();
    check_domain_range();
    check_coordinates();
    std::sort(report_.findings.begin(), report_.findings.end(), [](const Finding& a, const Finding& b) {
      if (auto c = compare_terms(a.focus, b.focus); c != 0) return c < 0;
      if (a.code != b.code) return a.code < b.code;
      if (a.severity != b.severity) return a.severity < b.severity;
      return a.message < b.message;
    });
    report_.findings.erase(std::unique(report_.findings.begin(), report_.findings.end()),
                           report_.findings.end());
    return std::move(report_);
  }

 private:
  Term prop(std::string_view local) const { return schema_.term(local); }

  void add(Severity severity, std::string_view code, const Term& focus, std::string message) {
    report_.findings.push_back(Finding{severity, std::string(code), focus, std::move(message)});
  }

  bool is_instance_of(const Term& node, const std::string& cls) const {
    auto it = types_.find(node);
    if (it == types_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const std::string& t) { return schema_.is_subclass_of(t, cls); });
  }

  bool is_typed(const Term& node) const { return types_.count(node) != 0; }

  // Nodes that are instances of `cls`, in compare_terms order.
  std::set<Term, TermLess> instances_of(const std::string& cls) const {
    std::set<Term, TermLess> out;
    for (const auto& [node, types] : types_) {
      if (is_instance_of(node, cls)) out.insert(node);
    }
    return out;
  }

  static std::string show(const Term& t) { return t.is_iri() ? "<" + t.value() + ">" : t.to_string(); }

  void check_strengths() {
    static const Numeric kZero{true, *Decimal::parse("0"), 0.0};
    static const Numeric kOne{true, *Decimal::parse("1"), 1.0};
    for (const auto& t : graph_.match({std::nullopt, prop("hasAnnotationStrength"), std::nullopt})) {
      auto value = numeric_value(t.object);
      if (!value) {
        add(Severity::kError, code::kStrengthRange, t.subject,
            "annotation strength " + show(t.object) + " is not a numeric literal");
        continue;
      }
      auto low = compare_numeric(*value, kZero);
      auto high = compare_numeric(*value, kOne);
      if (low == std::partial_ordering::less || high == std::partial_ordering::greater ||
          low == std::partial_ordering::unordered) {
        add(Severity::kError, code::kStrengthRange, t.subject,
            "annotation strength " + t.object.value() + " is outside [0, 1]");
      }
    }
  }

  void check_dates() {
    for (const auto& t : graph_.match({std::nullopt, prop("onDate"), std::nullopt})) {
      const Term& o = t.object;
      if (!o.is_literal()) {
        add(Severity::kError, code::kDateForm, t.subject, "onDate value " + show(o) + " is not a literal");
        continue;
      }
      if (o.datatype() == iri::kXsdDate && is_valid_date_lexical(o.value())) continue;
      bool parses = date_value(o).has_value() || is_valid_date_lexical(o.value());
      if (parses) {
        add(Severity::kWarning, code::kDateForm, t.subject,
            "onDate value \"" + o.value() + "\" is a date but is typed <" + o.datatype() + ">, not xsd:date");
      } else {
        add(Severity::kError, code::kDateForm, t.subject,
            "onDate value \"" + o.value() + "\" is not a valid xsd:date");
      }
    }
  }

  void check_annotations() {
    const std::string caption_class = schema_.iri("ImageCaptionAnnotation");
    const Term comment = Term::iri(iri::kRdfsComment);
    for (const auto& p : schema_.properties()) {
      if (!p.required) continue;
      const Term predicate = Term::iri(p.iri);
      for (const auto& cls : p.domain) {
        for (const auto& node : instances_of(cls)) {
          if (graph_.count({node, predicate, std::nullopt}) > 0) continue;
          if (p.iri == schema_.iri("annotationWithLexicalEntry") && is_instance_of(node, caption_class) &&
              graph_.count({node, comment, std::nullopt}) > 0) {
            continue;
          }
          add(Severity::kError, code::kAnnotationShape, node,
              "annotation has no " + local_name(predicate) + " value");
        }
      }
    }
  }

  void check_situations() {
    const Term involves = prop("involvesAnnotation");
    for (const auto& node : instances_of(schema_.iri("AnnotationSituation"))) {
      if (graph_.count({node, involves, std::nullopt}) == 0) {
        add(Severity::kWarning, code::kSituationShape, node, "situation involves no annotation");
      }
    }
    const std::string description = schema_.iri("AnnotationDescription");
    for (const auto& t : graph_.match({std::nullopt, prop("satisfies"), std::nullopt})) {
      if (!is_instance_of(t.object, description)) {
        add(Severity::kError, code::kSituationShape, t.subject,
            "satisfies target " + show(t.object) + " is not an AnnotationDescription");
      }
    }
  }

  void check_dangling() {
    for (auto local : {"involvesAnnotator", "involvesDataset", "atPlace"}) {
      for (const auto& t : graph_.match({std::nullopt, prop(local), std::nullopt})) {
        if (t.object.is_literal()) {
          add(Severity::kError, code::kDanglingRef, t.subject,
              std::string(local) + " points at literal " + show(t.object) + " instead of a node");
        }
      }
    }
  }

  void check_domain_range() {
    // Properties with dedicated checks are skipped for RANGE.
    static const std::set<std::string> kOwnCheck = {"hasAnnotationStrength", "onDate", "hasCoordinate",
                                                    "involvesAnnotator", "involvesDataset", "atPlace",
                                                    "satisfies"};
    for (const auto& p : schema_.properties()) {
      const Term predicate = Term::iri(p.iri);
      const std::string name = local_name(predicate);
      const bool own_range = kOwnCheck.count(name) != 0;
      for (const auto& t : graph_.match({std::nullopt, predicate, std::nullopt})) {
        if (!p.domain.empty() && is_typed(t.subject)) {
          bool ok = std::any_of(p.domain.begin(), p.domain.end(),
                                [&](const std::string& d) { return is_instance_of(t.subject, d); });
          if (!ok) {
            add(Severity::kWarning, code::kDomain, t.subject,
                "subject of " + name + " is not typed with its domain " + Term::iri(*p.domain.begin()).to_string());
          }
        }
        if (own_range) continue;
        switch (p.range) {
          case RangeKind::kResource:
            if (t.object.is_literal()) {
              add(Severity::kWarning, code::kRange, t.subject,
                  name + " expects a node but has literal " + show(t.object));
            } else if (!p.range_class.empty() && is_typed(t.object) && !is_instance_of(t.object, p.range_class)) {
              add(Severity::kWarning, code::kRange, t.subject,
                  name + " target " + show(t.object) + " is not typed <" + p.range_class + ">");
            }
            break;
          case RangeKind::kLiteral:
            if (!t.object.is_literal()) {
              add(Severity::kWarning, code::kRange, t.subject,
                  name + " expects a literal but has " + show(t.object));
            } else if (!p.range_datatype.empty() && t.object.datatype() != p.range_datatype) {
              add(Severity::kWarning, code::kRange, t.subject,
                  name + " literal is typed <" + t.object.datatype() + ">, expected <" + p.range_datatype + ">");
            }
            break;
          case RangeKind::kAny:
            break;
        }
      }
    }
  }

  void check_coordinates() {
    static const std::regex kBox(R"(\s*\d+(\.\d+)?\s*(,\s*\d+(\.\d+)?\s*){3})");
    for (const auto& t : graph_.match({std::nullopt, prop("hasCoordinate"), std::nullopt})) {
      if (!t.object.is_literal() || !std::regex_match(t.object.value(), kBox)) {
        add(Severity::kWarning, code::kCoordinateForm, t.subject,
            "hasCoordinate value " + show(t.object) + " is not of the form \"x,y,w,h\"");
      }
    }
  }

  const Graph& graph_;
  const OntologySchema& schema_;
  Term rdf_type_;
  std::map<Term, std::set<std::string>, TermLess> types_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const Graph& graph, const OntologySchema& schema) {
  return Validator(graph, schema).run();
}

}  // namespace situkg

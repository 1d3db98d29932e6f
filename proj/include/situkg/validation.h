#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "situkg/graph.h"
#include "situkg/schema.h"

namespace situkg {

enum class Severity { kError, kWarning };

std::string_view severity_name(Severity severity);  // "ERROR" / "WARNING"

/// Finding codes.
namespace code {
inline constexpr std::string_view kStrengthRange = "STRENGTH_RANGE";
inline constexpr std::string_view kDateForm = "DATE_FORM";
inline constexpr std::string_view kAnnotationShape = "ANNOTATION_SHAPE";
inline constexpr std::string_view kSituationShape = "SITUATION_SHAPE";
inline constexpr std::string_view kDanglingRef = "DANGLING_REF";
inline constexpr std::string_view kDomain = "DOMAIN";
inline constexpr std::string_view kRange = "RANGE";
inline constexpr std::string_view kCoordinateForm = "COORDINATE_FORM";
}  // namespace code

struct Finding {
  Severity severity = Severity::kError;
  std::string code;
  Term focus;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  /// Sorted by focus node, then code, then message.
  std::vector<Finding> findings;

  bool empty() const noexcept { return findings.empty(); }
  std::size_t error_count() const;
  std::size_t warning_count() const;
  /// Number of findings carrying `code` (any severity).
  std::size_t count(std::string_view code) const;

  /// One `SEVERITY CODE <node> - message` line per finding.
  std::string to_text() const;
  /// {"errors": n, "warnings": m, "findings": [{severity, code, node, message}, ...]}
  std::string to_json() const;
};

/// Checks `graph` against the constraints derived from `schema`:
///
///   STRENGTH_RANGE   error    hasAnnotationStrength not numeric or outside [0, 1]
///   DATE_FORM        error    onDate is not a date; warning when it is a date
///                             written with another datatype
///   ANNOTATION_SHAPE error    an Annotation lacks a required property
///   SITUATION_SHAPE  warning  a situation involves no annotation;
///                    error    a satisfies target is not an AnnotationDescription
///   DANGLING_REF     error    involvesAnnotator / involvesDataset / atPlace
///                             points at a literal
///   DOMAIN, RANGE    warning  typed nodes inconsistent with a declaration
///   COORDINATE_FORM  warning  hasCoordinate is not "x,y,w,h"
///
/// Class membership follows the schema's subclass closure, so the result is
/// the same whether or not superclass types were materialized. An
/// ImageCaptionAnnotation that carries an rdfs:comment caption satisfies the
/// lexical-entry requirement through that comment.
ValidationReport validate(const Graph& graph, const OntologySchema& schema);

}  // namespace situkg

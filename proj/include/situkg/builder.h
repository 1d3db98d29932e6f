#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "situkg/error.h"
#include "situkg/graph.h"
#include "situkg/schema.h"

namespace situkg {

struct AnnotatorInfo {
  enum class Kind { kArtificial, kHumanIndividual, kHumanCommunity };

  Kind kind = Kind::kArtificial;
  std::string id;
  std::optional<std::string> architecture;        // artificial only
  std::optional<std::string> pretrained_dataset;  // artificial only
  /// Human annotators only. Keys: political_affiliation,
  /// religious_affiliation, indigenous_affiliation, country_of_upbringing.
  /// Values are local names of the attribute nodes.
  std::map<std::string, std::string> demographics;

  friend bool operator==(const AnnotatorInfo&, const AnnotatorInfo&) = default;
};

/// One labeling act and the situation it happened in. Identifiers are local
/// names in the schema namespace.
struct AnnotationEvent {
  std::string entity_id;
  std::string entity_type = "Image";
  std::string label;
  std::string role;
  std::optional<std::string> concept_iri;
  std::string strength;  // lexical form, kept exactly
  std::string situation_id;
  std::string situation_type;
  std::string date;  // YYYY-MM-DD
  std::string place;
  std::string dataset;
  std::optional<std::string> detection_threshold;
  std::optional<std::string> remuneration_scheme;
  std::string description_id;
  std::optional<std::string> description_comment;
  AnnotatorInfo annotator;

  friend bool operator==(const AnnotationEvent&, const AnnotationEvent&) = default;
};

/// An event violates its invariants (bad identifier, strength, date or type).
class EventError : public Error {
 public:
  using Error::Error;
};

/// Two events disagree about a node that they share.
class ConflictError : public Error {
 public:
  ConflictError(Term node, const std::string& message) : Error(message), node_(std::move(node)) {}
  const Term& node() const noexcept { return node_; }

 private:
  Term node_;
};

/// Problems found while reading a JSON Lines event file, by 1-based line.
class EventFileError : public Error {
 public:
  explicit EventFileError(std::vector<std::pair<std::size_t, std::string>> problems);
  const std::vector<std::pair<std::size_t, std::string>>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::pair<std::size_t, std::string>> problems_;
};

/// Parses one JSON event object. Unknown fields and wrong types are errors.
/// `strength` may be a JSON string (kept verbatim) or number.
AnnotationEvent parse_event(std::string_view json_text);

/// Parses a JSON Lines document, skipping blank lines. With a schema, each
/// event is also checked with check_event. Every bad line is reported in one
/// EventFileError.
std::vector<AnnotationEvent> parse_event_lines(std::string_view text, const OntologySchema* schema = nullptr);

/// Name of the lexical-entry node for `label`: "le_" + label with spaces
/// replaced by '_'.
std::string lexical_entry_name(std::string_view label);

/// Name of the annotation node: entity id (minus a leading "<dataset>_")
/// + "_" + situation id.
std::string annotation_node_name(const AnnotationEvent& event);

/// Checks the event invariants; throws EventError.
void check_event(const AnnotationEvent& event, const OntologySchema& schema);

/// Triples for one event, sorted with compare_triples. Both halves of every
/// inverse pair are emitted. An event whose annotation class is an
/// ImageCaptionAnnotation carries its label as an rdfs:comment on the
/// annotation instead of a lexical entry.
std::vector<Triple> build_triples(const AnnotationEvent& event, const OntologySchema& schema);
std::vector<Triple> build_triples(const AnnotationEvent& event);

/// Union of the events' triples, with the standard prefixes for the schema
/// namespace. Throws ConflictError when events give one node different values
/// for a single-valued property (for example one situation with two dates).
Graph build_graph(std::span<const AnnotationEvent> events, const OntologySchema& schema);
Graph build_graph(std::span<const AnnotationEvent> events);

}  // namespace situkg

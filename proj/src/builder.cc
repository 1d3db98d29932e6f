#include "situkg/builder.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "situkg/literal.h"

namespace situkg {

using nlohmann::json;

namespace {

std::string describe_problems(const std::vector<std::pair<std::size_t, std::string>>& problems) {
  std::string out;
  for (const auto& [line, message] : problems) {
    if (!out.empty()) out += "\n";
    out += "line " + std::to_string(line) + ": " + message;
  }
  return out.empty() ? std::string("invalid event file") : out;
}

const std::set<std::string>& event_fields() {
  static const std::set<std::string> kFields = {
      "entity_id", "entity_type", "label",   "role",           "concept_iri",
      "strength",  "situation_id", "situation_type", "date",   "place",
      "dataset",   "detection_threshold", "remuneration_scheme", "description_id",
      "description_comment", "annotator"};
  return kFields;
}

const std::map<std::string, std::pair<std::string, std::string>>& demographic_properties() {
  // key -> (individual property, community property)
  static const std::map<std::string, std::pair<std::string, std::string>> kProps = {
      {"political_affiliation", {"hasPoliticalAffiliation", "hasPredominantPoliticalAffiliation"}},
      {"religious_affiliation", {"hasReligiousAffiliation", "hasPredominantReligiousAffiliation"}},
      {"indigenous_affiliation", {"hasIndigenousAffiliation", "hasPredominantIndigenousAffiliation"}},
      {"country_of_upbringing", {"hasCountryOfUpbringing", "hasPredominantCountryOfUpbringing"}},
  };
  return kProps;
}

std::string required_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) throw EventError(std::string("missing field '") + key + "'");
  if (!it->is_string()) throw EventError(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw EventError(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

AnnotatorInfo parse_annotator(const json& obj) {
  if (!obj.is_object()) throw EventError("field 'annotator' must be an object");
  static const std::set<std::string> kKeys = {"kind", "id", "architecture", "pretrained_dataset", "demographics"};
  for (const auto& [key, value] : obj.items()) {
    if (kKeys.count(key) == 0) throw EventError("unknown annotator field '" + key + "'");
  }
  AnnotatorInfo a;
  const std::string kind = required_string(obj, "kind");
  if (kind == "artificial") {
    a.kind = AnnotatorInfo::Kind::kArtificial;
  } else if (kind == "human_individual") {
    a.kind = AnnotatorInfo::Kind::kHumanIndividual;
  } else if (kind == "human_community") {
    a.kind = AnnotatorInfo::Kind::kHumanCommunity;
  } else {
    throw EventError("annotator kind must be artificial, human_individual or human_community, got '" + kind + "'");
  }
  a.id = required_string(obj, "id");
  a.architecture = optional_string(obj, "architecture");
  a.pretrained_dataset = optional_string(obj, "pretrained_dataset");
  if (auto it = obj.find("demographics"); it != obj.end() && !it->is_null()) {
    if (!it->is_object()) throw EventError("annotator 'demographics' must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) throw EventError("demographic '" + key + "' must be a string");
      a.demographics[key] = value.get<std::string>();
    }
  }
  return a;
}

bool is_plain_decimal(std::string_view s) {
  return Decimal::parse(s).has_value();
}

Term strength_literal(const std::string& lexical) {
  if (is_plain_decimal(lexical)) return Term::literal(lexical, iri::kXsdDecimal);
  return Term::literal(lexical, iri::kXsdDouble);
}

void require_local(std::string_view what, const std::string& value) {
  if (value.empty() || !is_valid_local_name(value)) {
    throw EventError(std::string(what) + " '" + value +
                     "' is not a valid identifier (letters, digits, '_' and '-', not starting with '-')");
  }
}

std::string annotation_class(const AnnotationEvent& e, const OntologySchema& schema) {
  constexpr std::string_view kSuffix = "Situation";
  std::string_view type = e.situation_type;
  if (type.size() > kSuffix.size() && type.substr(type.size() - kSuffix.size()) == kSuffix) {
    std::string candidate = schema.iri(type.substr(0, type.size() - kSuffix.size()));
    if (schema.is_subclass_of(candidate, schema.iri("Annotation"))) return candidate;
  }
  return schema.iri("Annotation");
}

// Predicates whose subject may legitimately carry several values when events
// are merged.
bool is_multi_valued(const std::string& local) {
  static const std::set<std::string> kMulti = {"involvesAnnotation", "isInvolvedInAnnotationSituation",
                                               "isAnnotatedWithLexicalEntry", "hasImageLabelTypedBy",
                                               "involvesAnnotatedEntity", "defines"};
  return kMulti.count(local) != 0;
}

}  // namespace

EventFileError::EventFileError(std::vector<std::pair<std::size_t, std::string>> problems)
    : Error(describe_problems(problems)), problems_(std::move(problems)) {}

AnnotationEvent parse_event(std::string_view json_text) {
  json obj;
  try {
    obj = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw EventError(std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) throw EventError("event must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (event_fields().count(key) == 0) throw EventError("unknown field '" + key + "'");
  }
  AnnotationEvent e;
  e.entity_id = required_string(obj, "entity_id");
  if (auto t = optional_string(obj, "entity_type")) e.entity_type = *t;
  e.label = required_string(obj, "label");
  e.role = required_string(obj, "role");
  e.concept_iri = optional_string(obj, "concept_iri");
  auto strength = obj.find("strength");
  if (strength == obj.end() || strength->is_null()) throw EventError("missing field 'strength'");
  if (strength->is_string()) {
    e.strength = strength->get<std::string>();
  } else if (strength->is_number()) {
    e.strength = strength->dump();
  } else {
    throw EventError("field 'strength' must be a number or a string");
  }
  e.situation_id = required_string(obj, "situation_id");
  e.situation_type = required_string(obj, "situation_type");
  e.date = required_string(obj, "date");
  e.place = required_string(obj, "place");
  e.dataset = required_string(obj, "dataset");
  e.detection_threshold = optional_string(obj, "detection_threshold");
  e.remuneration_scheme = optional_string(obj, "remuneration_scheme");
  e.description_id = required_string(obj, "description_id");
  e.description_comment = optional_string(obj, "description_comment");
  auto annotator = obj.find("annotator");
  if (annotator == obj.end() || annotator->is_null()) throw EventError("missing field 'annotator'");
  e.annotator = parse_annotator(*annotator);
  return e;
}

std::vector<AnnotationEvent> parse_event_lines(std::string_view text, const OntologySchema* schema) {
  std::vector<AnnotationEvent> events;
  std::vector<std::pair<std::size_t, std::string>> problems;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      AnnotationEvent event = parse_event(line);
      if (schema != nullptr) check_event(event, *schema);
      events.push_back(std::move(event));
    } catch (const EventError& e) {
      problems.emplace_back(line_no, e.what());
    }
  }
  if (!problems.empty()) throw EventFileError(std::move(problems));
  return events;
}

std::string lexical_entry_name(std::string_view label) {
  std::string name = "le_";
  for (char c : label) name += c == ' ' ? '_' : c;
  return name;
}

std::string annotation_node_name(const AnnotationEvent& event) {
  std::string_view entity = event.entity_id;
  const std::string prefix = event.dataset + "_";
  if (entity.size() > prefix.size() && entity.substr(0, prefix.size()) == prefix) {
    entity.remove_prefix(prefix.size());
  }
  return std::string(entity) + "_" + event.situation_id;
}

void check_event(const AnnotationEvent& e, const OntologySchema& schema) {
  require_local("entity_id", e.entity_id);
  require_local("entity_type", e.entity_type);
  require_local("role", e.role);
  require_local("situation_id", e.situation_id);
  require_local("situation_type", e.situation_type);
  require_local("place", e.place);
  require_local("dataset", e.dataset);
  require_local("description_id", e.description_id);
  require_local("annotator id", e.annotator.id);
  if (e.remuneration_scheme) require_local("remuneration_scheme", *e.remuneration_scheme);
  if (e.annotator.architecture) require_local("architecture", *e.annotator.architecture);
  if (e.annotator.pretrained_dataset) require_local("pretrained_dataset", *e.annotator.pretrained_dataset);

  if (!schema.is_subclass_of(schema.iri(e.entity_type), schema.iri("AnnotatedEntity"))) {
    throw EventError("entity_type '" + e.entity_type + "' is not an annotated-entity class of the schema");
  }
  if (!schema.is_subclass_of(schema.iri(e.situation_type), schema.iri("AnnotationSituation"))) {
    throw EventError("situation_type '" + e.situation_type + "' is not an annotation-situation class of the schema");
  }
  if (e.label.empty()) throw EventError("label must not be empty");
  if (e.label.find_first_of("\r\n") != std::string::npos) throw EventError("label must be a single line");

  auto strength = numeric_value(strength_literal(e.strength));
  if (!strength) throw EventError("strength '" + e.strength + "' is not a number");
  const Numeric zero{true, *Decimal::parse("0"), 0.0};
  const Numeric one{true, *Decimal::parse("1"), 1.0};
  if (compare_numeric(*strength, zero) == std::partial_ordering::less ||
      compare_numeric(*strength, one) == std::partial_ordering::greater ||
      compare_numeric(*strength, zero) == std::partial_ordering::unordered) {
    throw EventError("strength " + e.strength + " is outside [0, 1]");
  }

  if (!is_valid_date_lexical(e.date) || e.date.size() != 10) {
    throw EventError("date '" + e.date + "' is not a YYYY-MM-DD date");
  }
  if (e.concept_iri) {
    try {
      Term::iri(*e.concept_iri);
    } catch (const StructuralError&) {
      throw EventError("concept_iri '" + *e.concept_iri + "' is not an absolute IRI");
    }
  }

  const bool artificial = e.annotator.kind == AnnotatorInfo::Kind::kArtificial;
  if (artificial && !e.annotator.demographics.empty()) {
    throw EventError("artificial annotators carry no demographics");
  }
  if (!artificial && (e.annotator.architecture || e.annotator.pretrained_dataset)) {
    throw EventError("human annotators carry no architecture or pretraining dataset");
  }
  for (const auto& [key, value] : e.annotator.demographics) {
    if (demographic_properties().count(key) == 0) throw EventError("unknown demographic attribute '" + key + "'");
    require_local(key, value);
  }
  if (!schema.is_subclass_of(annotation_class(e, schema), schema.iri("ImageCaptionAnnotation")) &&
      !is_valid_local_name(lexical_entry_name(e.label))) {
    throw EventError("label '" + e.label + "' cannot name a lexical entry (only letters, digits, spaces, '_' and '-')");
  }
}

std::vector<Triple> build_triples(const AnnotationEvent& e, const OntologySchema& schema) {
  check_event(e, schema);
  auto node = [&](std::string_view local) { return schema.term(local); };
  const Term type = Term::iri(iri::kRdfType);

  const Term entity = node(e.entity_id);
  const Term annotation = node(annotation_node_name(e));
  const Term situation = node(e.situation_id);
  const Term description = node(e.description_id);
  const Term annotator = node(e.annotator.id);
  const Term role = node(e.role);
  const std::string ann_class = annotation_class(e, schema);
  const bool caption = schema.is_subclass_of(ann_class, schema.iri("ImageCaptionAnnotation"));
  const bool image = schema.is_subclass_of(schema.iri(e.entity_type), schema.iri("Image"));

  std::vector<Triple> out;
  auto add = [&](const Term& s, const Term& p, const Term& o) { out.push_back(make_triple(s, p, o)); };

  // annotation
  add(annotation, type, Term::iri(ann_class));
  add(annotation, node("aboutAnnotatedEntity"), entity);
  if (caption) {
    add(annotation, Term::iri(iri::kRdfsComment), Term::literal(e.label));
  } else {
    const Term le = node(lexical_entry_name(e.label));
    add(annotation, node("annotationWithLexicalEntry"), le);
    add(le, Term::iri(iri::kRdfsLabel), Term::literal(e.label));
    if (image) add(entity, node("isAnnotatedWithLexicalEntry"), le);
  }
  add(annotation, node("hasAnnotationStrength"), strength_literal(e.strength));
  add(annotation, node("isClassifiedBy"), role);
  if (e.concept_iri) {
    add(annotation, node("typedByConcept"), Term::iri(*e.concept_iri));
    if (image) add(entity, node("hasImageLabelTypedBy"), Term::iri(*e.concept_iri));
  }
  add(annotation, node("isAnnotationInvolvedInSituation"), situation);

  // situation
  add(situation, type, node(e.situation_type));
  add(situation, node("involvesAnnotatedEntity"), entity);
  add(situation, node("atPlace"), node(e.place));
  add(situation, node("onDate"), Term::literal(e.date, iri::kXsdDate));
  add(situation, node("involvesAnnotator"), annotator);
  add(situation, node("involvesDataset"), node(e.dataset));
  add(situation, node("satisfies"), description);
  add(situation, node("involvesAnnotation"), annotation);
  if (e.detection_threshold) add(situation, node("hasDetectionThreshold"), Term::literal(*e.detection_threshold));
  if (e.remuneration_scheme) add(situation, node("involvesRemunerationScheme"), node(*e.remuneration_scheme));

  // description
  const bool image_situation =
      schema.is_subclass_of(schema.iri(e.situation_type), schema.iri("ImageAnnotationSituation"));
  add(description, type, node(image_situation ? "ImageAnnotationDescription" : "AnnotationDescription"));
  add(description, node("defines"), role);
  if (e.description_comment) add(description, Term::iri(iri::kRdfsComment), Term::literal(*e.description_comment));

  // annotator
  switch (e.annotator.kind) {
    case AnnotatorInfo::Kind::kArtificial:
      add(annotator, type, node("ArtificialAnnotator"));
      if (e.annotator.architecture) add(annotator, node("hasModelArchitecture"), node(*e.annotator.architecture));
      if (e.annotator.pretrained_dataset) {
        add(annotator, node("pretrainedOnDataset"), node(*e.annotator.pretrained_dataset));
      }
      break;
    case AnnotatorInfo::Kind::kHumanIndividual:
    case AnnotatorInfo::Kind::kHumanCommunity: {
      const bool community = e.annotator.kind == AnnotatorInfo::Kind::kHumanCommunity;
      add(annotator, type, node(community ? "HumanAnnotatorCommunity" : "IndividualHumanAnnotator"));
      for (const auto& [key, value] : e.annotator.demographics) {
        const auto& [individual, predominant] = demographic_properties().at(key);
        add(annotator, node(community ? predominant : individual), node(value));
      }
      break;
    }
  }

  // entity
  add(entity, type, node(e.entity_type));
  add(entity, node("isInvolvedInAnnotationSituation"), situation);

  std::sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) { return compare_triples(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Triple> build_triples(const AnnotationEvent& event) { return build_triples(event, builtin_schema()); }

Graph build_graph(std::span<const AnnotationEvent> events, const OntologySchema& schema) {
  Graph graph;
  graph.prefixes() = PrefixMap::standard(schema.base_namespace());
  auto key_less = [](const std::pair<Term, Term>& a, const std::pair<Term, Term>& b) {
    if (auto c = compare_terms(a.first, b.first); c != 0) return c < 0;
    return compare_terms(a.second, b.second) < 0;
  };
  std::map<std::pair<Term, Term>, Term, decltype(key_less)> seen(key_less);
  const Term type = Term::iri(iri::kRdfType);
  for (const auto& event : events) {
    for (const auto& t : build_triples(event, schema)) {
      if (!is_multi_valued(local_name(t.predicate))) {
        auto [it, inserted] = seen.try_emplace({t.subject, t.predicate}, t.object);
        if (!inserted && it->second != t.object) {
          throw ConflictError(t.subject, "conflicting values for " + local_name(t.predicate) + " of node " +
                                             local_name(t.subject) + ": " + it->second.to_string() + " vs " +
                                             t.object.to_string() + " (event for situation " + event.situation_id +
                                             ")");
        }
      }
      graph.insert(t);
    }
  }
  return graph;
}

Graph build_graph(std::span<const AnnotationEvent> events) { return build_graph(events, builtin_schema()); }

}  // namespace situkg

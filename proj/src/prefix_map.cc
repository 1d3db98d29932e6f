#include "situkg/prefix_map.h"

#include <cctype>

#include "situkg/error.h"

namespace situkg {
namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

}  // namespace

bool is_valid_local_name(std::string_view local) {
  if (!local.empty() && local.front() == '-') return false;
  for (char c : local) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

bool is_valid_prefix_label(std::string_view prefix) {
  if (prefix.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(prefix.front()))) return false;
  for (char c : prefix) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

PrefixMap PrefixMap::standard(std::string_view base) {
  PrefixMap m;
  m.declare("", std::string(base));
  m.declare("rdf", std::string(ns::kRdf));
  m.declare("rdfs", std::string(ns::kRdfs));
  m.declare("xsd", std::string(ns::kXsd));
  m.declare("conceptnet", std::string(ns::kConceptNet));
  m.declare("dul", std::string(ns::kDul));
  return m;
}

void PrefixMap::declare(std::string prefix, std::string namespace_iri) {
  entries_[std::move(prefix)] = std::move(namespace_iri);
}

void PrefixMap::merge(const PrefixMap& other) {
  for (const auto& [p, n] : other.entries_) entries_[p] = n;
}

bool PrefixMap::contains(std::string_view prefix) const { return entries_.find(prefix) != entries_.end(); }

std::optional<std::string> PrefixMap::namespace_of(std::string_view prefix) const {
  auto it = entries_.find(prefix);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Term PrefixMap::expand(std::string_view token) const {
  if (token == "a") return Term::iri(iri::kRdfType);
  auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw Error("not a prefixed name: '" + std::string(token) + "'");
  }
  auto prefix = token.substr(0, colon);
  auto it = entries_.find(prefix);
  if (it == entries_.end()) throw UnknownPrefixError(std::string(prefix));
  return Term::iri(it->second + std::string(token.substr(colon + 1)));
}

std::optional<std::string> PrefixMap::shorten(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : entries_) {
    const auto& ns = entry.second;
    if (ns.empty() || iri.size() < ns.size() || iri.substr(0, ns.size()) != ns) continue;
    if (!is_valid_local_name(iri.substr(ns.size()))) continue;
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

Term expand_curie(const PrefixMap& prefixes, std::string_view token) {
  return prefixes.expand(token);
}

}  // namespace situkg

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "situkg/term.h"

namespace situkg {

/// Prefix label (possibly empty) to namespace IRI.
class PrefixMap {
 public:
  PrefixMap() = default;

  /// rdf, rdfs, xsd, conceptnet, dul and the empty prefix bound to `base`.
  static PrefixMap standard(std::string_view base = ns::kSituAnnotate);

  void declare(std::string prefix, std::string namespace_iri);
  /// Adds the bindings of `other`; existing labels are overridden.
  void merge(const PrefixMap& other);

  bool contains(std::string_view prefix) const;
  std::optional<std::string> namespace_of(std::string_view prefix) const;

  /// Expands `prefix:local` or the keyword `a`. Throws UnknownPrefixError.
  Term expand(std::string_view token) const;

  /// `prefix:local` for the longest matching namespace whose remainder is a
  /// valid local name, or nullopt.
  std::optional<std::string> shorten(std::string_view iri) const;

  const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
    return entries_;
  }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

/// Free-function form of PrefixMap::expand.
Term expand_curie(const PrefixMap& prefixes, std::string_view token);

/// Local names accepted by the Turtle and query parsers: ASCII letters,
/// digits, '_' and '-', not starting with '-'. May be empty.
bool is_valid_local_name(std::string_view local);

/// Prefix labels: letters, digits, '_' and '-', starting with a letter. May be empty.
bool is_valid_prefix_label(std::string_view prefix);

}  // namespace situkg

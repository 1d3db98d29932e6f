#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "situkg/prefix_map.h"
#include "situkg/term.h"

namespace situkg {

/// Triple pattern for Graph::match; nullopt positions are wildcards.
struct MatchPattern {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;
};

/// In-memory triple set with subject, (predicate, object) and object indexes.
///
/// Triples keep insertion order, and every index lists triple positions in
/// insertion order, so match() results are deterministic. Graphs are built by a
/// single writer and then shared read-only.
class Graph {
 public:
  Graph() = default;

  /// Inserts `triple`; returns false when it was already present.
  /// Throws StructuralError for a literal subject or non-IRI predicate.
  bool insert(const Triple& triple);
  bool insert(Term subject, Term predicate, Term object);

  /// Inserts every triple of `other` and merges its prefixes.
  std::size_t insert_all(const Graph& other);

  bool contains(const Triple& triple) const;
  std::vector<Triple> match(const MatchPattern& pattern) const;
  /// Number of matches without materializing them.
  std::size_t count(const MatchPattern& pattern) const;

  /// Objects of (subject, predicate, *), in insertion order.
  std::vector<Term> objects(const Term& subject, const Term& predicate) const;
  /// Subjects of (*, predicate, object), in insertion order.
  std::vector<Term> subjects(const Term& predicate, const Term& object) const;

  std::span<const Triple> triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  PrefixMap& prefixes() noexcept { return prefixes_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }

  /// Set equality over triples; prefixes and insertion order are ignored.
  bool same_triples(const Graph& other) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Term, Term>& p) const noexcept;
  };

  template <typename Visitor>
  void visit_matches(const MatchPattern& pattern, Visitor&& visit) const;

  std::vector<Triple> triples_;
  std::unordered_map<Triple, std::size_t> positions_;
  std::unordered_map<Term, std::vector<std::size_t>> by_subject_;
  std::unordered_map<std::pair<Term, Term>, std::vector<std::size_t>, PairHash> by_predicate_object_;
  std::unordered_map<Term, std::vector<std::size_t>> by_object_;
  PrefixMap prefixes_;
};

}  // namespace situkg

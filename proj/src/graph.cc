#include "situkg/graph.h"

namespace situkg {
namespace {

bool matches(const Triple& t, const MatchPattern& p) {
  return (!p.subject || t.subject == *p.subject) && (!p.predicate || t.predicate == *p.predicate) &&
         (!p.object || t.object == *p.object);
}

}  // namespace

std::size_t Graph::PairHash::operator()(const std::pair<Term, Term>& p) const noexcept {
  std::hash<Term> h;
  std::size_t a = h(p.first);
  return a ^ (h(p.second) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

bool Graph::insert(const Triple& triple) {
  check_triple(triple);
  auto [it, inserted] = positions_.try_emplace(triple, triples_.size());
  if (!inserted) return false;
  std::size_t pos = triples_.size();
  triples_.push_back(triple);
  by_subject_[triple.subject].push_back(pos);
  by_predicate_object_[{triple.predicate, triple.object}].push_back(pos);
  by_object_[triple.object].push_back(pos);
  return true;
}

bool Graph::insert(Term subject, Term predicate, Term object) {
  return insert(Triple{std::move(subject), std::move(predicate), std::move(object)});
}

std::size_t Graph::insert_all(const Graph& other) {
  std::size_t added = 0;
  for (const auto& t : other.triples_) added += insert(t) ? 1 : 0;
  prefixes_.merge(other.prefixes_);
  return added;
}

bool Graph::contains(const Triple& triple) const { return positions_.count(triple) != 0; }

template <typename Visitor>
void Graph::visit_matches(const MatchPattern& p, Visitor&& visit) const {
  const std::vector<std::size_t>* candidates = nullptr;
  static const std::vector<std::size_t> kNone;
  if (p.subject) {
    if (p.predicate && p.object) {
      auto it = positions_.find(Triple{*p.subject, *p.predicate, *p.object});
      if (it != positions_.end()) visit(triples_[it->second]);
      return;
    }
    auto it = by_subject_.find(*p.subject);
    candidates = it == by_subject_.end() ? &kNone : &it->second;
  } else if (p.predicate && p.object) {
    auto it = by_predicate_object_.find({*p.predicate, *p.object});
    candidates = it == by_predicate_object_.end() ? &kNone : &it->second;
  } else if (p.object) {
    auto it = by_object_.find(*p.object);
    candidates = it == by_object_.end() ? &kNone : &it->second;
  }

  if (candidates == nullptr) {
    for (const auto& t : triples_) {
      if (matches(t, p)) visit(t);
    }
    return;
  }
  for (std::size_t pos : *candidates) {
    const auto& t = triples_[pos];
    if (matches(t, p)) visit(t);
  }
}

std::vector<Triple> Graph::match(const MatchPattern& pattern) const {
  std::vector<Triple> out;
  visit_matches(pattern, [&](const Triple& t) { out.push_back(t); });
  return out;
}

std::size_t Graph::count(const MatchPattern& pattern) const {
  std::size_t n = 0;
  visit_matches(pattern, [&](const Triple&) { ++n; });
  return n;
}

std::vector<Term> Graph::objects(const Term& subject, const Term& predicate) const {
  std::vector<Term> out;
  visit_matches({subject, predicate, std::nullopt}, [&](const Triple& t) { out.push_back(t.object); });
  return out;
}

std::vector<Term> Graph::subjects(const Term& predicate, const Term& object) const {
  std::vector<Term> out;
  visit_matches({std::nullopt, predicate, object}, [&](const Triple& t) { out.push_back(t.subject); });
  return out;
}

bool Graph::same_triples(const Graph& other) const {
  if (size() != other.size()) return false;
  for (const auto& t : triples_) {
    if (!other.contains(t)) return false;
  }
  return true;
}

}  // namespace situkg

#include "setfam/family.hpp"

#include <algorithm>
#include <set>

namespace setfam {

SetFamily SetFamily::create(GroundSet ground, std::vector<MemberSet> members,
                            bool reject_duplicates) {
  if (ground.size > MemberBits::kMaxBits)
    throw GuardExceeded("ground-width",
                        "ground set of size " + std::to_string(ground.size) +
                            " exceeds the fixed bit-vector width of 128");
  MemberBits allowed;
  for (unsigned e = 0; e < ground.size; ++e) allowed.set(e);
  for (const auto& m : members) {
    if ((m.bits & allowed) != m.bits)
      throw FamilyParseError(ParseErrorCode::OutOfRangeElement,
                             "member contains an element outside the ground set");
    if (m.cardinality != m.bits.count())
      throw std::logic_error("MemberSet cardinality cache out of sync");
  }
  std::sort(members.begin(), members.end());
  const auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end()) {
    if (reject_duplicates)
      throw FamilyParseError(ParseErrorCode::DuplicateSet, "duplicate member set");
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  SetFamily f;
  f.ground_ = ground;
  f.members_ = std::move(members);
  return f;
}

SetFamily SetFamily::from_sets(std::size_t ground_size,
                               const std::vector<std::vector<unsigned>>& sets,
                               bool reject_duplicates) {
  std::vector<MemberSet> members;
  members.reserve(sets.size());
  for (const auto& s : sets) {
    for (unsigned e : s)
      if (e >= ground_size)
        throw FamilyParseError(ParseErrorCode::OutOfRangeElement,
                               "element " + std::to_string(e) + " not in [0," +
                                   std::to_string(ground_size) + ")");
    members.push_back(MemberSet::from_elements(s));
  }
  return create(GroundSet{ground_size}, std::move(members), reject_duplicates);
}

std::optional<std::size_t> SetFamily::index_of(const MemberBits& bits) const {
  const MemberSet probe{bits, bits.count()};
  const auto it = std::lower_bound(members_.begin(), members_.end(), probe);
  if (it != members_.end() && it->bits == bits)
    return static_cast<std::size_t>(it - members_.begin());
  return std::nullopt;
}

SetFamily SetFamily::subfamily(const IndexBits& selected) const {
  std::vector<MemberSet> members;
  members.reserve(selected.count());
  selected.for_each([&](std::size_t i) { members.push_back(members_[i]); });
  SetFamily f;
  f.ground_ = ground_;
  f.members_ = std::move(members);  // a subsequence of a sorted list stays sorted
  f.element_labels_ = element_labels_;
  return f;
}

void SetFamily::set_element_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != ground_.size)
    throw std::invalid_argument("element label count must match the ground size");
  element_labels_ = std::move(labels);
}

bool t_intersects(const MemberSet& a, const MemberSet& b, unsigned t) {
  return static_cast<unsigned>(intersection_size(a.bits, b.bits)) >= t;
}

int alpha(const SetFamily& f) {
  if (f.empty()) throw std::domain_error("alpha undefined on empty family");
  int best = 0;
  for (const auto& m : f.members()) best = std::max(best, m.cardinality);
  return best;
}

ConflictGraph conflict_graph(const SetFamily& f, unsigned t) {
  const std::size_t m = f.size();
  ConflictGraph g;
  g.vertex_count = m;
  g.t = t;
  g.adjacency.assign(m, IndexBits(m));
  g.self_conflict = IndexBits(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (f.member(i).cardinality < static_cast<int>(t)) g.self_conflict.set(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!t_intersects(f.member(i), f.member(j), t)) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  }
  return g;
}

Decomposition decompose(const SetFamily& f, unsigned t) {
  const ConflictGraph g = conflict_graph(f, t);
  Decomposition d;
  d.t = t;
  d.plus_mask = IndexBits(f.size());
  d.minus_mask = IndexBits(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.adjacency[i].none())
      d.plus_mask.set(i);
    else
      d.minus_mask.set(i);
  }
  d.plus = f.subfamily(d.plus_mask);
  d.minus = f.subfamily(d.minus_mask);
  return d;
}

bool is_t_intersecting(const SetFamily& f, unsigned t) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!t_intersects(f.member(i), f.member(j), t)) return false;
  return true;
}

bool is_cross_t_intersecting(std::span<const SetFamily> tuple, unsigned t) {
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i].ground() != tuple[j].ground())
        throw std::invalid_argument("cross-t-intersection requires a common ground set");
      for (const auto& a : tuple[i].members())
        for (const auto& b : tuple[j].members())
          if (!t_intersects(a, b, t)) return false;
    }
  return true;
}

SetFamily union_family(std::span<const SetFamily> tuple) {
  if (tuple.empty()) return {};
  std::vector<MemberSet> members;
  for (const auto& fam : tuple) {
    if (fam.ground() != tuple.front().ground())
      throw std::invalid_argument("union_family requires a common ground set");
    members.insert(members.end(), fam.members().begin(), fam.members().end());
  }
  return SetFamily::create(tuple.front().ground(), std::move(members),
                           /*reject_duplicates=*/false);
}

}  // namespace setfam

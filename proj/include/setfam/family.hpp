#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setfam/bits.hpp"
#include "setfam/errors.hpp"

namespace setfam {

/// Ground set {0, ..., size-1}. size == 0 is allowed only for families whose
/// every member is empty (in practice: the empty family or {∅}).
struct GroundSet {
  std::size_t size = 0;
  bool operator==(const GroundSet&) const = default;
};

/// One member set of a family: its element bits plus the cached cardinality.
struct MemberSet {
  MemberBits bits;
  int cardinality = 0;

  static MemberSet from_bits(const MemberBits& b) { return {b, b.count()}; }
  static MemberSet from_elements(std::span<const unsigned> elems) {
    MemberBits b;
    for (unsigned e : elems) b.set(e);
    return from_bits(b);
  }

  bool operator==(const MemberSet& o) const { return bits == o.bits; }
  auto operator<=>(const MemberSet& o) const { return bits <=> o.bits; }
};

/// A finite family of distinct subsets of the ground set. Members are kept in
/// canonical ascending order of their bit encodings; every deterministic
/// witness and report in this library relies on that order. Optional
/// per-element labels record the flattening of structured universes
/// (pairs (x,y) and line-intersection points) back to human-readable form.
class SetFamily {
 public:
  SetFamily() = default;

  /// Builds a canonical family. Throws FamilyParseError(DuplicateSet) on
  /// duplicates when `reject_duplicates`, otherwise merges them. Throws on
  /// members exceeding the ground set or ground sets beyond 128 elements.
  static SetFamily create(GroundSet ground, std::vector<MemberSet> members,
                          bool reject_duplicates = true);

  /// Convenience for tests and generators: members given as element lists.
  static SetFamily from_sets(std::size_t ground_size,
                             const std::vector<std::vector<unsigned>>& sets,
                             bool reject_duplicates = true);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const MemberSet& member(std::size_t i) const { return members_[i]; }
  const std::vector<MemberSet>& members() const { return members_; }

  /// Index of the member with these bits, if present (binary search).
  std::optional<std::size_t> index_of(const MemberBits& bits) const;

  /// Subfamily selected by member indices (canonical order preserved).
  SetFamily subfamily(const IndexBits& selected) const;

  const std::vector<std::string>& element_labels() const { return element_labels_; }
  void set_element_labels(std::vector<std::string> labels);

  /// Equality ignores element labels: same ground size, same member list.
  bool operator==(const SetFamily& o) const {
    return ground_ == o.ground_ && members_ == o.members_;
  }

 private:
  GroundSet ground_;
  std::vector<MemberSet> members_;
  std::vector<std::string> element_labels_;
};

/// The partition of a family into its t-intersecting core (`plus`, the
/// members t-intersecting every other member) and the remainder (`minus`).
struct Decomposition {
  SetFamily plus;
  SetFamily minus;
  unsigned t = 1;
  /// Index masks of the two parts relative to the input family.
  IndexBits plus_mask;
  IndexBits minus_mask;
};

/// Graph on member indices with edges between pairs intersecting in fewer
/// than t elements; self_conflict flags members of size < t. All search
/// constraints (cross-t-intersection feasibility) live on this graph.
struct ConflictGraph {
  std::size_t vertex_count = 0;
  unsigned t = 1;
  std::vector<IndexBits> adjacency;  // symmetric, empty diagonal
  IndexBits self_conflict;

  std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
};

/// |a ∩ b| >= t. `a` may equal `b`, in which case this is |a| >= t.
bool t_intersects(const MemberSet& a, const MemberSet& b, unsigned t);

/// Size of a largest member. Errors on the empty family.
int alpha(const SetFamily& f);

/// The (A^{t,+}, A^{t,-}) partition. The plus condition quantifies over
/// members B != A only, so a set of size < t can belong to plus (e.g. in a
/// singleton family).
Decomposition decompose(const SetFamily& f, unsigned t);

ConflictGraph conflict_graph(const SetFamily& f, unsigned t);

/// True iff all distinct pairs t-intersect; empty and singleton families are
/// t-intersecting.
bool is_t_intersecting(const SetFamily& f, unsigned t);

/// True iff every set from one family t-intersects every set from any other
/// family. A set shared by two families must have size >= t.
bool is_cross_t_intersecting(std::span<const SetFamily> tuple, unsigned t);

/// Set-union of the members; duplicates merged, canonical order.
SetFamily union_family(std::span<const SetFamily> tuple);

namespace detail {
/// Count of members i in `mask` whose conflict row does not meet `mask`
/// (i.e. |A^{t,+}| of the subfamily `mask`). Shared by the enumeration
/// kernels in the solver modules.
inline std::size_t plus_count(const std::vector<IndexBits>& adj, const IndexBits& mask) {
  std::size_t plus = 0;
  mask.for_each([&](std::size_t i) {
    if (!adj[i].intersects(mask)) ++plus;
  });
  return plus;
}
}  // namespace detail

}  // namespace setfam

#pragma once

#include <cstddef>
#include <vector>

#include "setfam/bits.hpp"

namespace setfam {

/// Exact maximum-clique search (branch and bound with greedy-colouring upper
/// bounds) over a graph given as symmetric adjacency bitsets. Vertices are
/// internally relabelled by descending degree (ties by index) so the
/// colouring bound is taken in that order; all inputs and outputs use the
/// caller's original vertex indices.
class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<IndexBits> adjacency);

  std::size_t vertex_count() const { return n_; }

  /// Exact maximum clique over all vertices. If `witness` is non-null it
  /// receives one maximum clique (the first found by the deterministic
  /// search, not necessarily the canonical-least one).
  std::size_t maximum(IndexBits* witness = nullptr) const;

  /// Decision variant: is there a clique of size >= target whose vertices
  /// all lie in `candidates`? target == 0 is trivially true.
  bool exists_clique(const IndexBits& candidates, std::size_t target) const;

  /// The maximum clique whose sorted vertex sequence is lexicographically
  /// least among all maximum cliques. Requires a non-empty graph.
  IndexBits lex_min_maximum() const;

 private:
  std::size_t search(const IndexBits& internal_candidates, std::size_t stop_at,
                     IndexBits* witness) const;

  std::size_t n_ = 0;
  std::vector<IndexBits> ext_adj_;       // original labels
  std::vector<IndexBits> int_adj_;       // degree-ordered labels
  std::vector<std::size_t> ext_of_int_;
  std::vector<std::size_t> int_of_ext_;
};

}  // namespace setfam

#include "setfam/clique.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace setfam {

CliqueSolver::CliqueSolver(std::vector<IndexBits> adjacency)
    : n_(adjacency.size()), ext_adj_(std::move(adjacency)) {
  std::vector<std::size_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> deg(n_);
  for (std::size_t v = 0; v < n_; ++v) deg[v] = ext_adj_[v].count();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });
  ext_of_int_ = order;
  int_of_ext_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) int_of_ext_[order[i]] = i;
  int_adj_.assign(n_, IndexBits(n_));
  for (std::size_t v = 0; v < n_; ++v) {
    const std::size_t iv = int_of_ext_[v];
    ext_adj_[v].for_each([&](std::size_t u) { int_adj_[iv].set(int_of_ext_[u]); });
  }
}

namespace {

struct Frame {
  const std::vector<IndexBits>& adj;
  std::size_t best;
  std::size_t stop_at;  // 0 = run to completion (exact optimum)
  std::vector<std::size_t> current;
  std::vector<std::size_t> best_clique;
  bool stopped = false;

  void expand(IndexBits cands) {
    // Greedy colouring of the candidate set; vertices listed colour class by
    // colour class, so colour numbers are non-decreasing along `order` and
    // |current| + colour is an upper bound for any clique extending through
    // that vertex.
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    order.reserve(cands.count());
    colour.reserve(order.capacity());
    IndexBits uncoloured = cands;
    std::size_t colour_no = 0;
    while (uncoloured.any()) {
      ++colour_no;
      IndexBits avail = uncoloured;
      while (avail.any()) {
        const std::size_t v = avail.first();
        order.push_back(v);
        colour.push_back(colour_no);
        avail.reset(v);
        avail.subtract(adj[v]);
        uncoloured.reset(v);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (stopped) return;
      if (current.size() + colour[idx] <= best) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      IndexBits next = cands.intersect(adj[v]);
      if (next.any()) {
        expand(next);
      } else if (current.size() > best) {
        best = current.size();
        best_clique = current;
        if (stop_at != 0 && best >= stop_at) stopped = true;
      }
      current.pop_back();
      cands.reset(v);
    }
  }
};

}  // namespace

std::size_t CliqueSolver::search(const IndexBits& internal_candidates, std::size_t stop_at,
                                 IndexBits* witness) const {
  if (internal_candidates.none()) return 0;
  Frame frame{int_adj_, stop_at > 0 ? stop_at - 1 : 0, stop_at, {}, {}, false};
  frame.expand(internal_candidates);
  if (frame.best_clique.empty()) return stop_at > 0 ? frame.best : 0;
  if (witness) {
    IndexBits w(n_);
    for (std::size_t v : frame.best_clique) w.set(ext_of_int_[v]);
    *witness = w;
  }
  return frame.best;
}

std::size_t CliqueSolver::maximum(IndexBits* witness) const {
  if (n_ == 0) {
    if (witness) *witness = IndexBits(0);
    return 0;
  }
  return search(IndexBits::all(n_), 0, witness);
}

bool CliqueSolver::exists_clique(const IndexBits& candidates, std::size_t target) const {
  if (target == 0) return true;
  if (candidates.count() < target) return false;
  IndexBits internal(n_);
  candidates.for_each([&](std::size_t v) { internal.set(int_of_ext_[v]); });
  return search(internal, target, nullptr) >= target;
}

IndexBits CliqueSolver::lex_min_maximum() const {
  if (n_ == 0) throw std::domain_error("lex_min_maximum on empty graph");
  const std::size_t omega = maximum();
  // Build the lexicographically least sorted sequence greedily: v joins the
  // clique iff a (need-1)-clique survives among the later candidates adjacent
  // to v. Every candidate still in `cands` is > all decided positions, and
  // v is not self-adjacent, so `rest` automatically lies beyond v.
  IndexBits chosen(n_);
  IndexBits cands = IndexBits::all(n_);
  std::size_t need = omega;
  std::size_t v = cands.first();
  while (need > 0 && v < n_) {
    const IndexBits rest = cands.intersect(ext_adj_[v]);
    if (exists_clique(rest, need - 1)) {
      chosen.set(v);
      cands = rest;
      --need;
    } else {
      cands.reset(v);
    }
    v = cands.next(v);
  }
  if (need != 0) throw std::logic_error("lex-min clique reconstruction failed");
  return chosen;
}

}  // namespace setfam

#pragma once

#include <utility>
#include <vector>

#include "setfam/family.hpp"
#include "setfam/guards.hpp"
#include "setfam/rational.hpp"

namespace setfam {

/// All 2^n subsets of [0,n).
SetFamily gen_powerset(std::size_t n, const Guards& guards = {});

/// All r-subsets of [0,n).
SetFamily gen_uniform(std::size_t n, std::size_t r, const Guards& guards = {});

/// The extremal t-intersecting subfamily of the power set: sets of size
/// >= (n+t)/2 when n+t is even, otherwise sets meeting the first n-1
/// elements in >= (n+t-1)/2 points.
SetFamily gen_katona(std::size_t n, unsigned t, const Guards& guards = {});

/// m-signed r-subsets of [n]: sets {(x,y)} with x ranging over an r-subset
/// and y in [m], flattened as (x,y) -> x*m + y (0-based). Ground n*m.
SetFamily gen_signed(std::size_t n, std::size_t r, std::size_t m, const Guards& guards = {});

/// r-permutations: sets {(1,y_1),...,(r,y_r)} with distinct y_i in [n],
/// flattened as (i,y) -> i*n + y (0-based). Ground r*n.
SetFamily gen_permutations(std::size_t r, std::size_t n, const Guards& guards = {});

/// r-partial permutations of [n]: {(x_1,y_1),...,(x_r,y_r)} with x's
/// distinct and y's distinct, flattened as (x,y) -> x*n + y. Ground n*n.
SetFamily gen_partial_permutations(std::size_t n, std::size_t r, const Guards& guards = {});

/// n disjoint t-sets F_1..F_n plus their union F_{n+1}; ground n*t.
SetFamily gen_example1(std::size_t n, unsigned t);

/// gen_example1 extended by m-1 further t-sets disjoint from each other and
/// from everything else (members F_1..F_{n+m}); requires 2 <= m < n.
/// F = F^{t,-} for this family.
SetFamily gen_example2(std::size_t n, std::size_t m, unsigned t);

/// The line construction: p^2 sets B_{i,j}, one per line y = m_i x + c_j,
/// each the union of the t-element blocks of the points where its line meets
/// the non-parallel lines.
struct LinesConstruction {
  SetFamily family;
  std::size_t p = 0;
  unsigned t = 1;
  std::vector<Rational> slopes;
  std::vector<Rational> intercepts;
  /// Per member (canonical order): index of its slope class in [0,p).
  std::vector<std::size_t> parallel_class;
  /// Distinct intersection points in lexicographic (x,y) order; point q owns
  /// ground elements q*t .. q*t+t-1.
  std::vector<std::pair<Rational, Rational>> points;
};

/// Defaults: slopes m_i = i, intercepts c_j = j (i,j = 1..p). Slopes must be
/// pairwise distinct, as must intercepts.
LinesConstruction gen_lines(std::size_t p, unsigned t, std::vector<Rational> slopes = {},
                            std::vector<Rational> intercepts = {});

/// Embeds a subfamily of the power set of [n] into the 2-signed n-subsets:
/// A -> {(a,1) : a in A} ∪ {(b,2) : b not in A}. Injective, size-preserving.
SetFamily embed_powerset_in_signed(const SetFamily& a);

}  // namespace setfam

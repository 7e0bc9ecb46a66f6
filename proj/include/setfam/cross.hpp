#pragma once

#include <functional>
#include <optional>
#include <span>

#include "setfam/bigint.hpp"
#include "setfam/extremal.hpp"
#include "setfam/family.hpp"
#include "setfam/guards.hpp"
#include "setfam/verification.hpp"

namespace setfam {

enum class CrossObjective { Sum, Product };

/// Assignment of a set of family indices to each member: bit c of labels[i]
/// set means member i belongs to family c+1. A labeling is valid iff the
/// decoded tuple is cross-t-intersecting: on every conflict edge one side is
/// unlabeled or both carry the same single index, and a member of size < t
/// carries at most one index.
struct Labeling {
  std::size_t k = 1;
  std::vector<std::uint32_t> labels;
};

struct CrossConfigResult {
  std::size_t k = 1;
  CrossObjective objective = CrossObjective::Sum;
  BigInt value;
  std::vector<SetFamily> families;
  Labeling labeling;
  bool optimal = false;
  std::optional<bool> all_optima_checked;
};

std::vector<SetFamily> decode_labeling(const SetFamily& f, const Labeling& lab);
Labeling encode_tuple(const SetFamily& f, std::span<const SetFamily> tuple);
bool labeling_valid(const ConflictGraph& g, const Labeling& lab);

/// Exact maximum of the sum of sizes of k cross-t-intersecting subfamilies.
/// Maximises k|A^{t,+}| + |A^{t,-}| over subfamilies A (canonical-least
/// maximiser with a realisable configuration) and returns the configuration
/// B_1 = A_0, B_2 = ... = B_k = A_0^{t,+}.
CrossConfigResult max_sum_exact(const SetFamily& f, unsigned t, std::size_t k,
                                const Guards& guards = {});

/// Exact maximum of the product of sizes, by branch and bound over labelings
/// in canonical order with family-index symmetry broken (first occurrences
/// of indices increasing). Ties resolve to the canonical-least labeling.
CrossConfigResult max_product_exact(const SetFamily& f, unsigned t, std::size_t k,
                                    const Guards& guards = {});

/// Direct labeling-space maximisation of the sum: the independent second
/// route used to cross-check max_sum_exact.
CrossConfigResult max_sum_via_labeling(const SetFamily& f, unsigned t, std::size_t k,
                                       const Guards& guards = {});

/// Enumerates every valid labeling whose objective equals `target`, in
/// canonical order over the unrestricted label alphabet (no symmetry
/// reduction). The callback may return false to stop early. Returns the
/// number of optima visited.
std::uint64_t enumerate_optimal_labelings(const SetFamily& f, unsigned t, std::size_t k,
                                          CrossObjective objective, const BigInt& target,
                                          const std::function<bool(const Labeling&)>& visit,
                                          const Guards& guards = {});

/// True iff the labeling is the constant configuration A_1 = ... = A_k = L
/// for some largest t-intersecting subfamily L (members of L carry all k
/// indices, everything else none, |L| = ell and L is t-intersecting).
bool is_constant_largest(const SetFamily& f, unsigned t, std::size_t ell_value,
                         const Labeling& lab);

/// x mod k, except multiples of k map to k. Both arguments >= 1.
std::int64_t mod_star(std::int64_t x, std::int64_t k);

/// Checks the product-domination lift: if every p-subset product of x is at
/// most the matching product of y, then the full products compare the same
/// way. Also checks the cyclic index cover {(ip+j) mod* k} hits each index
/// exactly p times. Hypothesis failure is a precondition error, not a
/// violation.
VerificationReport product_dominance_lift(std::span<const Rational> x,
                                          std::span<const Rational> y, std::size_t p);

/// The threshold theorem on one instance: for k >= kappa both searches give
/// exactly k*l and l^k; for k > kappa strictly, every optimal labeling (for
/// either objective) is the constant configuration.
VerificationReport verify_threshold_optimality(const SetFamily& f, unsigned t, std::size_t k,
                                               const Guards& guards = {});

/// Max-sum dichotomy: sum = k*l when k >= kappa, sum > k*l strictly when
/// k < kappa.
VerificationReport verify_sum_threshold(const SetFamily& f, unsigned t, std::size_t k,
                                        const Guards& guards = {});

/// The tight-beta (beta = l/|F|) sum theorem: piecewise value |F| vs k*l,
/// with structure checks on the optima on the strict sides of |F|/l and
/// presence of both the trivial and constant configurations at the boundary.
VerificationReport verify_sum_tight_beta(const SetFamily& f, unsigned t, std::size_t k,
                                         const Guards& guards = {});

/// For families with non-trivial decomposition and 2 <= k < kappa: the
/// maximum sum strictly beats both the trivial configuration and k*l,
/// via the witness B_1 = F, B_2..k = F^{t,+}.
VerificationReport verify_sum_mixed_config(const SetFamily& f, unsigned t, std::size_t k,
                                           const Guards& guards = {});

/// If the product maximum for p families is attained by the constant
/// configuration, the same holds for any k >= p families.
VerificationReport verify_product_extension(const SetFamily& f, unsigned t, std::size_t p,
                                            std::size_t k, const Guards& guards = {});

/// The line construction: kappa = l = p, |B| = p^2; the constant
/// configuration is product-optimal iff k >= p, and for k < p the value
/// p^k(p-k+1) is achievable and strictly beats p^k.
VerificationReport verify_line_construction(std::size_t p, unsigned t, std::size_t k,
                                            const Guards& guards = {});

/// Product <= (sum/k)^k for the sizes in a result's families (exact integer
/// form: product * k^k <= sum^k).
bool am_gm_holds(const CrossConfigResult& result);

}  // namespace setfam

#pragma once

#include "setfam/family.hpp"
#include "setfam/guards.hpp"
#include "setfam/rational.hpp"
#include "setfam/verification.hpp"

namespace setfam {

/// l(F,t) with a certified witness: a largest t-intersecting subfamily,
/// canonical-least (lexicographically least sorted member sequence) among
/// the optima.
struct EllResult {
  std::size_t value = 0;
  SetFamily witness;
  IndexBits witness_mask;
};

struct BetaReport {
  Rational beta;
  Rational kappa;
  std::size_t ell = 0;
  /// Canonical-least subfamily attaining the minimum of beta(F,t,A).
  SetFamily witness;
  IndexBits witness_mask;
  /// beta == ell/|F|.
  bool attains_upper = false;
};

/// Exact maximum t-intersecting subfamily (maximum clique of the
/// t-intersection graph). Errors on the empty family.
EllResult ell(const SetFamily& f, unsigned t);

/// beta(F,t,A) = (l - |A^{t,+}|)/|A^{t,-}| when A^{t,-} is non-empty, else
/// l/|F|. `a` must be a subfamily of `f`.
Rational beta_of(const SetFamily& f, unsigned t, const SetFamily& a);

/// Exact minimum of beta(F,t,A) over all subfamilies, by branch-and-bound
/// enumeration in canonical (subset-lex) order.
BetaReport beta(const SetFamily& f, unsigned t, const Guards& guards = {});

/// kappa(F,t) = 1/beta(F,t); the postcondition kappa <= |F| is checked.
Rational kappa(const SetFamily& f, unsigned t, const Guards& guards = {});

/// Checks |A^{t,+}| + c|A^{t,-}| <= l(F,t) for every subfamily A; on failure
/// the first violating subfamily (numeric mask order) is reported.
VerificationReport verify_pointwise_inequality(const SetFamily& f, unsigned t,
                                               const Rational& c, const Guards& guards = {});

/// Checks 1/|F| <= beta <= l/|F| plus the equality characterisation of the
/// lower bound (beta = 1/|F| iff all distinct pairs intersect in < t
/// elements).
VerificationReport verify_beta_bounds(const SetFamily& f, unsigned t, const Guards& guards = {});

/// Checks that beta = l/|F| forces F = F^{t,+} or F = F^{t,-}; vacuous when
/// the upper bound is not attained. Records the decomposition shape so
/// callers can confirm the converse fails where it should.
VerificationReport verify_tight_beta_structure(const SetFamily& f, unsigned t,
                                               const Guards& guards = {});

namespace detail {
/// Adjacency rows of the conflict graph packed into 32-bit masks; only valid
/// under the subfamily guard (|F| <= 24 <= 32).
std::vector<std::uint32_t> conflict_masks(const SetFamily& f, unsigned t);
}  // namespace detail

}  // namespace setfam

#pragma once

#include <cstddef>
#include <cstdint>

namespace setfam {

/// Size guards for the exponential searches. Exceeding a guard raises
/// GuardExceeded naming the bound; guards are honest refusals, not silent
/// heuristics. Fields can be overridden per call (CLI: --guard-<name>).
struct Guards {
  /// Max |F| for 2^|F| subfamily enumerations (beta, pointwise checks,
  /// max-sum search).
  std::size_t subfamily = 24;
  /// Labeling searches allowed while (k+1)^|F| <= 2^search_log2.
  unsigned search_log2 = 34;
  /// All-optima enumeration allowed while (k+1)^|F| <= 2^unique_log2.
  unsigned unique_log2 = 34;
  /// Label sets are 32-bit masks.
  std::size_t max_k = 32;
  /// The all-optima enumerator iterates 2^k label sets per member.
  std::size_t enumerate_max_k = 12;
  /// Hard cap on explored labeling-search nodes (deterministic failure
  /// instead of an unbounded run).
  std::uint64_t node_cap = std::uint64_t{1} << 27;
  /// Brute-force symmetry decision.
  std::size_t symmetry_brute_force = 10;
  /// Generators refuse families larger than this.
  std::size_t generator_members = 1u << 20;
};

}  // namespace setfam

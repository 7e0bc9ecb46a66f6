#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace setfam {

/// Arbitrary-precision integer for product values (l^k overflows 64 bits
/// quickly); reports render these as decimal strings.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_from_u128(unsigned __int128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  BigInt r = hi;
  r <<= 64;
  r += lo;
  return r;
}

inline std::string bigint_to_string(const BigInt& v) { return v.str(); }

}  // namespace setfam

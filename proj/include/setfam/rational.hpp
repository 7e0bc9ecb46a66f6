#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace setfam {

/// Exact rational number over 64-bit integers, always stored in lowest terms
/// with a positive denominator. Every comparison is exact (cross products are
/// taken in 128-bit intermediates); arithmetic that would leave the 64-bit
/// range throws instead of wrapping. The quantities this type holds (beta,
/// kappa, subfamily ratios, thresholds) are bounded by family sizes, so
/// overflow indicates a caller bug rather than a legitimate value.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    if (denominator < 0) {
      numerator = checked_negate(numerator);
      denominator = checked_negate(denominator);
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = g == 0 ? 0 : numerator / g;
    den_ = g == 0 ? 1 : denominator / g;
  }
  static Rational from_int(std::int64_t v) { return Rational(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Rational operator-() const { return Rational(checked_negate(num_), den_); }

  Rational reciprocal() const {
    if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
  bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// Smallest integer >= value.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  /// "num/den" in lowest terms.
  std::string to_fraction_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Deterministic decimal rendering computed by integer long division,
  /// truncated to at most `digits` fractional digits, trailing zeros trimmed.
  std::string to_decimal_string(int digits = 6) const {
    std::int64_t n = num_;
    std::string out;
    if (n < 0) {
      out.push_back('-');
      n = -n;
    }
    out += std::to_string(n / den_);
    std::int64_t rem = n % den_;
    if (rem == 0) return out;
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      frac.push_back(static_cast<char>('0' + rem / den_));
      rem %= den_;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    return out;
  }

 private:
  using i128 = __int128;

  static std::int64_t checked_negate(std::int64_t v) {
    if (v == INT64_MIN) throw std::overflow_error("Rational: overflow");
    return -v;
  }
  static Rational make(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num < 0 ? -num : num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    } else {
      den = 1;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("Rational: overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace setfam

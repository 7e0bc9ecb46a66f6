#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace setfam {

/// Fixed-width 128-bit element set: one bit per ground-set element. Ground
/// sets are capped at 128 elements (enforced where families are built), so
/// two words always suffice and members keep plain value semantics.
struct MemberBits {
  std::array<std::uint64_t, 2> w{0, 0};

  static constexpr std::size_t kMaxBits = 128;

  void set(unsigned e) { w[e >> 6] |= std::uint64_t{1} << (e & 63); }
  bool test(unsigned e) const { return (w[e >> 6] >> (e & 63)) & 1; }

  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }

  MemberBits operator&(const MemberBits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  MemberBits operator|(const MemberBits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  bool any() const { return (w[0] | w[1]) != 0; }
  bool none() const { return !any(); }

  bool operator==(const MemberBits&) const = default;
  /// Numeric order of the bit encoding (high word first).
  std::strong_ordering operator<=>(const MemberBits& o) const {
    if (w[1] != o.w[1]) return w[1] <=> o.w[1];
    return w[0] <=> o.w[0];
  }

  std::vector<unsigned> elements() const {
    std::vector<unsigned> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int word = 0; word < 2; ++word) {
      std::uint64_t v = w[word];
      while (v) {
        out.push_back(static_cast<unsigned>(word * 64 + std::countr_zero(v)));
        v &= v - 1;
      }
    }
    return out;
  }
};

inline int intersection_size(const MemberBits& a, const MemberBits& b) {
  return std::popcount(a.w[0] & b.w[0]) + std::popcount(a.w[1] & b.w[1]);
}

/// Dynamic bitset over member indices (vertices of the conflict or
/// intersection graph). Sized once at construction; word-parallel ops only.
class IndexBits {
 public:
  IndexBits() = default;
  explicit IndexBits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe_size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto v : w_) c += static_cast<std::size_t>(std::popcount(v));
    return c;
  }
  bool any() const {
    for (auto v : w_)
      if (v) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const IndexBits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const IndexBits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  IndexBits& operator&=(const IndexBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  IndexBits& operator|=(const IndexBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  IndexBits& subtract(const IndexBits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  IndexBits intersect(const IndexBits& o) const {
    IndexBits r = *this;
    r &= o;
    return r;
  }

  /// Lowest set index, or universe_size() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }
  /// Lowest set index > i, or universe_size().
  std::size_t next(std::size_t i) const {
    ++i;
    if (i >= n_) return n_;
    std::size_t word = i >> 6;
    std::uint64_t v = w_[word] >> (i & 63);
    if (v) return i + static_cast<std::size_t>(std::countr_zero(v));
    for (++word; word < w_.size(); ++word)
      if (w_[word]) return word * 64 + static_cast<std::size_t>(std::countr_zero(w_[word]));
    return n_;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t word = 0; word < w_.size(); ++word) {
      std::uint64_t v = w_[word];
      while (v) {
        fn(word * 64 + static_cast<std::size_t>(std::countr_zero(v)));
        v &= v - 1;
      }
    }
  }

  static IndexBits all(std::size_t n) {
    IndexBits b(n);
    for (std::size_t i = 0; i < b.w_.size(); ++i) b.w_[i] = ~std::uint64_t{0};
    if (n & 63) b.w_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
    if (n == 0) b.w_.clear();
    return b;
  }

  bool operator==(const IndexBits&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace setfam

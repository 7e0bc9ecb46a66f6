#include "setfam/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace setfam {

namespace {

void check_member_budget(std::uint64_t count, const Guards& guards) {
  if (count > guards.generator_members)
    throw GuardExceeded("generator-members",
                        std::to_string(count) + " members exceed the generator bound");
}

void check_ground(std::size_t n) {
  if (n > MemberBits::kMaxBits)
    throw GuardExceeded("ground-width", "generator needs a ground set of size " +
                                            std::to_string(n) + " > 128");
}

std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  return prod > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(prod);
}

std::uint64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    if (result > UINT64_MAX / (n - r + i)) return UINT64_MAX;
    result = result * (n - r + i) / i;
  }
  return result;
}

/// Visits all r-subsets of [0,n) in ascending order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
  std::vector<unsigned> idx(r);
  std::iota(idx.begin(), idx.end(), 0u);
  if (r > n) return;
  while (true) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::string> pair_labels(std::size_t n_first, std::size_t n_second) {
  std::vector<std::string> labels;
  labels.reserve(n_first * n_second);
  for (std::size_t x = 0; x < n_first; ++x)
    for (std::size_t y = 0; y < n_second; ++y)
      labels.push_back("(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")");
  return labels;
}

}  // namespace

SetFamily gen_powerset(std::size_t n, const Guards& guards) {
  check_ground(n);
  if (n >= 63) throw GuardExceeded("generator-members", "2^n members out of range");
  check_member_budget(std::uint64_t{1} << n, guards);
  std::vector<MemberSet> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    MemberBits b;
    b.w[0] = mask;
    members.push_back(MemberSet::from_bits(b));
  }
  return SetFamily::create(GroundSet{n}, std::move(members));
}

SetFamily gen_uniform(std::size_t n, std::size_t r, const Guards& guards) {
  check_ground(n);
  if (r > n) throw std::invalid_argument("gen_uniform requires r <= n");
  check_member_budget(binomial(n, r), guards);
  std::vector<MemberSet> members;
  for_each_subset(n, r, [&](const std::vector<unsigned>& idx) {
    members.push_back(MemberSet::from_elements(idx));
  });
  return SetFamily::create(GroundSet{n}, std::move(members));
}

SetFamily gen_katona(std::size_t n, unsigned t, const Guards& guards) {
  if (t < 1 || t > n) throw std::invalid_argument("gen_katona requires 1 <= t <= n");
  check_ground(n);
  check_member_budget(std::uint64_t{1} << n, guards);
  std::vector<MemberSet> members;
  const bool even = (n + t) % 2 == 0;
  const std::size_t threshold = even ? (n + t) / 2 : (n + t - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    MemberBits b;
    b.w[0] = mask;
    const std::size_t measure =
        even ? static_cast<std::size_t>(std::popcount(mask))
             : static_cast<std::size_t>(std::popcount(mask & ((std::uint64_t{1} << (n - 1)) - 1)));
    if (measure >= threshold) members.push_back(MemberSet::from_bits(b));
  }
  return SetFamily::create(GroundSet{n}, std::move(members));
}

SetFamily gen_signed(std::size_t n, std::size_t r, std::size_t m, const Guards& guards) {
  if (r < 1 || r > n) throw std::invalid_argument("gen_signed requires 1 <= r <= n");
  if (m < 2) throw std::invalid_argument("gen_signed requires m >= 2");
  check_ground(n * m);
  std::uint64_t count = binomial(n, r);
  for (std::size_t i = 0; i < r; ++i) count = mul_saturating(count, m);
  check_member_budget(count, guards);

  std::vector<MemberSet> members;
  for_each_subset(n, r, [&](const std::vector<unsigned>& support) {
    std::vector<std::size_t> sign(r, 0);
    while (true) {
      std::vector<unsigned> elems(r);
      for (std::size_t i = 0; i < r; ++i)
        elems[i] = static_cast<unsigned>(support[i] * m + sign[i]);
      members.push_back(MemberSet::from_elements(elems));
      std::size_t pos = r;
      while (pos > 0 && sign[pos - 1] == m - 1) sign[--pos] = 0;
      if (pos == 0) break;
      ++sign[pos - 1];
    }
  });
  auto fam = SetFamily::create(GroundSet{n * m}, std::move(members));
  fam.set_element_labels(pair_labels(n, m));
  return fam;
}

SetFamily gen_permutations(std::size_t r, std::size_t n, const Guards& guards) {
  if (r < 1 || r > n) throw std::invalid_argument("gen_permutations requires 1 <= r <= n");
  check_ground(r * n);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < r; ++i) count = mul_saturating(count, n - i);
  check_member_budget(count, guards);

  std::vector<MemberSet> members;
  std::vector<unsigned> ys;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == r) {
      std::vector<unsigned> elems(r);
      for (std::size_t i = 0; i < r; ++i) elems[i] = static_cast<unsigned>(i * n + ys[i]);
      members.push_back(MemberSet::from_elements(elems));
      return;
    }
    for (unsigned y = 0; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      ys.push_back(y);
      self(self, pos + 1);
      ys.pop_back();
      used[y] = false;
    }
  };
  rec(rec, 0);
  auto fam = SetFamily::create(GroundSet{r * n}, std::move(members));
  fam.set_element_labels(pair_labels(r, n));
  return fam;
}

SetFamily gen_partial_permutations(std::size_t n, std::size_t r, const Guards& guards) {
  if (r < 1 || r > n) throw std::invalid_argument("gen_partial_permutations requires 1 <= r <= n");
  check_ground(n * n);
  std::uint64_t count = binomial(n, r);
  for (std::size_t i = 0; i < r; ++i) count = mul_saturating(count, n - i);
  check_member_budget(count, guards);

  std::vector<MemberSet> members;
  for_each_subset(n, r, [&](const std::vector<unsigned>& xs) {
    std::vector<unsigned> ys;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == r) {
        std::vector<unsigned> elems(r);
        for (std::size_t i = 0; i < r; ++i) elems[i] = static_cast<unsigned>(xs[i] * n + ys[i]);
        members.push_back(MemberSet::from_elements(elems));
        return;
      }
      for (unsigned y = 0; y < n; ++y) {
        if (used[y]) continue;
        used[y] = true;
        ys.push_back(y);
        self(self, pos + 1);
        ys.pop_back();
        used[y] = false;
      }
    };
    rec(rec, 0);
  });
  auto fam = SetFamily::create(GroundSet{n * n}, std::move(members));
  fam.set_element_labels(pair_labels(n, n));
  return fam;
}

SetFamily gen_example1(std::size_t n, unsigned t) {
  if (n < 2) throw std::invalid_argument("gen_example1 requires n >= 2");
  if (t < 1) throw std::invalid_argument("gen_example1 requires t >= 1");
  check_ground(n * t);
  std::vector<MemberSet> members;
  MemberBits all;
  for (std::size_t i = 0; i < n; ++i) {
    MemberBits block;
    for (unsigned e = 0; e < t; ++e) {
      block.set(static_cast<unsigned>(i * t) + e);
      all.set(static_cast<unsigned>(i * t) + e);
    }
    members.push_back(MemberSet::from_bits(block));
  }
  members.push_back(MemberSet::from_bits(all));
  return SetFamily::create(GroundSet{n * t}, std::move(members));
}

SetFamily gen_example2(std::size_t n, std::size_t m, unsigned t) {
  if (!(2 <= m && m < n)) throw std::invalid_argument("gen_example2 requires 2 <= m < n");
  if (t < 1) throw std::invalid_argument("gen_example2 requires t >= 1");
  const std::size_t ground = (n + m - 1) * t;
  check_ground(ground);
  std::vector<MemberSet> members;
  MemberBits all;
  for (std::size_t i = 0; i < n; ++i) {
    MemberBits block;
    for (unsigned e = 0; e < t; ++e) {
      block.set(static_cast<unsigned>(i * t) + e);
      all.set(static_cast<unsigned>(i * t) + e);
    }
    members.push_back(MemberSet::from_bits(block));
  }
  members.push_back(MemberSet::from_bits(all));
  for (std::size_t i = n; i < n + m - 1; ++i) {
    MemberBits block;
    for (unsigned e = 0; e < t; ++e) block.set(static_cast<unsigned>(i * t) + e);
    members.push_back(MemberSet::from_bits(block));
  }
  return SetFamily::create(GroundSet{ground}, std::move(members));
}

LinesConstruction gen_lines(std::size_t p, unsigned t, std::vector<Rational> slopes,
                            std::vector<Rational> intercepts) {
  if (p < 3) throw std::invalid_argument("gen_lines requires p >= 3");
  if (t < 1) throw std::invalid_argument("gen_lines requires t >= 1");
  if (slopes.empty())
    for (std::size_t i = 1; i <= p; ++i) slopes.push_back(Rational::from_int(static_cast<std::int64_t>(i)));
  if (intercepts.empty())
    for (std::size_t j = 1; j <= p; ++j)
      intercepts.push_back(Rational::from_int(static_cast<std::int64_t>(j)));
  if (slopes.size() != p || intercepts.size() != p)
    throw std::invalid_argument("gen_lines needs exactly p slopes and p intercepts");
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b) {
      if (slopes[a] == slopes[b]) throw std::invalid_argument("gen_lines: slopes must be distinct");
      if (intercepts[a] == intercepts[b])
        throw std::invalid_argument("gen_lines: intercepts must be distinct");
    }

  using Point = std::pair<Rational, Rational>;
  const auto line_index = [p](std::size_t i, std::size_t j) { return i * p + j; };
  // Pairwise intersection points of non-parallel lines; a std::map keyed on
  // (x, y) yields the lexicographic registry order directly.
  std::map<Point, std::size_t> registry;
  std::vector<std::set<Point>> on_line(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i2 = i + 1; i2 < p; ++i2)
        for (std::size_t j2 = 0; j2 < p; ++j2) {
          const Rational x = (intercepts[j2] - intercepts[j]) / (slopes[i] - slopes[i2]);
          const Rational y = slopes[i] * x + intercepts[j];
          const Point pt{x, y};
          registry.emplace(pt, 0);
          on_line[line_index(i, j)].insert(pt);
          on_line[line_index(i2, j2)].insert(pt);
        }
  std::size_t next_block = 0;
  for (auto& [pt, block] : registry) block = next_block++;

  const std::size_t ground = registry.size() * t;
  check_ground(ground);

  std::vector<std::pair<MemberSet, std::size_t>> tagged;  // member, slope class
  tagged.reserve(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      MemberBits bits;
      for (const Point& pt : on_line[line_index(i, j)]) {
        const std::size_t block = registry.at(pt);
        for (unsigned e = 0; e < t; ++e) bits.set(static_cast<unsigned>(block * t) + e);
      }
      tagged.emplace_back(MemberSet::from_bits(bits), i);
    }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  LinesConstruction out;
  out.p = p;
  out.t = t;
  out.slopes = std::move(slopes);
  out.intercepts = std::move(intercepts);
  std::vector<MemberSet> members;
  members.reserve(tagged.size());
  for (auto& [member, cls] : tagged) {
    members.push_back(member);
    out.parallel_class.push_back(cls);
  }
  out.family = SetFamily::create(GroundSet{ground}, std::move(members));

  out.points.reserve(registry.size());
  std::vector<std::string> labels(ground);
  for (const auto& [pt, block] : registry) {
    out.points.push_back(pt);
    for (unsigned e = 0; e < t; ++e)
      labels[block * t + e] = "(" + pt.first.to_fraction_string() + "," +
                              pt.second.to_fraction_string() + ")#" + std::to_string(e + 1);
  }
  out.family.set_element_labels(std::move(labels));
  return out;
}

SetFamily embed_powerset_in_signed(const SetFamily& a) {
  const std::size_t n = a.ground().size;
  check_ground(2 * n);
  std::vector<MemberSet> members;
  members.reserve(a.size());
  for (const auto& mem : a.members()) {
    MemberBits bits;
    for (unsigned x = 0; x < n; ++x)
      bits.set(2 * x + (mem.bits.test(x) ? 0u : 1u));
    members.push_back(MemberSet::from_bits(bits));
  }
  auto fam = SetFamily::create(GroundSet{2 * n}, std::move(members));
  fam.set_element_labels(pair_labels(n, 2));
  return fam;
}

}  // namespace setfam

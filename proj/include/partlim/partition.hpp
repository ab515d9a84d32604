#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "partlim/errors.hpp"
#include "partlim/rational.hpp"

namespace partlim {

// Hard cap for the enumeration oracle: p(40) = 37338 partitions is ample
// for cross-validation and keeps the worst call well under a second.
inline constexpr int kOracleCap = 40;

struct Partition {
  std::vector<int> parts;  // weakly decreasing, each >= 1

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  // Product of the parts.  Largest possible product for n <= 40 is
  // 3^13 * 2 < 2^22, so 64 bits never overflow at oracle scale.
  std::uint64_t weight() const {
    std::uint64_t w = 1;
    for (int p : parts) w *= static_cast<std::uint64_t>(p);
    return w;
  }
};

namespace detail {

template <typename Fn>
void enumerate_rest(std::vector<int>& buf, int remaining, int cap, Fn&& fn) {
  if (remaining == 0) {
    fn(buf);
    return;
  }
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    buf.push_back(p);
    enumerate_rest(buf, remaining - p, p, fn);
    buf.pop_back();
  }
}

}  // namespace detail

// Visits every partition of n whose largest part is exactly max_part, in
// lexicographically decreasing order.  The callback receives the parts
// vector (weakly decreasing); it must copy if it needs to keep it.
template <typename Fn>
void enumerate_partitions(int n, int max_part, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be >= 1");
  if (max_part < 1 || max_part > n)
    throw std::invalid_argument("enumerate_partitions: need 1 <= max_part <= n");
  if (n > kOracleCap)
    throw computation_error("enumerate_partitions: n = " + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(kOracleCap));
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(n));
  buf.push_back(max_part);
  detail::enumerate_rest(buf, n - max_part, max_part, fn);
}

inline std::vector<Partition> partitions_with_max_part(int n, int max_part) {
  std::vector<Partition> out;
  enumerate_partitions(n, max_part, [&](const std::vector<int>& parts) {
    out.push_back(Partition{parts});
  });
  return out;
}

// Enumeration oracle for the weighted count: sum of 1/weight over all
// partitions of n with largest part exactly k.  Exact rational result.
// Returns 0 for k > n (no such partition).
inline Rational brute_force_b(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("brute_force_b: need n >= 1 and k >= 1");
  if (n > kOracleCap)
    throw computation_error("brute_force_b: n = " + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(kOracleCap));
  if (k > n) return Rational(0);
  Rational total(0);
  enumerate_partitions(n, k, [&](const std::vector<int>& parts) {
    std::uint64_t w = 1;
    for (int p : parts) w *= static_cast<std::uint64_t>(p);
    total += Rational(1, w);
  });
  return total;
}

// Row total of the oracle: sum over all largest parts.
inline Rational brute_force_b_total(int n) {
  Rational total(0);
  for (int k = 1; k <= n; ++k) total += brute_force_b(n, k);
  return total;
}

}  // namespace partlim

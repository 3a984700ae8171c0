#pragma once

// Exact counting routes for (an+b)-color compositions:
//   * closed form   c_{nu,k} = sum_j a^j b^{k-j} C(k,j) C(nu+j-1, nu-k)
//   * recurrence    W_nu = (a+b+2) W_{nu-1} - (b+1) W_{nu-2}
//   * invert transform of an arbitrary weight prefix
//   * partition-profile (multinomial) sum, and the partial Bell form of it
// plus the signed b = -1 / b = -2 families and the Fibonacci identity they
// feed. Every value is an exact Count; 0^0 is taken as 1 throughout.

#include "colorcomp/core.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorcomp {

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

inline unsigned long as_ulong(std::int64_t v) { return static_cast<unsigned long>(v); }

/// base^exp with 0^0 = 1 (GMP already follows that convention).
inline Count power(std::int64_t base, std::int64_t exp) {
  Count r;
  mpz_pow_ui(r.get_mpz_t(), Count(static_cast<long>(base)).get_mpz_t(), as_ulong(exp));
  return r;
}

inline Count sign_power(std::int64_t exp) { return (exp % 2 == 0) ? Count(1) : Count(-1); }

inline Count factorial(std::int64_t n) {
  Count r;
  mpz_fac_ui(r.get_mpz_t(), as_ulong(n));
  return r;
}

} // namespace detail

/// C(n, k) for n >= 0; zero outside 0 <= k <= n. Negative upper indices are
/// rejected rather than continued by upper negation.
inline Count binomial(std::int64_t n, std::int64_t k) {
  detail::require(n >= 0, "binomial: upper index must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), detail::as_ulong(n), detail::as_ulong(k));
  return r;
}

/// Number of (an+b)-color compositions of nu with exactly k parts. Accepts
/// any sign of b, in which case the value is a signed count.
inline Count count_parts_closed(const ColorLaw& law, std::int64_t nu, std::int64_t k) {
  detail::require(nu >= 1, "count_parts_closed: nu must be >= 1");
  detail::require(k >= 1, "count_parts_closed: k must be >= 1");
  if (k > nu) return 0;
  Count sum = 0;
  for (std::int64_t j = 0; j <= k; ++j)
    sum += detail::power(law.a(), j) * detail::power(law.b(), k - j) * binomial(k, j) *
           binomial(nu + j - 1, nu - k);
  return sum;
}

inline Count count_total_closed(const ColorLaw& law, std::int64_t nu) {
  detail::require(nu >= 1, "count_total_closed: nu must be >= 1");
  Count total = 0;
  for (std::int64_t k = 1; k <= nu; ++k) total += count_parts_closed(law, nu, k);
  return total;
}

/// W_nu from the two-term recurrence seeded with W_1 = a+b and
/// W_2 = (a+b)^2 + (2a+b). Linear in nu.
inline Count count_total_recurrence(const ColorLaw& law, std::int64_t nu) {
  detail::require(nu >= 1, "count_total_recurrence: nu must be >= 1");
  const Count a = static_cast<long>(law.a());
  const Count b = static_cast<long>(law.b());
  Count prev = a + b;                              // W_1
  if (nu == 1) return prev;
  Count cur = (a + b) * (a + b) + (2 * a + b);     // W_2
  const Count p = a + b + 2;
  const Count q = b + 1;
  for (std::int64_t m = 3; m <= nu; ++m) {
    Count next = p * cur - q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// (W_1, ..., W_N) with W(t) = w(t) / (1 - w(t)), i.e.
/// W_n = w_n + sum_{m=1}^{n-1} w_m W_{n-m}.
inline std::vector<Count> invert_transform(const WeightSequence& w, std::int64_t N) {
  detail::require(N >= 1, "invert_transform: N must be >= 1");
  detail::require(N <= w.size(), "invert_transform: N = " + std::to_string(N) +
                                     " exceeds the supplied prefix of length " +
                                     std::to_string(w.size()));
  std::vector<Count> W(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) {
    Count acc = static_cast<long>(w(n));
    for (std::int64_t m = 1; m < n; ++m)
      acc += static_cast<long>(w(m)) * W[static_cast<std::size_t>(n - m - 1)];
    W[static_cast<std::size_t>(n - 1)] = std::move(acc);
  }
  return W;
}

/// Multiplicity vector (k_1, ..., k_n) of a partition of n: sum i*k_i = n,
/// sum k_i = number of parts. Index 0 holds k_1.
struct PartitionProfile {
  std::vector<std::int64_t> multiplicities;

  std::int64_t parts() const {
    std::int64_t s = 0;
    for (auto m : multiplicities) s += m;
    return s;
  }
  std::int64_t weight() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
      s += static_cast<std::int64_t>(i + 1) * multiplicities[i];
    return s;
  }
};

/// Visits every partition of n into exactly k parts as a profile of length n.
inline void for_each_partition_profile(std::int64_t n, std::int64_t k,
                                       const std::function<void(const PartitionProfile&)>& visit) {
  if (n < 1 || k < 1 || k > n) return;
  PartitionProfile profile{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  // Parts are chosen in non-increasing order; `cap` bounds the next part.
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
      [&](std::int64_t remaining, std::int64_t slots, std::int64_t cap) {
        if (slots == 0) {
          if (remaining == 0) visit(profile);
          return;
        }
        // each of the other slots - 1 parts needs at least 1
        const std::int64_t hi = std::min(cap, remaining - (slots - 1));
        const std::int64_t lo = (remaining + slots - 1) / slots;
        for (std::int64_t part = hi; part >= lo; --part) {
          ++profile.multiplicities[static_cast<std::size_t>(part - 1)];
          rec(remaining - part, slots - 1, part);
          --profile.multiplicities[static_cast<std::size_t>(part - 1)];
        }
      };
  rec(n, k, n);
}

namespace detail {

// c_{n,k}(w) extended by c_{0,0} = 1 and c_{n,0} = c_{0,k} = 0 otherwise.
inline Count multinomial_sum(const WeightSequence& w, std::int64_t n, std::int64_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || n < k) return 0;
  require(n <= w.size(), "partition sum: n = " + std::to_string(n) +
                             " exceeds the supplied prefix of length " +
                             std::to_string(w.size()));
  Count total = 0;
  const Count k_fact = factorial(k);
  for_each_partition_profile(n, k, [&](const PartitionProfile& profile) {
    Count term = k_fact;
    for (std::size_t i = 0; i < profile.multiplicities.size(); ++i) {
      const std::int64_t m = profile.multiplicities[i];
      if (m == 0) continue;
      term /= factorial(m);
      term *= power(w(static_cast<std::int64_t>(i + 1)), m);
    }
    total += term;
  });
  return total;
}

} // namespace detail

/// Multinomial sum over k-part partitions of n:
///   sum k!/(k_1!...k_n!) * w_1^{k_1} ... w_n^{k_n}.
/// Weights may be negative. Returns 0 when n < k.
inline Count count_parts_partition(const WeightSequence& w, std::int64_t n, std::int64_t k) {
  detail::require(n >= 1 && k >= 1, "count_parts_partition: n and k must be >= 1");
  return detail::multinomial_sum(w, n, k);
}

/// Partial Bell polynomial B_{n,k}(x_1, x_2, ...) by the standard recurrence
///   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
/// `x[i-1]` holds x_i and must cover indices up to n - k + 1.
inline Count partial_bell(std::int64_t n, std::int64_t k, const std::vector<Count>& x) {
  detail::require(n >= 0 && k >= 0, "partial_bell: n and k must be >= 0");
  if (n == 0 || k == 0) return (n == 0 && k == 0) ? 1 : 0;
  if (k > n) return 0;
  detail::require(static_cast<std::int64_t>(x.size()) >= n - k + 1,
                  "partial_bell: too few variables");
  // table[m][j] = B_{m,j}; only entries with m - j <= n - k are reachable.
  std::vector<std::vector<Count>> table(static_cast<std::size_t>(n + 1),
                                        std::vector<Count>(static_cast<std::size_t>(k + 1), 0));
  table[0][0] = 1;
  for (std::int64_t m = 1; m <= n; ++m)
    for (std::int64_t j = std::max<std::int64_t>(1, m - (n - k)); j <= std::min(m, k); ++j) {
      Count acc = 0;
      for (std::int64_t i = 1; i <= m - j + 1; ++i)
        acc += binomial(m - 1, i - 1) * x[static_cast<std::size_t>(i - 1)] *
               table[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(j - 1)];
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = std::move(acc);
    }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// c_{n,k}(w) = k!/n! * B_{n,k}(1! w_1, 2! w_2, ...).
inline Count count_parts_bell(const WeightSequence& w, std::int64_t n, std::int64_t k) {
  detail::require(n >= 0 && k >= 0, "count_parts_bell: n and k must be >= 0");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || n < k) return 0;
  detail::require(n <= w.size(), "count_parts_bell: prefix too short");
  std::vector<Count> x;
  x.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i)
    x.push_back(detail::factorial(i) * static_cast<long>(w(i)));
  Count scaled = partial_bell(n, k, x) * detail::factorial(k);
  const Count n_fact = detail::factorial(n);
  if (!mpz_divisible_p(scaled.get_mpz_t(), n_fact.get_mpz_t()))
    throw std::logic_error("count_parts_bell: k! B_{n,k} not divisible by n!");
  return scaled / n_fact;
}

/// Both sides of the convolution identity
///   c_{n,k}(a x + b y) = sum_{m,j} C(k,j) a^j b^{k-j} c_{m,j}(x) c_{n-m,k-j}(y)
/// with c_{0,0} = 1 and c_{m,j} = 0 for m < j.
inline std::pair<Count, Count> check_convolution(const WeightSequence& x, const WeightSequence& y,
                                                 std::int64_t a, std::int64_t b, std::int64_t n,
                                                 std::int64_t k) {
  detail::require(n >= 0 && k >= 0, "check_convolution: n and k must be >= 0");
  detail::require(n <= x.size() && n <= y.size(),
                  "check_convolution: n exceeds a supplied prefix");
  const std::int64_t len = std::min(x.size(), y.size());
  std::vector<std::int64_t> combined(static_cast<std::size_t>(len));
  for (std::int64_t i = 1; i <= len; ++i)
    combined[static_cast<std::size_t>(i - 1)] = a * x(i) + b * y(i);
  Count lhs = detail::multinomial_sum(WeightSequence(std::move(combined)), n, k);

  Count rhs = 0;
  for (std::int64_t m = 0; m <= n; ++m)
    for (std::int64_t j = 0; j <= k; ++j) {
      Count cx = detail::multinomial_sum(x, m, j);
      if (cx == 0) continue;
      Count cy = detail::multinomial_sum(y, n - m, k - j);
      if (cy == 0) continue;
      rhs += binomial(k, j) * detail::power(a, j) * detail::power(b, k - j) * cx * cy;
    }
  return {std::move(lhs), std::move(rhs)};
}

/// |T^{a,b}_j(n,k)| = a^j b^{k-j} C(k,j) C(n+j-1, n-k).
inline Count count_domino_stratum(const ColorLaw& law, std::int64_t n, std::int64_t k,
                                  std::int64_t j) {
  detail::require(law.b() >= 0, "count_domino_stratum: requires b >= 0");
  detail::require(n >= 1 && k >= 1, "count_domino_stratum: n and k must be >= 1");
  detail::require(j >= 0 && j <= k, "count_domino_stratum: requires 0 <= j <= k");
  return detail::power(law.a(), j) * detail::power(law.b(), k - j) * binomial(k, j) *
         binomial(n + j - 1, n - k);
}

/// (n-1)-color compositions of nu with k parts: no part 1, part i > 1 in
/// i - 1 colors.
inline Count count_parts_n_minus_1(std::int64_t nu, std::int64_t k) {
  detail::require(nu >= 1 && k >= 1, "count_parts_n_minus_1: nu and k must be >= 1");
  if (k > nu) return 0;
  Count sum = 0;
  for (std::int64_t j = 0; j <= k; ++j)
    sum += detail::sign_power(k - j) * binomial(k, j) * binomial(nu + j - 1, nu - k);
  return sum;
}

/// Signed (n-2)-color count: compositions with no part 2, part i > 2 in i - 2
/// colors, weighted by (-1)^(number of 1's). The k = nu case is (-1)^nu; the
/// sum below is only used for k < nu.
inline Count count_parts_n_minus_2(std::int64_t nu, std::int64_t k) {
  detail::require(nu >= 1 && k >= 1, "count_parts_n_minus_2: nu and k must be >= 1");
  detail::require(k <= nu, "count_parts_n_minus_2: requires k <= nu");
  if (k == nu) return detail::sign_power(nu);
  Count sum = 0;
  for (std::int64_t j = 1; j <= k; ++j)
    sum += detail::sign_power(k - j) * binomial(k, j) * binomial(nu - k - 1, 2 * j - 1);
  return sum;
}

/// F_n for any integer n, with F_1 = F_2 = 1 and F_{n-2} = F_n - F_{n-1}
/// below zero.
inline Count fibonacci(std::int64_t n) {
  Count lo = 0, hi = 1;  // (F_0, F_1)
  if (n >= 0) {
    for (std::int64_t i = 0; i < n; ++i) {
      Count next = lo + hi;
      lo = std::move(hi);
      hi = std::move(next);
    }
    return lo;
  }
  for (std::int64_t i = 0; i > n; --i) {
    Count prev = hi - lo;  // F_{i-1} = F_{i+1} - F_i
    hi = std::move(lo);
    lo = std::move(prev);
  }
  return lo;
}

/// (F_{nu-3}, sum_{k=1}^{nu} c_{nu,k}(n-2)).
inline std::pair<Count, Count> fibonacci_identity_check(std::int64_t nu) {
  detail::require(nu >= 1, "fibonacci_identity_check: nu must be >= 1");
  Count rhs = 0;
  for (std::int64_t k = 1; k <= nu; ++k) rhs += count_parts_n_minus_2(nu, k);
  return {fibonacci(nu - 3), std::move(rhs)};
}

} // namespace colorcomp

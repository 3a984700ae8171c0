#pragma once

// Naive reference enumerators for the tests. They materialize every object
// by plain recursion and share no code with the library's generators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>
#include <vector>

namespace oracle {

using Part = std::pair<std::int64_t, std::int64_t>;            // (size, color)
using Tile = std::tuple<std::int64_t, std::int64_t, std::int64_t>;  // (alpha, beta, color)

// All compositions of nu into k parts, part i in colors 1..weight(i).
inline std::vector<std::vector<Part>> colored(std::int64_t nu, std::int64_t k,
                                              const std::function<std::int64_t(std::int64_t)>& weight) {
  std::vector<std::vector<Part>> out;
  std::vector<Part> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t rem) {
    if (static_cast<std::int64_t>(cur.size()) == k) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (std::int64_t s = 1; s <= rem; ++s)
      for (std::int64_t c = 1; c <= weight(s); ++c) {
        cur.emplace_back(s, c);
        rec(rem - s);
        cur.pop_back();
      }
  };
  rec(nu);
  return out;
}

// Every k-tuple of n-dominos (any alpha in 1..n, beta in 0..n, colors from
// the matching palette), filtered to sum(alpha+beta) = n + j with j nonzero
// tiles.
inline std::vector<std::vector<Tile>> dominos(std::int64_t a, std::int64_t b, std::int64_t n,
                                              std::int64_t k, std::int64_t j) {
  std::vector<std::vector<Tile>> out;
  std::vector<Tile> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<std::int64_t>(cur.size()) == k) {
      std::int64_t sum = 0, nonzero = 0;
      for (auto [al, be, co] : cur) {
        sum += al + be;
        nonzero += (be > 0);
      }
      if (nonzero == j && sum == n + j) out.push_back(cur);
      return;
    }
    for (std::int64_t al = 1; al <= n; ++al)
      for (std::int64_t be = 0; be <= n; ++be)
        for (std::int64_t co = 1; co <= (be == 0 ? b : a); ++co) {
          cur.emplace_back(al, be, co);
          rec();
          cur.pop_back();
        }
  };
  rec();
  return out;
}

// Signed count over compositions with no part 2, one color for part 1 and
// i - 2 colors for i > 2, sign (-1)^(#1's).
inline std::int64_t restricted_signed_sum(std::int64_t nu, std::int64_t k) {
  auto all = colored(nu, k, [](std::int64_t i) { return i == 1 ? 1 : i - 2; });
  std::int64_t total = 0;
  for (const auto& c : all) {
    auto ones = std::count_if(c.begin(), c.end(), [](const Part& p) { return p.first == 1; });
    total += (ones % 2 == 0) ? 1 : -1;
  }
  return total;
}

// Fibonacci by the textbook upward recurrence for n >= 0 and F_{-n} =
// (-1)^{n+1} F_n below zero.
inline std::int64_t fib(std::int64_t n) {
  if (n < 0) return ((-n) % 2 == 0 ? -1 : 1) * fib(-n);
  std::int64_t x = 0, y = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    auto t = x + y;
    x = y;
    y = t;
  }
  return x;
}

} // namespace oracle

#pragma once

// Domain types shared by every part of the library: color laws, weight
// sequences, colored compositions and domino compositions, plus the
// validators that decide membership in the sets being counted.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorcomp {

/// Exact signed integer used for every count.
using Count = mpz_class;

/// Raised when an object or argument falls outside the set an operation is
/// defined on (a color above its bound, a tile that breaks the sum rule, ...).
class validation_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The color law w_n = a*n + b. `a` is never negative; `b` may be, but only
/// the counting routines accept b < 0.
class ColorLaw {
public:
  ColorLaw(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    if (a < 0)
      throw std::invalid_argument("color law requires a >= 0, got a = " +
                                  std::to_string(a));
  }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

  /// Number of colors available to a part of the given size.
  std::int64_t weight(std::int64_t size) const noexcept { return a_ * size + b_; }

  /// Concrete objects exist only when b >= 0.
  bool enumerable() const noexcept { return b_ >= 0; }

  friend bool operator==(const ColorLaw&, const ColorLaw&) = default;

private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Finite prefix (w_1, ..., w_N) of a color-count sequence. Indexing through
/// `operator()` is 1-based to match the usual w_n notation.
class WeightSequence {
public:
  WeightSequence() = default;
  explicit WeightSequence(std::vector<std::int64_t> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty())
      throw std::invalid_argument("weight sequence must have length >= 1");
  }

  static WeightSequence from_law(const ColorLaw& law, std::int64_t length) {
    if (length < 1)
      throw std::invalid_argument("weight sequence must have length >= 1");
    std::vector<std::int64_t> w(static_cast<std::size_t>(length));
    for (std::int64_t n = 1; n <= length; ++n)
      w[static_cast<std::size_t>(n - 1)] = law.weight(n);
    return WeightSequence(std::move(w));
  }

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(weights_.size()); }

  std::int64_t operator()(std::int64_t n) const {
    if (n < 1 || n > size())
      throw std::out_of_range("weight index " + std::to_string(n) +
                              " outside prefix of length " + std::to_string(size()));
    return weights_[static_cast<std::size_t>(n - 1)];
  }

  const std::vector<std::int64_t>& values() const noexcept { return weights_; }

  bool nonnegative() const noexcept {
    return std::all_of(weights_.begin(), weights_.end(),
                       [](std::int64_t w) { return w >= 0; });
  }

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

private:
  std::vector<std::int64_t> weights_;
};

/// Part `size` carrying color `color` (colors are 1-based).
struct ColoredPart {
  std::int64_t size = 0;
  std::int64_t color = 0;

  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

struct ColoredComposition {
  std::int64_t nu = 0;
  std::vector<ColoredPart> parts;

  std::int64_t total() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0},
                           [](std::int64_t s, const ColoredPart& p) { return s + p.size; });
  }

  friend bool operator==(const ColoredComposition&, const ColoredComposition&) = default;
  // Canonical order: lexicographic over the flattened (size, color) pairs.
  friend auto operator<=>(const ColoredComposition& lhs, const ColoredComposition& rhs) {
    if (auto c = lhs.nu <=> rhs.nu; c != 0) return c;
    return lhs.parts <=> rhs.parts;
  }
};

/// A two-cell tile (alpha, beta). Tiles with beta == 0 are zero dominos and
/// draw their color from the b palette; the others draw from the a palette.
struct DominoTile {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t color = 0;

  bool is_zero() const noexcept { return beta == 0; }

  friend auto operator<=>(const DominoTile&, const DominoTile&) = default;
};

/// A sequence of n-dominos; `n` is the ambient bound on alpha and beta.
struct DominoComposition {
  std::int64_t n = 0;
  std::vector<DominoTile> tiles;

  std::int64_t nonzero_tiles() const noexcept {
    return std::count_if(tiles.begin(), tiles.end(),
                         [](const DominoTile& t) { return !t.is_zero(); });
  }

  std::int64_t cell_sum() const noexcept {
    return std::accumulate(tiles.begin(), tiles.end(), std::int64_t{0},
                           [](std::int64_t s, const DominoTile& t) { return s + t.alpha + t.beta; });
  }

  friend bool operator==(const DominoComposition&, const DominoComposition&) = default;
  friend auto operator<=>(const DominoComposition& lhs, const DominoComposition& rhs) {
    if (auto c = lhs.n <=> rhs.n; c != 0) return c;
    return lhs.tiles <=> rhs.tiles;
  }
};

/// True iff `comp` is a composition of `nu` whose every part (i)_l satisfies
/// 1 <= l <= a*i + b. With b < 0 the same bound describes the restricted
/// families (e.g. b = -1 forbids parts of size 1).
inline bool validate_colored(const ColoredComposition& comp, const ColorLaw& law,
                             std::int64_t nu) {
  if (nu < 1 || comp.nu != nu || comp.parts.empty()) return false;
  std::int64_t total = 0;
  for (const auto& p : comp.parts) {
    if (p.size < 1 || p.color < 1 || p.color > law.weight(p.size)) return false;
    total += p.size;
  }
  return total == nu;
}

enum class DominoCheck {
  /// Tile count plus per-tile bounds: 0 < alpha <= n, 0 <= beta <= n and the
  /// palette bound for the tile's kind.
  tile_bounds_only,
  /// Additionally sum(alpha + beta) == n + j, j = number of nonzero tiles,
  /// i.e. membership in T^{a,b}_j(n, k).
  t_membership,
};

inline bool validate_domino(const DominoComposition& dc, const ColorLaw& law, std::int64_t k,
                            DominoCheck level = DominoCheck::t_membership) {
  if (dc.n < 1 || k < 1 || static_cast<std::int64_t>(dc.tiles.size()) != k) return false;
  for (const auto& t : dc.tiles) {
    if (t.alpha < 1 || t.alpha > dc.n || t.beta < 0 || t.beta > dc.n) return false;
    const std::int64_t palette = t.is_zero() ? law.b() : law.a();
    if (t.color < 1 || t.color > palette) return false;
  }
  if (level == DominoCheck::tile_bounds_only) return true;
  return dc.cell_sum() == dc.n + dc.nonzero_tiles();
}

} // namespace colorcomp

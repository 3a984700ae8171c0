#pragma once

// Demand-driven generators for colored compositions and domino compositions.
// Objects come out in canonical (lexicographic) order, one at a time; the
// generator owns a single working object that `next()` rewrites in place.

#include "colorcomp/core.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorcomp {

/// Lexicographic backtracking over fixed-length item sequences.
///
/// A `Space` supplies
///   using item_type; using budget_type;
///   std::size_t length() const;
///   budget_type initial() const;
///   budget_type consume(const budget_type&, const item_type&) const;
///   std::optional<item_type> next_item(const std::optional<item_type>& after,
///                                      const budget_type& budget,
///                                      std::size_t positions_left) const;
/// `next_item` returns the smallest item strictly greater than `after` (or the
/// smallest overall) that leaves a completable budget for `positions_left`
/// further positions. Completability is what lets `fill` never backtrack.
template <class Space>
class LexEnumerator {
public:
  using item_type = typename Space::item_type;
  using budget_type = typename Space::budget_type;

  explicit LexEnumerator(Space space) : space_(std::move(space)) {}

  /// Advances to the next sequence; false once exhausted.
  bool advance() {
    if (done_) return false;
    const std::size_t len = space_.length();
    if (!started_) {
      started_ = true;
      budgets_.assign(len, space_.initial());
      items_.clear();
      items_.reserve(len);
      if (len == 0 || !fill_from(0)) return finish();
      return true;
    }
    for (std::size_t p = len; p-- > 0;) {
      auto cand = space_.next_item(items_[p], budgets_[p], len - p - 1);
      if (!cand) continue;
      items_.resize(p);
      items_.push_back(*cand);
      if (fill_from(p + 1)) return true;
      // next_item guarantees completability, so this is unreachable
      throw std::logic_error("LexEnumerator: space reported a dead end");
    }
    return finish();
  }

  const std::vector<item_type>& items() const noexcept { return items_; }
  const Space& space() const noexcept { return space_; }

private:
  bool finish() {
    done_ = true;
    items_.clear();
    return false;
  }

  // Completes items_[p..] with the smallest feasible items.
  bool fill_from(std::size_t p) {
    const std::size_t len = space_.length();
    for (std::size_t q = p; q < len; ++q) {
      if (q > 0) budgets_[q] = space_.consume(budgets_[q - 1], items_[q - 1]);
      auto first = space_.next_item(std::nullopt, budgets_[q], len - q - 1);
      if (!first) return false;
      items_.push_back(*first);
    }
    return true;
  }

  Space space_;
  std::vector<item_type> items_;
  std::vector<budget_type> budgets_;
  bool started_ = false;
  bool done_ = false;
};

/// Colored compositions of nu into k parts where part i takes w_i colors.
class ColoredSpace {
public:
  using item_type = ColoredPart;
  using budget_type = std::int64_t;  // remaining sum

  ColoredSpace(WeightSequence w, std::int64_t nu, std::int64_t k)
      : w_(std::move(w)), nu_(nu), k_(k) {
    // completable_[m][r]: r splits into m parts of sizes with nonzero weight
    completable_.assign(static_cast<std::size_t>(k + 1),
                        std::vector<char>(static_cast<std::size_t>(nu + 1), 0));
    completable_[0][0] = 1;
    for (std::int64_t m = 1; m <= k; ++m)
      for (std::int64_t r = 1; r <= nu; ++r)
        for (std::int64_t s = 1; s <= r; ++s)
          if (w_(s) > 0 && completable_[m - 1][r - s]) {
            completable_[m][r] = 1;
            break;
          }
  }

  std::size_t length() const { return static_cast<std::size_t>(k_); }
  budget_type initial() const { return nu_; }
  budget_type consume(budget_type r, const item_type& part) const { return r - part.size; }

  std::optional<item_type> next_item(const std::optional<item_type>& after, budget_type r,
                                     std::size_t positions_left) const {
    std::int64_t size = 1;
    std::int64_t color = 1;
    if (after) {
      size = after->size;
      color = after->color + 1;
    }
    for (; size <= r; ++size, color = 1) {
      if (color > w_(size)) continue;
      if (completable_[positions_left][static_cast<std::size_t>(r - size)])
        return ColoredPart{size, color};
    }
    return std::nullopt;
  }

  std::int64_t nu() const noexcept { return nu_; }

private:
  WeightSequence w_;
  std::int64_t nu_;
  std::int64_t k_;
  std::vector<std::vector<char>> completable_;
};

/// Domino compositions in one stratum T^{a,b}_j(n, k).
class DominoSpace {
public:
  using item_type = DominoTile;
  struct budget_type {
    std::int64_t cells;    // remaining alpha + beta total
    std::int64_t nonzero;  // nonzero tiles still to place
  };

  DominoSpace(const ColorLaw& law, std::int64_t n, std::int64_t k, std::int64_t j)
      : a_(law.a()), b_(law.b()), n_(n), k_(k), j_(j) {}

  std::size_t length() const { return static_cast<std::size_t>(k_); }
  budget_type initial() const { return {n_ + j_, j_}; }
  budget_type consume(const budget_type& b, const item_type& t) const {
    return {b.cells - t.alpha - t.beta, b.nonzero - (t.is_zero() ? 0 : 1)};
  }

  std::optional<item_type> next_item(const std::optional<item_type>& after,
                                     const budget_type& budget,
                                     std::size_t positions_left) const {
    DominoTile t = after ? *after : DominoTile{1, 0, 0};
    // walk candidates (alpha, beta, color) in lexicographic order
    while (true) {
      ++t.color;
      const std::int64_t palette = t.is_zero() ? b_ : a_;
      if (t.color > palette) {
        t.color = 0;
        if (++t.beta > n_) {
          t.beta = 0;
          if (++t.alpha > n_ || t.alpha > budget.cells) return std::nullopt;
        }
        continue;
      }
      if (completable(consume(budget, t), static_cast<std::int64_t>(positions_left)))
        return t;
    }
  }

private:
  // m further tiles, `rest.nonzero` of them nonzero, must absorb `rest.cells`.
  bool completable(const budget_type& rest, std::int64_t m) const {
    const std::int64_t z = rest.nonzero;
    if (z < 0 || z > m) return false;
    if (z > 0 && a_ < 1) return false;
    if (m - z > 0 && b_ < 1) return false;
    const std::int64_t lo = 2 * z + (m - z);
    const std::int64_t hi = 2 * n_ * z + n_ * (m - z);
    return rest.cells >= lo && rest.cells <= hi;
  }

  std::int64_t a_, b_, n_, k_, j_;
};

namespace detail {

// Minimal input-iterator adaptor over a generator exposing `next()`
// returning a pointer (null at the end).
template <class Generator>
class generator_iterator {
public:
  using iterator_category = std::input_iterator_tag;
  using value_type = std::remove_cvref_t<decltype(*std::declval<Generator&>().next())>;
  using difference_type = std::ptrdiff_t;
  using pointer = const value_type*;
  using reference = const value_type&;

  generator_iterator() = default;
  explicit generator_iterator(Generator& g) : gen_(&g), cur_(g.next()) {}

  reference operator*() const { return *cur_; }
  pointer operator->() const { return cur_; }
  generator_iterator& operator++() {
    cur_ = gen_->next();
    return *this;
  }
  void operator++(int) { ++*this; }
  friend bool operator==(const generator_iterator& it, std::default_sentinel_t) {
    return it.cur_ == nullptr;
  }

private:
  Generator* gen_ = nullptr;
  pointer cur_ = nullptr;
};

} // namespace detail

/// Streams every w-color composition of nu with k parts.
class ColoredGenerator {
public:
  ColoredGenerator(WeightSequence w, std::int64_t nu, std::int64_t k)
      : enumerator_(ColoredSpace(std::move(w), nu, k)) {
    current_.nu = nu;
  }

  /// Pointer to the next composition (valid until the following call), or
  /// nullptr when exhausted.
  const ColoredComposition* next() {
    if (!enumerator_.advance()) return nullptr;
    current_.parts = enumerator_.items();
    return &current_;
  }

  auto begin() { return detail::generator_iterator<ColoredGenerator>(*this); }
  std::default_sentinel_t end() const { return {}; }

private:
  LexEnumerator<ColoredSpace> enumerator_;
  ColoredComposition current_;
};

/// Streams T^{a,b}_j(n,k), or the union over j = 0..min(n,k) in j-major
/// order when no stratum is given.
class DominoGenerator {
public:
  DominoGenerator(const ColorLaw& law, std::int64_t n, std::int64_t k,
                  std::optional<std::int64_t> j = std::nullopt)
      : law_(law), n_(n), k_(k) {
    if (j) {
      j_ = *j;
      j_last_ = *j;
    } else {
      j_ = 0;
      j_last_ = std::min(n, k);
    }
    current_.n = n;
    start_stratum();
  }

  const DominoComposition* next() {
    while (enumerator_) {
      if (enumerator_->advance()) {
        current_.tiles = enumerator_->items();
        return &current_;
      }
      if (++j_ > j_last_) {
        enumerator_.reset();
        break;
      }
      start_stratum();
    }
    return nullptr;
  }

  auto begin() { return detail::generator_iterator<DominoGenerator>(*this); }
  std::default_sentinel_t end() const { return {}; }

private:
  void start_stratum() { enumerator_.emplace(DominoSpace(law_, n_, k_, j_)); }

  ColorLaw law_;
  std::int64_t n_, k_;
  std::int64_t j_ = 0;
  std::int64_t j_last_ = 0;
  std::optional<LexEnumerator<DominoSpace>> enumerator_;
  DominoComposition current_;
};

/// Element of the signed (n-2)-color family: sign = (-1)^(number of 1's).
struct SignedComposition {
  ColoredComposition composition;
  int sign = 1;
};

/// Streams compositions of nu into k parts with no part 2, part 1 in a single
/// color and part i > 2 in i - 2 colors, each tagged with its parity sign.
class RestrictedSignedGenerator {
public:
  RestrictedSignedGenerator(std::int64_t nu, std::int64_t k)
      : inner_(restricted_weights(nu), nu, k) {}

  const SignedComposition* next() {
    const ColoredComposition* c = inner_.next();
    if (!c) return nullptr;
    current_.composition = *c;
    int ones = 0;
    for (const auto& p : c->parts) ones += (p.size == 1);
    current_.sign = (ones % 2 == 0) ? 1 : -1;
    return &current_;
  }

  auto begin() { return detail::generator_iterator<RestrictedSignedGenerator>(*this); }
  std::default_sentinel_t end() const { return {}; }

  static WeightSequence restricted_weights(std::int64_t nu) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(nu));
    for (std::int64_t i = 1; i <= nu; ++i)
      w[static_cast<std::size_t>(i - 1)] = (i == 1) ? 1 : i - 2;
    return WeightSequence(std::move(w));
  }

private:
  ColoredGenerator inner_;
  SignedComposition current_;
};

inline ColoredGenerator enumerate_colored(const WeightSequence& w, std::int64_t nu,
                                          std::int64_t k) {
  if (nu < 1 || k < 1)
    throw std::invalid_argument("enumerate_colored: nu and k must be >= 1");
  if (nu > w.size())
    throw std::invalid_argument("enumerate_colored: nu = " + std::to_string(nu) +
                                " exceeds the weight prefix of length " + std::to_string(w.size()));
  if (!w.nonnegative())
    throw std::invalid_argument("enumerate_colored: weights must be nonnegative");
  return ColoredGenerator(w, nu, k);
}

inline ColoredGenerator enumerate_colored_law(const ColorLaw& law, std::int64_t nu,
                                              std::int64_t k) {
  if (!law.enumerable())
    throw std::invalid_argument("enumerate_colored_law: requires b >= 0");
  if (nu < 1) throw std::invalid_argument("enumerate_colored_law: nu must be >= 1");
  return enumerate_colored(WeightSequence::from_law(law, nu), nu, k);
}

inline DominoGenerator enumerate_domino(const ColorLaw& law, std::int64_t n, std::int64_t k,
                                        std::optional<std::int64_t> j = std::nullopt) {
  if (!law.enumerable()) throw std::invalid_argument("enumerate_domino: requires b >= 0");
  if (n < 1 || k < 1) throw std::invalid_argument("enumerate_domino: n and k must be >= 1");
  if (j && (*j < 0 || *j > k))
    throw std::invalid_argument("enumerate_domino: requires 0 <= j <= k");
  return DominoGenerator(law, n, k, j);
}

inline RestrictedSignedGenerator enumerate_restricted_signed(std::int64_t nu, std::int64_t k) {
  if (nu < 1 || k < 1)
    throw std::invalid_argument("enumerate_restricted_signed: nu and k must be >= 1");
  if (k > nu) throw std::invalid_argument("enumerate_restricted_signed: requires k <= nu");
  return RestrictedSignedGenerator(nu, k);
}

/// Drains a generator into a vector.
template <class Generator>
auto collect(Generator&& gen) {
  using value_type = std::remove_cvref_t<decltype(*gen.next())>;
  std::vector<value_type> out;
  while (const auto* item = gen.next()) out.push_back(*item);
  return out;
}

/// Number of objects a generator yields.
template <class Generator>
std::int64_t drain_count(Generator&& gen) {
  std::int64_t n = 0;
  while (gen.next()) ++n;
  return n;
}

} // namespace colorcomp

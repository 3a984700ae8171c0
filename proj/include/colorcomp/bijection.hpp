#pragma once

// The correspondence between domino compositions T^{a,b}(nu,k) and
// (an+b)-color compositions of nu with k parts.
//
//   phi, nonzero tile (alpha, beta) color g  ->  part i = alpha+beta-1,
//                                                 color i*(g-1) + beta
//   phi, zero tile (alpha, 0) color d        ->  part alpha, color a*alpha + d
//
// psi undoes this: a color l <= a*i is written l = q*i + r with 0 < r <= i and
// becomes the nonzero tile (i-r+1, r) in color q+1; a color l > a*i becomes
// the zero tile (i, 0) in color l - a*i. For a = 0 only zero tiles exist and
// the map is the identity on (size, color); that case has its own pair of
// functions.

#include "colorcomp/core.hpp"

#include <cstdint>
#include <string>

namespace colorcomp {

namespace detail {

inline void require_law(const ColorLaw& law, const char* op) {
  if (law.a() < 1)
    throw std::invalid_argument(std::string(op) + ": requires a >= 1 (use the a = 0 variant)");
  if (law.b() < 0) throw std::invalid_argument(std::string(op) + ": requires b >= 0");
}

inline ColoredPart phi_tile(const DominoTile& t, const ColorLaw& law) {
  if (t.is_zero()) return {t.alpha, law.a() * t.alpha + t.color};
  const std::int64_t size = t.alpha + t.beta - 1;
  return {size, size * (t.color - 1) + t.beta};
}

inline DominoTile psi_part(const ColoredPart& p, const ColorLaw& law) {
  const std::int64_t i = p.size;
  const std::int64_t l = p.color;
  if (l > law.a() * i) return {i, 0, l - law.a() * i};
  const std::int64_t r = (l - 1) % i + 1;  // remainder in (0, i]
  const std::int64_t q = (l - r) / i;
  return {i - r + 1, r, q + 1};
}

} // namespace detail

/// Domino composition -> colored composition of dc.n with the same number of
/// parts. Throws validation_error if `dc` is not in T^{a,b}(n,k).
inline ColoredComposition phi(const DominoComposition& dc, const ColorLaw& law) {
  detail::require_law(law, "phi");
  const auto k = static_cast<std::int64_t>(dc.tiles.size());
  if (!validate_domino(dc, law, k, DominoCheck::t_membership))
    throw validation_error("phi: input is not a valid domino composition for this law");
  ColoredComposition out;
  out.nu = dc.n;
  out.parts.reserve(dc.tiles.size());
  for (const auto& t : dc.tiles) out.parts.push_back(detail::phi_tile(t, law));
  if (!validate_colored(out, law, dc.n))
    throw std::logic_error("phi: produced an invalid colored composition");
  return out;
}

/// Colored composition -> member of T^{a,b}_j(nu,k), where j counts the parts
/// whose color is at most a * size.
inline DominoComposition psi(const ColoredComposition& comp, const ColorLaw& law) {
  detail::require_law(law, "psi");
  if (!validate_colored(comp, law, comp.nu))
    throw validation_error("psi: input is not a valid colored composition for this law");
  DominoComposition out;
  out.n = comp.nu;
  out.tiles.reserve(comp.parts.size());
  for (const auto& p : comp.parts) out.tiles.push_back(detail::psi_part(p, law));
  return out;
}

inline ColoredComposition phi_zero_a(const DominoComposition& dc, const ColorLaw& law) {
  if (law.a() != 0 || law.b() < 1)
    throw std::invalid_argument("phi_zero_a: requires a = 0 and b >= 1");
  for (const auto& t : dc.tiles)
    if (!t.is_zero()) throw validation_error("phi_zero_a: nonzero tiles do not exist when a = 0");
  const auto k = static_cast<std::int64_t>(dc.tiles.size());
  if (!validate_domino(dc, law, k, DominoCheck::t_membership))
    throw validation_error("phi_zero_a: input is not a valid domino composition for this law");
  ColoredComposition out;
  out.nu = dc.n;
  for (const auto& t : dc.tiles) out.parts.push_back({t.alpha, t.color});
  return out;
}

inline DominoComposition psi_zero_a(const ColoredComposition& comp, const ColorLaw& law) {
  if (law.a() != 0 || law.b() < 1)
    throw std::invalid_argument("psi_zero_a: requires a = 0 and b >= 1");
  if (!validate_colored(comp, law, comp.nu))
    throw validation_error("psi_zero_a: input is not a valid colored composition for this law");
  DominoComposition out;
  out.n = comp.nu;
  for (const auto& p : comp.parts) out.tiles.push_back({p.size, 0, p.color});
  return out;
}

} // namespace colorcomp

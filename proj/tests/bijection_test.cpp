#include "colorcomp/bijection.hpp"
#include "colorcomp/counting.hpp"
#include "colorcomp/enumeration.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace colorcomp;

TEST(Phi, WorkedExamples) {
  const ColorLaw law(1, 2);
  EXPECT_EQ(phi({2, {{1, 2, 1}}}, law), (ColoredComposition{2, {{2, 2}}}));
  EXPECT_EQ(phi({3, {{3, 0, 2}}}, law), (ColoredComposition{3, {{3, 5}}}));
  EXPECT_EQ(phi({7, {{3, 0, 2}, {1, 0, 1}, {2, 2, 1}}}, law),
            (ColoredComposition{7, {{3, 5}, {1, 2}, {3, 2}}}));
  // a > 1: color (2)(2-1) + 1
  const ColoredComposition mapped = phi({2, {{2, 1, 2}}}, ColorLaw(2, 1));
  EXPECT_EQ(mapped, (ColoredComposition{2, {{2, 3}}}));
  EXPECT_EQ(psi(mapped, ColorLaw(2, 1)), (DominoComposition{2, {{2, 1, 2}}}));
}

// The full (n+2)-color table for parts 1..3.
TEST(Phi, NPlusTwoTable) {
  const ColorLaw law(1, 2);
  const std::vector<std::pair<DominoTile, ColoredPart>> table{
      {{1, 1, 1}, {1, 1}}, {{1, 0, 1}, {1, 2}}, {{1, 0, 2}, {1, 3}},
      {{2, 1, 1}, {2, 1}}, {{1, 2, 1}, {2, 2}}, {{2, 0, 1}, {2, 3}}, {{2, 0, 2}, {2, 4}},
      {{3, 1, 1}, {3, 1}}, {{2, 2, 1}, {3, 2}}, {{1, 3, 1}, {3, 3}}, {{3, 0, 1}, {3, 4}},
      {{3, 0, 2}, {3, 5}}};
  for (const auto& [tile, part] : table) {
    DominoComposition dc{part.size, {tile}};
    ColoredComposition cc{part.size, {part}};
    EXPECT_EQ(phi(dc, law), cc);
    EXPECT_EQ(psi(cc, law), dc);
  }
}

TEST(Psi, WorkedExamples) {
  const ColorLaw law(1, 2);
  EXPECT_EQ(psi({3, {{3, 5}}}, law), (DominoComposition{3, {{3, 0, 2}}}));
  EXPECT_EQ(psi({2, {{2, 2}}}, law), (DominoComposition{2, {{1, 2, 1}}}));
  EXPECT_EQ(psi({1, {{1, 1}}}, law), (DominoComposition{1, {{1, 1, 1}}}));
  EXPECT_EQ(psi({7, {{3, 5}, {1, 2}, {3, 2}}}, law),
            (DominoComposition{7, {{3, 0, 2}, {1, 0, 1}, {2, 2, 1}}}));
}

TEST(Psi, RemainderInClosedRange) {
  // l = 4 = 1*2 + 2 for i = 2, a = 3: r = 2 (not 0), q = 1
  EXPECT_EQ(psi({2, {{2, 4}}}, ColorLaw(3, 0)), (DominoComposition{2, {{1, 2, 2}}}));
  // l = 6 = 2*2 + 2: q = 2 < a = 3
  EXPECT_EQ(psi({2, {{2, 6}}}, ColorLaw(3, 0)), (DominoComposition{2, {{1, 2, 3}}}));
}

TEST(Psi, ZeroTileColorsBeyondPartSize) {
  // b > i: 1_4 under law (1, 3) is the zero tile (1,0) in color 3
  EXPECT_EQ(psi({1, {{1, 4}}}, ColorLaw(1, 3)), (DominoComposition{1, {{1, 0, 3}}}));
  EXPECT_EQ(psi({1, {{1, 5}}}, ColorLaw(2, 3)), (DominoComposition{1, {{1, 0, 3}}}));
}

TEST(Bijection, Errors) {
  const ColorLaw law(1, 2);
  EXPECT_THROW(phi({2, {{1, 2, 1}}}, ColorLaw(0, 2)), std::invalid_argument);
  EXPECT_THROW(psi({2, {{2, 1}}}, ColorLaw(0, 2)), std::invalid_argument);
  EXPECT_THROW(phi({2, {{2, 0, 3}}}, law), validation_error);      // zero color > b
  EXPECT_THROW(phi({4, {{1, 1, 1}, {4, 0, 1}, {1, 3, 1}}}, ColorLaw(1, 1)), validation_error);
  EXPECT_THROW(psi({2, {{2, 5}}}, law), validation_error);
  EXPECT_THROW(psi({3, {{2, 1}}}, law), validation_error);         // sizes do not sum to nu
}

TEST(PhiZeroA, Examples) {
  const ColorLaw law(0, 2);
  EXPECT_EQ(phi_zero_a({2, {{2, 0, 1}}}, law), (ColoredComposition{2, {{2, 1}}}));
  EXPECT_EQ(phi_zero_a({2, {{1, 0, 2}, {1, 0, 2}}}, law),
            (ColoredComposition{2, {{1, 2}, {1, 2}}}));
  EXPECT_THROW(phi_zero_a({1, {{1, 1, 1}}}, law), validation_error);
  EXPECT_THROW(phi_zero_a({2, {{2, 0, 1}}}, ColorLaw(1, 2)), std::invalid_argument);
}

TEST(PhiZeroA, RoundTripOverEnumeration) {
  for (std::int64_t b = 1; b <= 3; ++b)
    for (std::int64_t nu = 1; nu <= 6; ++nu)
      for (std::int64_t k = 1; k <= nu; ++k) {
        const ColorLaw law(0, b);
        std::int64_t seen = 0;
        for (const auto& dc : enumerate_domino(law, nu, k)) {
          EXPECT_EQ(psi_zero_a(phi_zero_a(dc, law), law), dc);
          ++seen;
        }
        EXPECT_EQ(Count(static_cast<long>(seen)), count_parts_closed(law, nu, k));
      }
}

TEST(Bijection, RoundTripsAndStrata) {
  for (std::int64_t a = 1; a <= 3; ++a)
    for (std::int64_t b = 0; b <= 2; ++b)
      for (std::int64_t nu = 1; nu <= 5; ++nu)
        for (std::int64_t k = 1; k <= nu; ++k) {
          const ColorLaw law(a, b);
          std::set<ColoredComposition> images;
          for (const auto& dc : enumerate_domino(law, nu, k)) {
            const auto c = phi(dc, law);
            EXPECT_EQ(c.parts.size(), dc.tiles.size());
            EXPECT_EQ(c.total(), nu);
            const auto low = std::count_if(c.parts.begin(), c.parts.end(), [&](const ColoredPart& p) {
              return p.color <= a * p.size;
            });
            EXPECT_EQ(low, dc.nonzero_tiles());
            EXPECT_EQ(psi(c, law), dc);
            EXPECT_TRUE(images.insert(c).second);
          }
          std::int64_t colored = 0;
          for (const auto& c : enumerate_colored_law(law, nu, k)) {
            EXPECT_EQ(phi(psi(c, law), law), c);
            EXPECT_TRUE(images.count(c));
            ++colored;
          }
          EXPECT_EQ(static_cast<std::int64_t>(images.size()), colored);
        }
}

#include <gtest/gtest.h>

#include "ordhomeo/error.hpp"
#include "ordhomeo/fixed_points.hpp"
#include "ordhomeo/text_format.hpp"
#include "support.hpp"

using namespace support;

namespace
{

PwHomeo swap_block() { return parse_homeo("[0, 0] -> [0, 0]\n(0, w] -> (w, w*2]\n(w, w*2] -> (0, w]\n"); }

} // namespace

TEST(FixedPoints, Examples)
{
  EXPECT_EQ(format(fixed_points(swap_block())), "{0} ∪ (w*2, ∞)");
  EXPECT_EQ(fixed_points(PwHomeo{}), OrdinalSet::everything());

  // ]0, w] -> ]1, w] contributes exactly {w}
  PwHomeo g = parse_homeo("[0, 0] -> [0, 0]\n(0, w] -> (1, w]\n(w, w+1] -> (0, 1]\n(w+1, w*2] -> (w, w*2]\n");
  EXPECT_EQ(format(fixed_points(g)), "{0} ∪ {w} ∪ [w*2, ∞)");
}

TEST(FixedPoints, MatchesGridScan)
{
  Gen gen(41);
  for (int n = 0; n < 150; ++n) {
    PwHomeo g = gen.map();
    OrdinalSet fix = fixed_points(g);
    ASSERT_TRUE(fix.has_tail());
    for (auto const &x : grid())
      ASSERT_EQ(fix.contains(x), g.apply(x) == x) << format(x) << "\n" << format_homeo(g);
  }
}

TEST(FixedPoints, CommonFixedPoints)
{
  PwHomeo s = swap_block();
  EXPECT_EQ(common_fixed_points(std::vector<PwHomeo>{s, PwHomeo{}}), fixed_points(s));
  EXPECT_EQ(format(common_fixed_points(std::vector<PwHomeo>{s, swap_points(N(0), N(1))})), "(w*2, ∞)");
  EXPECT_EQ(common_fixed_points(std::vector<PwHomeo>{s, inverse(s)}), fixed_points(s));
  EXPECT_THROW(common_fixed_points(std::vector<PwHomeo>{}), DomainError);
}

// Integers fixed cofinally below w force w to be fixed.
TEST(FixedPoints, ClosureAtOmega)
{
  Gen gen(42);
  for (int n = 0; n < 200; ++n) {
    OrdinalSet fix = fixed_points(gen.map());
    if (fix.has_cofinal_integers())
      ASSERT_TRUE(fix.contains(W()));
  }
}

TEST(FixpointAbove, Examples)
{
  std::vector<PwHomeo> s{swap_block()};
  EXPECT_EQ(find_fixed_point_above(s, N(1)), O("w*3"));
  EXPECT_EQ(find_fixed_point_above(std::vector<PwHomeo>{PwHomeo{}}, N(5)), W());
  EXPECT_THROW(find_fixed_point_above(std::vector<PwHomeo>{}, N(1)), DomainError);
}

// Below the support bound the literal iteration can creep towards a limit in
// infinitely many steps; the accelerated answer must dominate every step of it
// and match it exactly whenever it escapes the supports.
TEST(FixpointAbove, AgreesWithLiteralIteration)
{
  Gen gen(43);
  int exact = 0;
  for (int n = 0; n < 200; ++n) {
    std::vector<PwHomeo> gs;
    for (int k = gen.uniform(1, 3); k > 0; --k)
      gs.push_back(gen.map());
    Ordinal alpha = gen.below_w3();
    Ordinal r = find_fixed_point_above(gs, alpha);
    ASSERT_GT(r, alpha);
    ASSERT_TRUE(common_fixed_points(gs).contains(r));

    auto seq = plain_iteration(gs, alpha, 60);
    Ordinal bound = max_support(gs);
    bool escaped = false;
    for (auto const &b : seq) {
      if (b > bound) {
        ASSERT_EQ(r, add(b, W()));
        escaped = true;
        break;
      }
      ASSERT_LT(b, r);
    }
    exact += escaped;
  }
  EXPECT_GT(exact, 50);
}

TEST(Stratification, Examples)
{
  PwHomeo s = swap_block();
  EXPECT_EQ(invariant_prefix(s, N(1)), O("w*2"));
  EXPECT_EQ(invariant_prefix(PwHomeo{}, O("w+4")), O("w+4"));
  EXPECT_EQ(invariant_point(swap_points(N(3), N(7)), N(4)), N(7));
  EXPECT_EQ(sup_image(s, N(1)), O("w+1"));
  EXPECT_EQ(sup_image(s, O("w+1")), O("w*2"));
}

// sup_image is attained, and the fixed points of the stratification are
// minimal among grid candidates.
TEST(Stratification, MinimalOnGrid)
{
  Gen gen(44);
  auto pts = grid();
  for (int n = 0; n < 150; ++n) {
    PwHomeo g = gen.map();
    Ordinal alpha = gen.below_w3();

    Ordinal s = sup_image(g, alpha);
    ASSERT_LE(inverse(g).apply(s), alpha);
    for (auto const &x : pts)
      if (x <= alpha)
        ASSERT_LE(g.apply(x), s);

    Ordinal p = invariant_prefix(g, alpha);
    ASSERT_GE(p, alpha);
    ASSERT_LE(sup_image(g, p), p);
    Ordinal q = invariant_point(g, alpha);
    ASSERT_GE(q, p);
    ASSERT_LE(sup_image(g, q), q);
    ASSERT_LE(sup_image(inverse(g), q), q);
    for (auto const &c : pts) {
      if (c < alpha)
        continue;
      if (c < p)
        ASSERT_GT(sup_image(g, c), c) << format(c);
      if (c < q)
        ASSERT_TRUE(sup_image(g, c) > c || sup_image(inverse(g), c) > c) << format(c);
    }
  }
}

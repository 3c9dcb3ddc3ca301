#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace sqz;
using testing_support::all_antichains;
using testing_support::antichain_of;

namespace {

FFacet ff(std::initializer_list<int> v) { return FFacet(Face(std::vector<int>(v))); }

Antichain worked_k3() {
  return antichain_of(3, 14, {{1, 2, 3, 4, 13, 14}, {1, 2, 6, 7, 11, 12}, {2, 3, 4, 5, 12, 13}, {2, 3, 5, 6, 10, 11},
                              {2, 3, 7, 8, 9, 10}});
}

Antichain worked_k2() { return antichain_of(2, 8, {{1, 2, 7, 8}, {3, 4, 6, 7}}); }

}  // namespace

TEST(FFacet, Validation) {
  EXPECT_THROW(ff({1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(ff({1, 3}), std::invalid_argument);
  EXPECT_EQ(FFacet::from_starts({1, 4}), ff({1, 2, 4, 5}));
  EXPECT_EQ(ff({}).k(), 0);
}

TEST(GridPoint, Validation) {
  EXPECT_THROW(GridPoint({2, 2}), std::invalid_argument);
  EXPECT_THROW(GridPoint({0, 2}), std::invalid_argument);
}

TEST(Order, LeqExamples) {
  EXPECT_TRUE(leq_p(ff({1, 2, 6, 7}), ff({1, 2, 7, 8})));
  EXPECT_FALSE(leq_p(ff({2, 3, 5, 6}), ff({1, 2, 7, 8})));
  EXPECT_TRUE(leq_p(ff({2, 3, 5, 6}), ff({2, 3, 5, 6})));
  EXPECT_THROW(leq_p(ff({1, 2}), ff({1, 2, 4, 5})), std::invalid_argument);
}

TEST(Order, PrecExamples) {
  EXPECT_TRUE(prec_p(ff({2, 3, 5, 6}), ff({3, 4, 6, 7})));
  EXPECT_FALSE(prec_p(ff({1, 2, 6, 7}), ff({1, 2, 7, 8})));
  EXPECT_FALSE(prec_p(ff({1, 2, 6, 7}), ff({1, 2, 6, 7})));
  EXPECT_TRUE(prec_p(ff({}), ff({})));
}

TEST(Order, AntichainComparisons) {
  const Antichain s = worked_k2();
  const Antichain t = antichain_of(2, 8, {{2, 3, 5, 6}});
  const Antichain t2 = antichain_of(2, 8, {{1, 2, 6, 7}});
  const Antichain none(2, 8);
  EXPECT_TRUE(antichain_prec(t, s));
  EXPECT_TRUE(antichain_leq(t2, s));
  EXPECT_FALSE(antichain_prec(t2, s));
  EXPECT_TRUE(antichain_leq(none, s));
  EXPECT_TRUE(antichain_prec(none, s));
  EXPECT_THROW(antichain_leq(Antichain(2, 9), s), std::invalid_argument);
}

TEST(Antichain, RejectsComparableOrOutside) {
  EXPECT_THROW(antichain_of(2, 8, {{1, 2, 6, 7}, {1, 2, 7, 8}}), std::invalid_argument);
  EXPECT_THROW(antichain_of(2, 8, {{1, 2, 8, 9}}), std::invalid_argument);
  EXPECT_THROW(antichain_of(2, 8, {{1, 2}}), std::invalid_argument);
}

TEST(EnumerateF, Examples) {
  const auto six = enumerate_F(2, 1, 6);
  std::vector<std::vector<int>> starts;
  for (const FFacet& f : six) starts.push_back(f.starts());
  EXPECT_EQ(starts, (std::vector<std::vector<int>>{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}}));
  EXPECT_EQ(enumerate_F(1, 1, 3), (std::vector<FFacet>{ff({1, 2}), ff({2, 3})}));
  EXPECT_TRUE(enumerate_F(2, 6, 8).empty());
}

TEST(ShiftDown, Examples) {
  EXPECT_EQ(shift_down(worked_k2()), antichain_of(2, 8, {{2, 3, 5, 6}}));
  EXPECT_TRUE(shift_down(antichain_of(2, 8, {{1, 2, 3, 4}})).empty());
  EXPECT_EQ(shift_down(antichain_of(2, 8, {{2, 3, 5, 6}})), antichain_of(2, 8, {{1, 2, 4, 5}}));
}

TEST(OrderIdeal, Examples) {
  const Antichain s = antichain_of(2, 6, {{1, 2, 5, 6}, {2, 3, 4, 5}});
  EXPECT_EQ(order_ideal(s), (std::vector<FFacet>{ff({1, 2, 3, 4}), ff({1, 2, 4, 5}), ff({1, 2, 5, 6}), ff({2, 3, 4, 5})}));
  EXPECT_EQ(order_ideal(antichain_of(2, 8, {{5, 6, 7, 8}})), enumerate_F(2, 1, 8));
  EXPECT_TRUE(order_ideal(Antichain(2, 8)).empty());
}

TEST(IdealWithMin, Examples) {
  const Antichain s = antichain_of(2, 6, {{1, 2, 5, 6}, {2, 3, 4, 5}});
  EXPECT_EQ(ideal_with_min(s, 2), (std::vector<FFacet>{ff({2, 3, 4, 5})}));
  EXPECT_EQ(ideal_with_min(s, 1), order_ideal(s));
  EXPECT_TRUE(ideal_with_min(s, 6).empty());
  EXPECT_THROW(ideal_with_min(s, 0), std::invalid_argument);
}

TEST(Restrict, WorkedExample) {
  const Antichain s = worked_k3();
  EXPECT_EQ(restrict(s, Face{1, 2}),
            antichain_of(2, 14, {{3, 4, 13, 14}, {6, 7, 11, 12}, {4, 5, 12, 13}, {7, 8, 9, 10}}));
  EXPECT_EQ(restrict(s, Face{2, 3}), antichain_of(2, 14, {{4, 5, 12, 13}, {5, 6, 10, 11}, {7, 8, 9, 10}}));
  EXPECT_TRUE(restrict(s, Face{3, 4}).empty());
  const Antichain full = restrict(s, Face::interval(2, 7));
  ASSERT_EQ(full.size(), 1u);
  EXPECT_TRUE(full.elements().front().face().empty());
  EXPECT_TRUE(restrict(s, Face::interval(3, 8)).empty());
}

TEST(Restrict, Errors) {
  const Antichain s = worked_k2();
  EXPECT_THROW(restrict(s, Face{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(restrict(s, Face{1, 3}), std::invalid_argument);
  EXPECT_THROW(restrict(s, Face::interval(1, 6)), std::invalid_argument);
}

TEST(RMap, Examples) {
  EXPECT_EQ(R_map(GridPoint{1, 3, 4}), ff({1, 2, 4, 5, 6, 7}));
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 10; ++n) {
      const FFacet g = R_map(maximal_slope_point(k, n));
      Face want = Face{1, 2}.set_union(Face::interval(n - 2 * k + 3, n));
      EXPECT_EQ(g.face(), want);
    }
  for (const GridPoint& x : enumerate_P(2, 6)) EXPECT_EQ(R_inv(R_map(x)), x);
}

TEST(EnumerateAntichains, SmallCounts) {
  EXPECT_EQ(count_antichains(1, 3), 3u);
  for (const GridAntichain& a : enumerate_antichains(2, 6, GridPoint{1, 4})) EXPECT_TRUE(a.contains(GridPoint{1, 4}));
  const auto p = oracle::grid(2, 5);
  EXPECT_EQ(count_antichains(2, 5), oracle::antichain_count(p));
}

TEST(EnumerateAntichains, DeterministicLexOrder) {
  const auto all = enumerate_antichains(2, 8);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].elements(), all[i].elements());
  EXPECT_EQ(all, enumerate_antichains(2, 8));
}

TEST(Format, RoundTrip) {
  const Antichain s = worked_k2();
  EXPECT_EQ(format_antichain(s), "(1,2,7,8) (3,4,6,7)");
  EXPECT_EQ(parse_antichain(format_antichain(s), 2, 8), s);
  EXPECT_EQ(parse_antichain("(1,6) (3,5)", 2, 8), s);
  EXPECT_EQ(parse_antichain("", 2, 8), Antichain(2, 8));
  EXPECT_THROW(parse_antichain("(1,2,7)", 2, 8), std::invalid_argument);
  EXPECT_THROW(parse_antichain("1,2,7,8", 2, 8), std::invalid_argument);
  EXPECT_THROW(parse_antichain("(1,7)", 2, 8), std::invalid_argument);
  const Antichain unit(0, 4, {FFacet()});
  EXPECT_EQ(format_antichain(unit), "()");
  EXPECT_EQ(parse_antichain("()", 0, 4), unit);
}

// R is a poset isomorphism between P_k^n and F_{2k}^{[1,n]}.
TEST(Property, RIsIsomorphism) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 10; ++n) {
      const auto p = enumerate_P(k, n);
      const auto f = enumerate_F(k, 1, n);
      ASSERT_EQ(p.size(), f.size());
      std::vector<FFacet> image;
      for (const GridPoint& x : p) image.push_back(R_map(x));
      std::sort(image.begin(), image.end());
      ASSERT_EQ(image, f);
      for (const GridPoint& x : p)
        for (const GridPoint& y : p) ASSERT_EQ(leq_p(x, y), leq_p(R_map(x), R_map(y)));
    }
}

TEST(Property, ShiftDownCommutesWithR) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 10; ++n)
      for (const GridAntichain& a : enumerate_antichains(k, n)) ASSERT_EQ(R_map(shift_down(a)), shift_down(R_map(a)));
}

TEST(Property, CountsMatchSubsetOracle) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 12; ++n) {
      const auto p = oracle::grid(k, n);
      if (p.size() > 20) continue;
      ASSERT_EQ(count_antichains(k, n), oracle::antichain_count(p)) << k << ' ' << n;
      const auto g = maximal_slope_point(k, n).coords();
      ASSERT_EQ(count_antichains(k, n, maximal_slope_point(k, n)), oracle::antichain_count(p, &g)) << k << ' ' << n;
    }
}

TEST(Property, IdealMatchesDownClosureOracle) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 10; ++n)
      for (const Antichain& s : all_antichains(k, n)) {
        std::vector<oracle::Set> gens;
        for (const FFacet& x : s) gens.push_back(x.coords());
        const auto closure = oracle::down_closure(gens);
        std::vector<oracle::Set> ideal;
        for (const FFacet& x : order_ideal(s)) ideal.push_back(x.coords());
        ASSERT_EQ(ideal, std::vector<oracle::Set>(closure.begin(), closure.end()));
        ASSERT_EQ(Antichain(k, n, maximal_elements(order_ideal(s))), s);
      }
}

TEST(Property, RestrictionMonotoneShiftAndStrict) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k; n <= 9; ++n) {
      const auto all = all_antichains(k, n);
      for (const Antichain& s : all) {
        for (int i = 1; i + 2 <= n; ++i) {
          const Antichain lo = restrict(s, Face{i, i + 1});
          const Antichain hi = restrict(s, Face{i + 1, i + 2});
          ASSERT_TRUE(antichain_leq(hi, lo));
          ASSERT_EQ(restrict(shift_down(s), Face{i, i + 1}), shift_down(hi));
        }
      }
      for (const Antichain& s : all)
        for (const Antichain& t : all) {
          if (!antichain_prec(t, s)) continue;
          for (int l = 1; l <= k; ++l)
            for (int i = 1; i + 2 * l <= n; ++i)
              ASSERT_TRUE(antichain_prec(restrict(t, Face::interval(i, i + 2 * l - 1)),
                                         restrict(s, Face::interval(i + 1, i + 2 * l))))
                  << format_antichain(s) << " / " << format_antichain(t) << " l=" << l << " i=" << i;
        }
    }
}

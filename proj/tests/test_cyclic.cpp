#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace sqz;
using testing_support::sets;

TEST(CyclicParams, Validation) {
  EXPECT_THROW(CyclicParams(4, 4), std::invalid_argument);
  EXPECT_THROW(CyclicParams(1, 5), std::invalid_argument);
  EXPECT_NO_THROW(CyclicParams(4, 5));
}

TEST(GaleEven, EvenBlockPatterns) {
  const CyclicParams p(4, 6);
  EXPECT_TRUE(gale_even(Face{1, 2, 3, 4}, p));
  EXPECT_FALSE(gale_even(Face{1, 2, 4, 6}, p));
  EXPECT_TRUE(gale_even(Face{2, 3, 4, 5}, p));
  EXPECT_THROW(gale_even(Face{1, 2, 3}, p), std::invalid_argument);
  EXPECT_THROW(gale_even(Face{1, 2, 3, 7}, p), std::invalid_argument);
}

TEST(CyclicBoundary, FacetCounts) {
  EXPECT_EQ(cyclic_boundary(CyclicParams(4, 6)).num_facets(), 9u);
  EXPECT_EQ(cyclic_boundary(CyclicParams(4, 8)).num_facets(), 20u);
  EXPECT_EQ(sets(cyclic_boundary(CyclicParams(2, 5))),
            (std::vector<oracle::Set>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(CyclicBoundary, MatchesAllPairsGaleOracle) {
  for (int d = 2; d <= 7; ++d)
    for (int n = d + 1; n <= 12; ++n) {
      const CyclicParams p(d, n);
      ASSERT_EQ(sets(cyclic_boundary(p)), oracle::gale_facets(d, n)) << "d=" << d << " n=" << n;
    }
}

TEST(CyclicBoundary, NeighborlyAndSphere) {
  for (int d = 3; d <= 6; ++d)
    for (int n = d + 2; n <= 9; ++n) {
      const Complex c = cyclic_boundary(CyclicParams(d, n));
      EXPECT_TRUE(is_i_neighborly(c, d / 2, Face::interval(1, n)).holds()) << d << ' ' << n;
      EXPECT_TRUE(sphere_sanity(c).holds()) << d << ' ' << n;
    }
}

TEST(CyclicBoundary, AllEdgesOfC46) {
  const auto edges = all_faces(cyclic_boundary(CyclicParams(4, 6)), 1);
  int count = 0;
  for (const Face& f : edges) count += f.size() == 2;
  EXPECT_EQ(count, 15);
}

TEST(CyclicBoundary, LinkOfLastVertexIsOddCyclic) {
  const Complex c = cyclic_boundary(CyclicParams(4, 7));
  EXPECT_EQ(sets(link(c, Face{7})), oracle::gale_facets(3, 6));
}

TEST(CyclicBoundary, AntistarOfLastVertexIsTopSqueezedBall) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k + 1; n <= 10; ++n) {
      const Complex c = cyclic_boundary(CyclicParams(2 * k, n + 1));
      const Antichain top(k, n, {FFacet(Face::interval(n - 2 * k + 1, n))});
      ASSERT_EQ(antistar(c, Face{n + 1}), squeezed_ball(top)) << k << ' ' << n;
    }
}

TEST(AdjacentPairUnions, MatchesFilterOracle) {
  for (int k = 0; k <= 3; ++k)
    for (int m = 1; m <= 4; ++m)
      for (int n = 0; n <= 11; ++n) ASSERT_EQ(sets(adjacent_pair_unions(k, m, n)), oracle::pair_unions(k, m, n));
  EXPECT_THROW(adjacent_pair_unions(-1, 1, 4), std::invalid_argument);
}

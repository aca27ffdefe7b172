#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ssot/shapes.hpp"
#include "support.hpp"

namespace ssot {
namespace {

using testing::partitions_up_to;
using testing::strong_compositions;

TEST(Partition, TrimsZerosAndRejectsIncreasing) {
  EXPECT_EQ(Partition({2, 1, 0, 0}), (Partition{2, 1}));
  EXPECT_EQ(Partition({2, 1}).size(), 3);
  EXPECT_TRUE(Partition({0}).empty());
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
}

TEST(Partition, CornersAndAddableBoxes) {
  const Partition p{2, 1};
  EXPECT_EQ(p.removable_boxes(), (std::vector<Box>{{1, 2}, {2, 1}}));
  EXPECT_EQ(p.addable_boxes(), (std::vector<Box>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(p.with_box({2, 2}), (Partition{2, 2}));
  EXPECT_EQ(p.without_box({1, 2}), (Partition{1, 1}));
  EXPECT_THROW(p.with_box({3, 2}), std::invalid_argument);
}

TEST(Box, NorthEastOrder) {
  EXPECT_TRUE(north_east_less({2, 1}, {1, 2}));
  EXPECT_TRUE(north_east_less({1, 1}, {1, 3}));
  EXPECT_FALSE(north_east_less({1, 1}, {2, 2}));
  EXPECT_FALSE(north_east_less({1, 2}, {1, 2}));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate({3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate({2, 2, 1, 1}), (Partition{4, 2}));
  EXPECT_EQ(conjugate({}), Partition{});
}

TEST(Conjugate, IsAnInvolution) {
  for (const Partition& p : partitions_up_to(8)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(EvenPartition, Examples) {
  EXPECT_TRUE(is_even_partition({4, 2}));
  EXPECT_FALSE(is_even_partition({3, 2}));
  EXPECT_TRUE(is_even_partition({}));
}

TEST(Flat, Examples) {
  EXPECT_EQ(flat(Composition{0, 2, 3, 0, 2}), (Composition{2, 3, 2}));
  EXPECT_EQ(flat(Composition{2, 3, 2}), (Composition{2, 3, 2}));
  EXPECT_EQ(flat(Composition{0, 0}), Composition{});
}

TEST(Flat, IdempotentAndSizePreserving) {
  // All compositions with parts <= 4 and length <= 5.
  for (int len = 0; len <= 5; ++len) {
    std::vector<int> parts(static_cast<std::size_t>(len), 0);
    while (true) {
      const Composition c(parts);
      EXPECT_EQ(flat(flat(c)), flat(c));
      EXPECT_EQ(flat(c).size(), c.size());
      EXPECT_TRUE(flat(c).is_strong());
      std::size_t i = 0;
      while (i < parts.size() && parts[i] == 4) parts[i++] = 0;
      if (i == parts.size()) break;
      ++parts[i];
    }
  }
}

TEST(Composition, EqualityIgnoresTrailingZeros) {
  EXPECT_EQ((Composition{0, 2, 0}), (Composition{0, 2}));
  EXPECT_NE((Composition{0, 2}), (Composition{2}));
  EXPECT_EQ((Composition{2, 2, 1}).to_string(), "221");
  EXPECT_EQ((Composition{12, 1}).to_string(), "(12,1)");
}

TEST(Refines, Examples) {
  EXPECT_TRUE(refines({2, 2, 1}, {2, 3}));
  EXPECT_TRUE(refines({2, 3}, {2, 3}));
  EXPECT_FALSE(refines({3, 2}, {2, 3}));
  EXPECT_THROW(refines({2, 0, 3}, {2, 3}), std::invalid_argument);
}

TEST(RefSet, Examples) {
  const std::vector<Composition> r = ref_set({2, 3});
  const std::set<Composition> got(r.begin(), r.end());
  const std::set<Composition> want{{2, 3}, {2, 2, 1}, {2, 1, 2}, {2, 1, 1, 1},
                                   {1, 1, 3}, {1, 1, 2, 1}, {1, 1, 1, 2}, {1, 1, 1, 1, 1}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(r.size(), 8u);
  EXPECT_EQ(ref_set({1}), (std::vector<Composition>{{1}}));
  EXPECT_EQ(ref_set({2}), (std::vector<Composition>{{2}, {1, 1}}));
  EXPECT_THROW(ref_set({0, 1}), std::invalid_argument);
}

TEST(RefSet, AgreesWithRefinesExhaustively) {
  for (int m = 1; m <= 6; ++m) {
    const std::vector<Composition> all = strong_compositions(m);
    for (const Composition& a : all) {
      const std::vector<Composition> r = ref_set(a);
      EXPECT_TRUE(std::is_sorted(r.begin(), r.end(), std::greater<>()));
      for (const Composition& b : all) {
        const bool in = std::find(r.begin(), r.end(), b) != r.end();
        EXPECT_EQ(in, refines(b, a)) << b << " vs " << a;
      }
    }
  }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_leq({1, 1, 1}, {2, 1}));
  EXPECT_FALSE(dominance_leq({3}, {2, 1}));
  EXPECT_TRUE(dominance_leq({2, 2}, {2, 2}));
  EXPECT_THROW(dominance_leq({2}, {2, 1}), std::invalid_argument);
}

TEST(Strips, Examples) {
  EXPECT_TRUE(is_horizontal_strip({1}, {3, 1}));
  EXPECT_TRUE(is_vertical_strip({1}, {1, 1, 1}));
  EXPECT_FALSE(is_horizontal_strip({1}, {2, 2}));
  EXPECT_TRUE(is_horizontal_strip({2}, {2}));
  EXPECT_FALSE(is_horizontal_strip({2}, {1}));
}

TEST(Strips, EnumeratorsMatchPredicates) {
  for (const Partition& inner : partitions_up_to(4)) {
    for (int a = 0; a <= 3; ++a) {
      std::set<Partition> h, v;
      for (const Partition& nu : partitions_of(inner.size() + a)) {
        if (is_horizontal_strip(inner, nu)) h.insert(nu);
        if (is_vertical_strip(inner, nu)) v.insert(nu);
      }
      const auto hs = add_horizontal_strips(inner, a);
      const auto vs = add_vertical_strips(inner, a);
      EXPECT_EQ(std::set<Partition>(hs.begin(), hs.end()), h);
      EXPECT_EQ(std::set<Partition>(vs.begin(), vs.end()), v);
      EXPECT_TRUE(std::is_sorted(hs.begin(), hs.end(), std::greater<>()));
    }
    std::set<Partition> down;
    for (const Partition& mu : partitions_up_to(inner.size()))
      if (is_horizontal_strip(mu, inner)) down.insert(mu);
    const auto rs = remove_horizontal_strips(inner);
    EXPECT_EQ(std::set<Partition>(rs.begin(), rs.end()), down);
  }
}

TEST(AdmissibleLength, Examples) {
  EXPECT_TRUE(admissible_length(Partition{2, 1}, 5));
  EXPECT_FALSE(admissible_length(Partition{2, 1}, 4));
  EXPECT_TRUE(admissible_length(Partition{}, 0));
  EXPECT_FALSE(admissible_length(Partition{2, 1}, 1));
}

TEST(PartitionsOf, CountsAndOrder) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m) {
    const auto ps = partitions_of(m);
    EXPECT_EQ(ps.size(), counts[static_cast<std::size_t>(m)]);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
  }
}

TEST(VSet, Examples) {
  const std::vector<Partition> v7 = v_set({2, 1}, 7);
  const std::vector<Partition> want7{{4, 3},       {4, 2, 1},          {4, 1, 1, 1},    {3, 3, 1},
                                     {3, 2, 2},    {3, 2, 1, 1},       {3, 1, 1, 1, 1}, {2, 2, 2, 1},
                                     {2, 2, 1, 1, 1}, {2, 1, 1, 1, 1, 1}};
  EXPECT_EQ(v7, want7);
  EXPECT_EQ(v_set({2, 1}, 5), (std::vector<Partition>{{3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}}));
  EXPECT_EQ(v_set({2, 1}, 3), (std::vector<Partition>{{2, 1}}));
  EXPECT_TRUE(v_set({2, 1}, 4).empty());
}

TEST(VSet, MatchesDirectReachability) {
  // Oracle: nu is reachable iff some chain of even vertical strips connects
  // lambda to nu; computed by a forward search over all partitions.
  for (const Partition& lambda : partitions_up_to(3)) {
    for (int n = lambda.size(); n <= lambda.size() + 4; n += 2) {
      std::set<Partition> reach{lambda};
      for (int s = lambda.size(); s < n; s += 2) {
        std::set<Partition> next;
        for (const Partition& p : reach) {
          if (p.size() >= n) continue;
          for (int a = 2; p.size() + a <= n; a += 2)
            for (const Partition& q : partitions_of(p.size() + a))
              if (is_vertical_strip(p, q)) next.insert(q);
        }
        reach.insert(next.begin(), next.end());
      }
      std::vector<Partition> want;
      for (const Partition& p : reach)
        if (p.size() == n) want.push_back(p);
      std::sort(want.begin(), want.end(), std::greater<>());
      EXPECT_EQ(v_set(lambda, n), want) << lambda << " n=" << n;
    }
  }
}

TEST(LambdaBar, Examples) {
  EXPECT_EQ(lambda_bar({2, 1}, 5), (Partition{3, 2}));
  EXPECT_EQ(lambda_bar({3}, 7), (Partition{5, 2}));
  EXPECT_EQ(lambda_bar({2, 1}, 3), (Partition{2, 1}));
  EXPECT_THROW(lambda_bar({2, 1}, 4), std::domain_error);
}

TEST(LambdaBar, IsDominanceMaximumOfVSet) {
  for (const Partition& lambda : partitions_up_to(4)) {
    for (int n = lambda.size(); n <= lambda.size() + 4; n += 2) {
      const Partition bar = lambda_bar(lambda, n);
      const auto v = v_set(lambda, n);
      EXPECT_NE(std::find(v.begin(), v.end(), bar), v.end());
      for (const Partition& nu : v) {
        EXPECT_TRUE(nu.contains(lambda));
        EXPECT_EQ(nu.size(), n);
        EXPECT_TRUE(dominance_leq(nu, bar)) << nu << " vs " << bar;
      }
    }
  }
}

TEST(LambdaBar, InjectiveAndOrderPreserving) {
  for (int m = 0; m <= 5; ++m) {
    const auto ps = partitions_of(m);
    for (int n = m; n <= m + 6; n += 2) {
      std::set<Partition> images;
      for (const Partition& a : ps) {
        images.insert(lambda_bar(a, n));
        for (const Partition& b : ps)
          if (dominance_leq(a, b)) EXPECT_TRUE(dominance_leq(lambda_bar(a, n), lambda_bar(b, n)));
      }
      EXPECT_EQ(images.size(), ps.size());
    }
  }
}

TEST(VSet, SimilarityIsMonotone) {
  for (int m = 0; m <= 4; ++m) {
    const auto ps = partitions_of(m);
    for (const Partition& a : ps) {
      for (const Partition& b : ps) {
        bool seen = false;
        for (int n = m; n <= m + 6; n += 2) {
          const auto va = v_set(a, n);
          const auto vb = v_set(b, n);
          std::vector<Partition> common;
          std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common),
                                std::greater<>());
          if (seen) EXPECT_FALSE(common.empty()) << a << " " << b << " n=" << n;
          seen = seen || !common.empty();
        }
      }
    }
  }
}

}  // namespace
}  // namespace ssot

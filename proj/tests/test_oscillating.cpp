#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ssot/oscillating.hpp"
#include "ssot/polyring.hpp"
#include "support.hpp"

namespace ssot {
namespace {

using testing::binomial;
using testing::double_factorial;
using testing::partitions_up_to;
using testing::profile_example_ssot;
using testing::run_example_ot;
using testing::run_example_ssot;
using testing::worked_ssot;

std::vector<Partition> chain(std::initializer_list<Partition> ps) { return {ps}; }

TEST(OscillatingTableauType, Validates) {
  EXPECT_THROW(OscillatingTableau(chain({{1}})), std::invalid_argument);
  EXPECT_THROW(OscillatingTableau(chain({{}, {2}})), std::invalid_argument);
  EXPECT_THROW(OscillatingTableau(chain({{}, {1}, {1}})), std::invalid_argument);
  const OscillatingTableau o(chain({{}, {1}, {}}));
  EXPECT_EQ(o.length(), 2);
  EXPECT_TRUE(o.shape().empty());
}

TEST(SsotType, ValidatesAndTrims) {
  // Second step adds a non-horizontal strip.
  EXPECT_THROW(Ssot({{Partition{}, Partition{1}}, {Partition{}, Partition{2, 2}}}), std::invalid_argument);
  // First step must start from the empty shape.
  EXPECT_THROW(Ssot({{Partition{1}, Partition{1}}}), std::invalid_argument);
  const Ssot s({{Partition{}, Partition{1}}, {Partition{1}, Partition{1}}, {Partition{1}, Partition{1}}});
  EXPECT_EQ(s.step_count(), 1);
  EXPECT_EQ(s.length(), 1);
}

TEST(SubstepEvents, ProfileExample) {
  const Ssot s = profile_example_ssot();
  const EventTrace t = substep_events(s);
  EXPECT_EQ(t.profile, (std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3, 3}));
  EXPECT_EQ(s.length(), 9);
  EXPECT_EQ(com(s), (Composition{2, 4, 3}));
  // Deletions right to left, then additions left to right.
  EXPECT_EQ(t.boxes[2], (Box{1, 2}));
  EXPECT_EQ(t.kinds[2], EventKind::deletion);
  EXPECT_EQ(t.boxes[3], (Box{2, 1}));
  EXPECT_EQ(t.boxes[4], (Box{1, 2}));
  EXPECT_EQ(t.boxes[5], (Box{1, 3}));
  EXPECT_EQ(t.replay().back(), s.shape());
}

TEST(SubstepEvents, WorkedExample) {
  const Ssot s = worked_ssot();
  EXPECT_EQ(s.shape(), (Partition{2, 1, 1}));
  const EventTrace t = substep_events(s);
  EXPECT_EQ(t.profile, (std::vector<int>{1, 2, 2, 3, 4, 4, 4, 5, 6, 7}));
  std::vector<int> deletions;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (t.kinds[j] == EventKind::deletion) deletions.push_back(static_cast<int>(j) + 1);
  EXPECT_EQ(deletions, (std::vector<int>{5, 6, 10}));
  EXPECT_EQ(com(s), (Composition{1, 2, 1, 3, 1, 1, 1}));
  const std::vector<SsotStep> want{{Partition{}, Partition{1}},         {Partition{1}, Partition{2, 1}},
                                   {Partition{2, 1}, Partition{2, 1, 1}}, {Partition{1, 1}, Partition{2, 1}},
                                   {Partition{2, 1}, Partition{2, 2}},    {Partition{2, 2}, Partition{2, 2, 1}},
                                   {Partition{2, 1, 1}, Partition{2, 1, 1}}};
  EXPECT_EQ(s.steps(), want);
  EXPECT_EQ(s.letter_rows(), (LetterRows{{{1}, {2, 4, 4}}, {{2}, {5, 7}}, {{3, 4, 6}}}));
}

TEST(SubstepEvents, SingleBox) {
  const Ssot s({{Partition{}, Partition{1}}});
  const EventTrace t = substep_events(s);
  EXPECT_EQ(t.profile, (std::vector<int>{1}));
  EXPECT_EQ(t.boxes, (std::vector<Box>{{1, 1}}));
  EXPECT_EQ(t.kinds, (std::vector<EventKind>{EventKind::addition}));
}

TEST(DescentData, Examples) {
  const OscillatingTableau o(chain({{}, {1}, {2}, {2, 1}, {1, 1}, {1}, {1, 1}, {2, 1}, {2, 2}}));
  const DescentData d = descent_data(o);
  EXPECT_EQ(d.descent_set, (std::vector<int>{2, 3, 7}));
  EXPECT_EQ(d.des, (Composition{2, 1, 4, 1}));
  EXPECT_EQ(d.step, 4);

  const DescentData e = descent_data(run_example_ot());
  EXPECT_EQ(e.descent_set, (std::vector<int>{3}));
  EXPECT_EQ(e.des, (Composition{3, 6}));
  EXPECT_EQ(run_of(run_example_ot()).to_string(), "123|456789");

  const DescentData f = descent_data(OscillatingTableau(chain({{}, {1}, {2}, {3}})));
  EXPECT_EQ(f.des, (Composition{3}));
  EXPECT_EQ(f.step, 1);

  const DescentData g = descent_data(OscillatingTableau{});
  EXPECT_TRUE(g.descent_set.empty());
  EXPECT_EQ(g.des, Composition{});
  EXPECT_EQ(g.step, 0);
}

TEST(Standardize, RunExample) {
  const Ssot s = run_example_ssot();
  EXPECT_EQ(standardize(s), run_example_ot());
  EXPECT_EQ(s.step_count(), 3);
  EXPECT_EQ(descent_data(s).step, 2);
  EXPECT_EQ(run_of(s).to_string(), "111|222233");
  EXPECT_EQ(com(s), (Composition{3, 4, 2}));
}

TEST(Run, VariantsOfExample) {
  // The same OT read through coarser step groupings.
  const OscillatingTableau o = run_example_ot();
  const auto relabel = [&](std::vector<int> profile) {
    EventTrace t = o.events();
    t.profile = std::move(profile);
    return run_of(Ssot::from_events(t)).to_string();
  };
  EXPECT_EQ(relabel({1, 1, 1, 2, 2, 2, 2, 2, 2}), "111|222222");
  EXPECT_EQ(relabel({1, 1, 1, 2, 3, 3, 3, 3, 3}), "111|233333");
  EXPECT_EQ(relabel({1, 3, 3, 4, 4, 4, 4, 4, 4}), "133|444444");
}

TEST(Standardize, TrivialCases) {
  const Ssot yt = Ssot::from_letter_rows({{{1}, {1}, {2}}, {{2}}});
  const OscillatingTableau o = standardize(yt);
  EXPECT_EQ(o.chain(), chain({{}, {1}, {2}, {2, 1}, {3, 1}}));
  const OscillatingTableau p(chain({{}, {1}, {2}, {1}, {1, 1}}));
  EXPECT_EQ(standardize(Ssot::from_oscillating(p)), p);
}

TEST(Destandardize, Example) {
  const Ssot s = Ssot::from_letter_rows({{{1}, {1}, {2, 3, 6}}, {{3}, {4}}});
  const Ssot q = Ssot::from_letter_rows({{{1}, {1}, {1, 2, 2}}, {{2}, {2}}});
  const Ssot o = Ssot::from_letter_rows({{{1}, {2}, {3, 4, 7}}, {{5}, {6}}});
  EXPECT_EQ(standardize(s), standardize(o));
  EXPECT_EQ(standardize(q), standardize(o));
  EXPECT_EQ(destandardize(s), q);
  EXPECT_TRUE(is_quasi_yamanouchi(q));
  EXPECT_FALSE(is_quasi_yamanouchi(s));
  EXPECT_EQ(destandardize(q), q);
}

TEST(QuasiYamanouchi, FirstListedEntry) {
  EXPECT_TRUE(is_quasi_yamanouchi(Ssot::from_letter_rows({{{1}, {1}, {1, 2}}, {{2}}})));
}

TEST(QuasiYamanouchi, StandardObjectsIffAllDescents) {
  for (int n = 0; n <= 4; ++n) {
    for (const Partition& lambda : partitions_up_to(n)) {
      for (const OscillatingTableau& o : enumerate_ot(lambda, n)) {
        const Ssot s = Ssot::from_oscillating(o);
        const bool all = static_cast<int>(descent_data(o).descent_set.size()) == std::max(n - 1, 0);
        EXPECT_EQ(is_quasi_yamanouchi(s), all);
      }
    }
  }
}

TEST(Enumeration, SmallCases) {
  EXPECT_EQ(enumerate_ot({1}, 1).size(), 1u);
  EXPECT_EQ(enumerate_ot({}, 2).size(), 1u);
  EXPECT_TRUE(enumerate_ot({2, 1}, 4).empty());
  const auto e = enumerate_ssot({}, 0, 3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.front().step_count(), 0);
  EXPECT_EQ(enumerate_qyot({1}, 1, 1).size(), 1u);
}

TEST(Enumeration, OtCountFormula) {
  for (const Partition& lambda : partitions_up_to(3)) {
    for (int n = lambda.size(); n <= lambda.size() + 4; n += 2) {
      const std::int64_t want =
          binomial(n, lambda.size()) * double_factorial(n - lambda.size() - 1) * count_syt(lambda);
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_ot(lambda, n).size()), want) << lambda << " n=" << n;
    }
  }
  EXPECT_EQ(enumerate_ot({2, 1}, 5).size(), 20u);
}

TEST(Enumeration, QyotShape21Length5) {
  const auto qs = enumerate_qyot({2, 1}, 5, 3);
  ASSERT_EQ(qs.size(), 14u);
  std::multiset<std::string> runs;
  for (const Ssot& q : qs) {
    EXPECT_TRUE(is_quasi_yamanouchi(q));
    runs.insert(run_of(q).to_string());
  }
  const std::multiset<std::string> want{"111|22",  "11|222",  "111|2|3", "11|22|3", "11|22|3",
                                        "11|22|3", "11|2|33", "11|2|33", "1|222|3", "1|222|3",
                                        "1|22|33", "1|22|33", "1|22|33", "1|2|333"};
  EXPECT_EQ(runs, want);

  const auto two = enumerate_qyot({2, 1}, 5, 2);
  std::multiset<std::string> runs2;
  for (const Ssot& q : two) runs2.insert(run_of(q).to_string());
  EXPECT_EQ(runs2, (std::multiset<std::string>{"111|22", "11|222"}));
}

TEST(Enumeration, QyotBijectsWithBoundedStepOts) {
  for (const Partition& lambda : partitions_up_to(3)) {
    for (int n = lambda.size(); n <= lambda.size() + 4; n += 2) {
      for (int k = 1; k <= 4; ++k) {
        std::set<std::vector<Partition>> from_ot;
        for (const OscillatingTableau& o : enumerate_ot(lambda, n))
          if (descent_data(o).step <= k) from_ot.insert(o.chain());
        std::set<std::vector<Partition>> from_q;
        for (const Ssot& q : enumerate_qyot(lambda, n, k)) {
          EXPECT_EQ(descent_data(q).des, com(q));
          EXPECT_LE(q.step_count(), k);
          from_q.insert(standardize(q).chain());
        }
        EXPECT_EQ(from_q, from_ot);
      }
    }
  }
}

TEST(Enumeration, SsotWeightSumMatchesSchurAtMinimalLength) {
  EXPECT_EQ(testing::weight_sum(enumerate_ssot({2, 1}, 3, 3), 3), schur_poly({2, 1}, 3));
}

TEST(Standardize, PreservesInvariantsExhaustively) {
  for (const Partition& lambda : partitions_up_to(3)) {
    for (int n = lambda.size(); n <= 7; n += 2) {
      for (const Ssot& s : enumerate_ssot(lambda, n, 4)) {
        const OscillatingTableau o = standardize(s);
        const EventTrace ts = substep_events(s);
        const EventTrace to = o.events();
        EXPECT_EQ(o.length(), s.length());
        EXPECT_EQ(o.shape(), s.shape());
        EXPECT_EQ(to.boxes, ts.boxes);
        EXPECT_EQ(to.kinds, ts.kinds);
        EXPECT_EQ(descent_data(s).des, descent_data(o).des);
        EXPECT_LE(descent_data(s).step, s.step_count());
        // Replaying the events reproduces the step shapes.
        const std::vector<Partition> shapes = ts.replay();
        EXPECT_EQ(shapes.back(), s.shape());
      }
    }
  }
}

TEST(Fibers, ComSetIsRefinementSetAndOneQuasiYamanouchi) {
  for (const Partition& lambda : partitions_up_to(4)) {
    for (int n = lambda.size(); n <= 6; n += 2) {
      std::map<std::vector<Partition>, std::set<Composition>> coms;
      std::map<std::vector<Partition>, int> qy;
      for (const Ssot& s : enumerate_ssot(lambda, n, n)) {
        const auto key = standardize(s).chain();
        const Composition c = com(s);
        if (c.is_strong()) coms[key].insert(c);
        if (is_quasi_yamanouchi(s)) ++qy[key];
      }
      for (const OscillatingTableau& o : enumerate_ot(lambda, n)) {
        const auto r = ref_set(descent_data(o).des);
        EXPECT_EQ(coms[o.chain()], std::set<Composition>(r.begin(), r.end())) << lambda << " n=" << n;
        EXPECT_EQ(qy[o.chain()], 1);
      }
    }
  }
}

TEST(Fibers, DestandardizeIsCanonical) {
  for (const Partition& lambda : partitions_up_to(2)) {
    for (int n = lambda.size(); n <= 6; n += 2) {
      for (const Ssot& s : enumerate_ssot(lambda, n, 3)) {
        const Ssot q = destandardize(s);
        EXPECT_TRUE(is_quasi_yamanouchi(q));
        EXPECT_EQ(standardize(q), standardize(s));
        EXPECT_EQ(destandardize(q), q);
        EXPECT_EQ(q.step_count(), descent_data(s).step);
      }
    }
  }
}

TEST(Enumeration, OrderedAndDistinct) {
  const auto all = enumerate_ssot({2, 1}, 5, 3);
  for (std::size_t i = 1; i < all.size(); ++i)
    EXPECT_TRUE(event_trace_less(substep_events(all[i - 1]), substep_events(all[i])));
}

}  // namespace
}  // namespace ssot

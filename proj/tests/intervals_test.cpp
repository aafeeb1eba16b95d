// Copyright 2026 The advbayes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "advbayes/intervals.hpp"
#include "oracles.hpp"

namespace advbayes {
namespace {

const Interval kR = Interval::Line();

TEST(Expand, EmptyStaysEmpty) {
  EXPECT_TRUE(Expand(IntervalSet::Empty(), 0.7).empty());
}

TEST(Expand, OpenIntervalGrowsByRadius) {
  EXPECT_EQ(Expand(IntervalSet({Interval::Open(0, 1)}), 0.5),
            IntervalSet({Interval::Open(-0.5, 1.5)}));
  EXPECT_EQ(Expand(IntervalSet({Interval::Closed(0, 1)}), 0.5),
            IntervalSet({Interval::Closed(-0.5, 1.5)}));
}

TEST(Expand, OverlappingPiecesMerge) {
  const IntervalSet a({Interval::Open(0, 1), Interval::Open(1.5, 2)});
  const IntervalSet e = Expand(a, 0.3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_DOUBLE_EQ(e[0].lo, -0.3);
  EXPECT_DOUBLE_EQ(e[0].hi, 2.3);
}

TEST(Expand, PointBecomesClosedBall) {
  EXPECT_EQ(Expand(IntervalSet({Interval::Point(1)}), 0.25),
            IntervalSet({Interval::Closed(0.75, 1.25)}));
}

TEST(Expand, NegativeRadiusRejected) {
  EXPECT_THROW(Expand(IntervalSet::Line(), -1), ValidationError);
}

TEST(Contract, LineIsFixed) {
  EXPECT_TRUE(Contract(IntervalSet::Line(), 3.0).is_line());
}

TEST(Contract, ShortOpenIntervalVanishes) {
  EXPECT_TRUE(Contract(IntervalSet({Interval::Open(0, 1)}), 0.5).empty());
}

TEST(Contract, ClosedIntervalOfLengthTwoEpsIsMidpoint) {
  EXPECT_EQ(Contract(IntervalSet({Interval::Closed(0, 1)}), 0.5),
            IntervalSet({Interval::Point(0.5)}));
}

TEST(Contract, HalfLine) {
  EXPECT_EQ(Contract(IntervalSet({Interval::Open(1, kInf)}), 0.25),
            IntervalSet({Interval::Open(1.25, kInf)}));
}

TEST(SetOps, Complement) {
  EXPECT_EQ(Complement(IntervalSet({Interval::Open(0, 1)})),
            IntervalSet({Interval::RightClosed(-kInf, 0),
                         Interval::LeftClosed(1, kInf)}));
  EXPECT_TRUE(Complement(IntervalSet::Empty()).is_line());
  EXPECT_TRUE(Complement(IntervalSet::Line()).empty());
}

TEST(SetOps, UnionMergesAdjacent) {
  EXPECT_EQ(Union(IntervalSet({Interval::Open(0, 1)}),
                  IntervalSet({Interval::LeftClosed(1, 2)})),
            IntervalSet({Interval::Open(0, 2)}));
}

TEST(SetOps, OpenNeighboursStaySeparate) {
  const IntervalSet u = Union(IntervalSet({Interval::Open(0, 1)}),
                              IntervalSet({Interval::Open(1, 2)}));
  EXPECT_EQ(u.size(), 2u);
  EXPECT_FALSE(u.contains(1.0));
}

TEST(SetOps, SymDiffWithSelfIsEmpty) {
  const IntervalSet a({Interval::Open(-3, -1), Interval::Closed(0, 2)});
  EXPECT_TRUE(SymDiff(a, a).empty());
}

TEST(SetOps, Intersect) {
  EXPECT_EQ(Intersect(IntervalSet({Interval::Closed(0, 2)}),
                      IntervalSet({Interval::Open(1, 3)})),
            IntervalSet({Interval::RightClosed(1, 2)}));
  EXPECT_EQ(Intersect(IntervalSet({Interval::Closed(0, 1)}),
                      IntervalSet({Interval::Closed(1, 2)})),
            IntervalSet({Interval::Point(1)}));
}

TEST(Components, Counts) {
  EXPECT_EQ(Components(IntervalSet::Empty()), 0u);
  EXPECT_EQ(Components(IntervalSet({Interval::Open(-kInf, 1),
                                    Interval::Open(2, 3)})),
            2u);
  EXPECT_EQ(Components(IntervalSet({kR})), 1u);
}

TEST(IsRegular, Boundaries) {
  EXPECT_TRUE(IsRegular(IntervalSet({Interval::Open(0, 1)}), 0.4));
  EXPECT_FALSE(IsRegular(IntervalSet({Interval::Open(0, 1)}), 0.5));
  EXPECT_TRUE(IsRegular(IntervalSet::Line(), 100.0));
  EXPECT_FALSE(IsRegular(IntervalSet({Interval::Open(-kInf, 0),
                                      Interval::Open(0.5, kInf)}),
                         0.25));
}

TEST(LebesgueLength, Values) {
  EXPECT_EQ(LebesgueLength(IntervalSet::Empty()), 0.0);
  EXPECT_EQ(LebesgueLength(IntervalSet({Interval::Open(0, 1),
                                        Interval::Open(2, 4)})),
            3.0);
  EXPECT_EQ(LebesgueLength(IntervalSet({Interval::Open(-kInf, 0)})), kInf);
}

TEST(Canonical, InvalidPiecesDropped) {
  const IntervalSet a({Interval::Open(1, 1), Interval{2, 1, true, true},
                       Interval::Open(0, 0.5)});
  EXPECT_EQ(a, IntervalSet({Interval::Open(0, 0.5)}));
}

TEST(Snap, MergesTinyGaps) {
  const IntervalSet a({Interval::Open(0, 1), Interval::Open(1 + 1e-14, 2)});
  EXPECT_EQ(Snap(a), IntervalSet({Interval::Open(0, 2)}));
}

TEST(FromBoundary, Orientation) {
  const std::vector<double> pts{0.0, 1.0};
  EXPECT_EQ(IntervalSet::FromBoundary(pts, false),
            IntervalSet({Interval::Open(0, 1)}));
  EXPECT_EQ(IntervalSet::FromBoundary(pts, true),
            IntervalSet({Interval::Open(-kInf, 0), Interval::Open(1, kInf)}));
}

// Membership-level check of the set operations against pointwise logic.
TEST(SetOps, AgreeWithPointwiseLogic) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const IntervalSet a = oracle::RandomSet(rng);
    const IntervalSet b = oracle::RandomSet(rng);
    const IntervalSet u = Union(a, b);
    const IntervalSet n = Intersect(a, b);
    const IntervalSet d = Difference(a, b);
    const IntervalSet c = Complement(a);
    for (int k = -4 * 128; k <= 4 * 128; ++k) {
      const double x = k / 128.0;
      ASSERT_EQ(u.contains(x), a.contains(x) || b.contains(x));
      ASSERT_EQ(n.contains(x), a.contains(x) && b.contains(x));
      ASSERT_EQ(d.contains(x), a.contains(x) && !b.contains(x));
      ASSERT_EQ(c.contains(x), !a.contains(x));
    }
  }
}

// Expansion against the distance definition on a fine dyadic grid.
TEST(Expand, AgreesWithDistanceDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const IntervalSet a = oracle::RandomSet(rng);
    const double eps = oracle::Dyadic(rng, 0, 1);
    const IntervalSet e = Expand(a, eps);
    for (int k = -6 * 256; k <= 6 * 256; ++k) {
      const double x = k / 256.0;
      const double d = oracle::Distance(a, x);
      if (d < eps) {
        ASSERT_TRUE(e.contains(x));
      } else if (d > eps) {
        ASSERT_FALSE(e.contains(x));
      }
    }
  }
}

}  // namespace
}  // namespace advbayes

#include <gtest/gtest.h>

#include "support/games.h"
#include "vdsolve/interval.h"

namespace vds {
namespace {

using testing::Q;

TEST(Interval, Membership) {
  const Interval half_open = Interval::LeftClosed(Q(1, 4), Q(1, 2));
  EXPECT_TRUE(half_open.Contains(Q(1, 4)));
  EXPECT_FALSE(half_open.Contains(Q(1, 2)));
  EXPECT_TRUE(Interval::Point(Q(1)).Contains(Q(1)));
  EXPECT_TRUE(Interval::LeftClosed(Q(1, 2), Q(1, 2)).IsEmpty());
  EXPECT_EQ(half_open.ToString(), "[1/4,1/2)");
}

TEST(IntervalUnion, MergesTouchingPieces) {
  const IntervalUnion u({Interval::LeftClosed(Q(1, 2), Q(3, 4)),
                         Interval::Closed(Q(0), Q(1, 4)),
                         Interval::Closed(Q(3, 4), Q(1))});
  ASSERT_EQ(u.intervals().size(), 2u);
  EXPECT_EQ(u.ToString(), "[0,1/4] U [1/2,1]");
  EXPECT_EQ(*u.Min(), Q(0));
  EXPECT_TRUE(u.IsLeftClosed());
}

TEST(IntervalUnion, OpenGapsDoNotMerge) {
  Interval left = Interval::LeftClosed(Q(0), Q(1, 2));
  Interval right{Q(1, 2), Q(1), false, true};
  const IntervalUnion u({left, right});
  EXPECT_EQ(u.intervals().size(), 2u);
  EXPECT_FALSE(u.Contains(Q(1, 2)));
}

TEST(IntervalUnion, ComplementInUnit) {
  const IntervalUnion m({Interval::Closed(Q(1, 2), Q(3, 4))});
  EXPECT_EQ(m.ComplementInUnit().ToString(), "[0,1/2) U (3/4,1]");
  EXPECT_TRUE(IntervalUnion::Unit().ComplementInUnit().empty());
  EXPECT_EQ(IntervalUnion({Interval::Point(Q(1, 3))}).ComplementInUnit()
                .ToString(),
            "[0,1/3) U (1/3,1]");
  EXPECT_EQ(m.ComplementInUnit().ComplementInUnit(), m);
}

TEST(IntervalUnion, SupremumAttainment) {
  const IntervalUnion open_top({Interval::LeftClosed(Q(0), Q(1, 2))});
  EXPECT_EQ(open_top.Supremum(), Q(1, 2));
  EXPECT_FALSE(open_top.SupremumAttained());
  EXPECT_TRUE(IntervalUnion::Unit().SupremumAttained());
}

}  // namespace
}  // namespace vds

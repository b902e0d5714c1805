#include <algorithm>

#include <gtest/gtest.h>

#include "support/games.h"
#include "vdsolve/errors.h"
#include "vdsolve/oracle.h"

namespace vds::oracle {
namespace {

using testing::Q;

bool Contains(const std::vector<Rational>& xs, const Rational& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

TEST(CriticalGrid, ThreeAction) {
  const CriticalGrid grid = ComputeCriticalGrid(testing::ThreeActionGame());
  const std::vector<Rational> base{Q(0), Q(1, 3), Q(2, 5), Q(1, 2), Q(4, 5),
                                   Q(1)};
  ASSERT_EQ(grid.points.size(), 2 * base.size() - 1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_EQ(grid.points[2 * i], base[i]);
    EXPECT_TRUE(grid.IsBasePoint(2 * i));
  }
  EXPECT_EQ(grid.points[1], Q(1, 6));
  EXPECT_TRUE(std::is_sorted(grid.points.begin(), grid.points.end()));
}

TEST(CriticalGrid, ConstantCheapTalk) {
  const GameSpec game(StepFunction::Constant(Q(1)), Q(1, 3),
                      CheapTalk({"a"}));
  EXPECT_EQ(ComputeCriticalGrid(game).points,
            (std::vector<Rational>{Q(0), Q(1, 6), Q(1, 3), Q(2, 3), Q(1)}));
}

TEST(CriticalGrid, IncludesCertificateAndContactEndpoints) {
  EXPECT_TRUE(Contains(ComputeCriticalGrid(testing::HighCertificateGame()).points,
                       Q(9, 10)));
  const GameSpec game = testing::MandatoryDisclosureGame();
  const CriticalGrid grid = ComputeCriticalGrid(game);
  for (const Rational& x :
       ContactSet(game.payoff(), Cav(game.payoff())).Endpoints()) {
    EXPECT_TRUE(Contains(grid.points, x)) << x.ToString();
  }
}

TEST(BestDeviation, SkepticalThreeAction) {
  const GameSpec game = testing::ThreeActionGame();
  const Deviation d = BestDeviation(game, SkepticalBeliefs(game.structure()));
  EXPECT_EQ(d.value, Q(2, 3));
  EXPECT_EQ(d.signal, Signal::Split(Q(1, 3), Q(0), Q(1, 2)));
}

TEST(BestDeviation, OptimisticBeliefsBeatTheWideSplit) {
  const GameSpec game = testing::ThreeActionGame();
  const BeliefMap beliefs{{"m_L", Q(0)}, {"m_M", Q(4, 5)}};
  const Deviation d = BestDeviation(game, beliefs);
  // Bayes-feasible payoff of the {0, 4/5} split with these beliefs.
  const Rational wide = Q(5, 12) * Q(3);
  EXPECT_GT(d.value, wide);
  EXPECT_EQ(d.value, Q(2));
}

TEST(BestDeviation, ConstantBeliefsStayPut) {
  const GameSpec game = testing::CheapTalkGame();
  const Deviation d = BestDeviation(game, {{"m_A", Q(1, 2)}, {"m_B", Q(1, 2)}});
  EXPECT_EQ(d.value, Q(2));
  EXPECT_EQ(d.signal, Signal::Degenerate(Q(1, 2)));
}

TEST(BestDeviation, RejectsInconsistentBeliefs) {
  const GameSpec game = testing::ThreeActionGame();
  EXPECT_THROW(BestDeviation(game, {{"m_L", Q(0)}, {"m_M", Q(1, 4)}}),
               PreconditionError);
  EXPECT_THROW(BestDeviation(game, {{"m_L", Q(0)}}), PreconditionError);
}

TEST(BestDeviation, MatchesAnalyticSkepticalValue) {
  for (const GameSpec& game :
       {testing::ThreeActionGame(), testing::CheapTalkGame(),
        testing::HighCertificateGame(), testing::MandatoryDisclosureGame()}) {
    EXPECT_EQ(BestDeviation(game, SkepticalBeliefs(game.structure())).value,
              Cav(SkepticalValue(game))(game.prior()));
  }
}

TEST(ExhaustiveSearch, ThreeActionValueIsUnique) {
  const SearchResult r = ExhaustiveSearch(testing::ThreeActionGame());
  EXPECT_EQ(r.values, std::set<Rational>{Q(2, 3)});
  for (const Equilibrium& eq : r.equilibria) {
    EXPECT_TRUE(OnPathTypesLowestConsistent(testing::ThreeActionGame(), eq));
  }
}

TEST(ExhaustiveSearch, CheapTalkTopsOutAtPriorPayoff) {
  const SearchResult r = ExhaustiveSearch(testing::CheapTalkGame());
  ASSERT_FALSE(r.values.empty());
  EXPECT_EQ(*r.values.rbegin(), Q(2));
}

TEST(ExhaustiveSearch, DegeneratePrior) {
  const GameSpec game(testing::ThreeActionPayoff(), Q(0),
                      testing::HalfThreshold());
  EXPECT_EQ(ExhaustiveSearch(game).values, std::set<Rational>{Q(0)});
}

TEST(ExhaustiveSearch, RefusesLargeInstances) {
  const GameSpec many(testing::ThreeActionPayoff(), Q(1, 3),
                      CheapTalk({"a", "b", "c", "d", "e"}));
  EXPECT_THROW(ExhaustiveSearch(many), LimitError);
  EXPECT_THROW(ExhaustiveSearch(testing::ThreeActionGame(), {4, 5}),
               LimitError);
  EXPECT_NO_THROW(ExhaustiveSearch(many, {5, 12}));
}

}  // namespace
}  // namespace vds::oracle

// Randomized invariants. Seeds are fixed so failures reproduce.

#include <algorithm>

#include <gtest/gtest.h>

#include "support/games.h"
#include "support/random_games.h"
#include "vdsolve/comparative.h"
#include "vdsolve/io.h"
#include "vdsolve/oracle.h"

namespace vds {
namespace {

using testing::GameGen;
using testing::Q;

// Generator denominators all divide 120, so this grid holds every endpoint
// and every midpoint between endpoints.
std::vector<Rational> DenseGrid() {
  std::vector<Rational> xs;
  for (int k = 0; k <= 240; ++k) xs.push_back(Q(k, 240));
  return xs;
}

std::vector<Rational> EndpointsAndMidpoints(const StepFunction& f) {
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < f.knots().size(); ++i) {
    xs.push_back(f.knots()[i]);
    if (i + 1 < f.knots().size()) {
      xs.push_back(Midpoint(f.knots()[i], f.knots()[i + 1]));
    }
  }
  return xs;
}

TEST(CavProperties, MajorantConcaveIdempotent) {
  GameGen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFunction f = gen.AnyStep();
    const ConcavePL g = Cav(f);
    for (const Rational& x : EndpointsAndMidpoints(f)) {
      ASSERT_GE(g(x), f(x)) << f.ToString() << " at " << x.ToString();
    }
    const std::vector<Rational> slopes = g.Slopes();
    for (std::size_t i = 1; i < slopes.size(); ++i) {
      ASSERT_LT(slopes[i], slopes[i - 1]) << g.ToString();
    }
    // Sampling the hull as a step function at its vertices and taking the
    // hull again gives back the same vertices.
    std::vector<Rational> knots;
    std::vector<Rational> knot_values;
    std::vector<Rational> gap_values;
    for (const Point& p : g.vertices()) {
      knots.push_back(p.x);
      knot_values.push_back(p.y);
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      gap_values.push_back(Min(knot_values[i], knot_values[i + 1]));
    }
    const StepFunction sampled =
        StepFunction::FromKnots(knots, knot_values, gap_values);
    ASSERT_EQ(Cav(sampled).vertices(), g.vertices()) << f.ToString();
    ASSERT_FALSE(ContactSet(f, g).empty());
  }
}

TEST(CavProperties, AgreesWithDiscreteHullOnCriticalGrid) {
  GameGen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    const StepFunction f = gen.AnyStep();
    const std::vector<Rational> grid = EndpointsAndMidpoints(f);
    // Each knot contributes its own value plus the limits from either side.
    std::vector<Point> pts;
    for (std::size_t i = 0; i < f.knots().size(); ++i) {
      const Rational& x = f.knots()[i];
      pts.push_back({x, f.knot_values()[i]});
      if (i > 0) pts.push_back({x, f.gap_values()[i - 1]});
      if (i < f.gap_values().size()) pts.push_back({x, f.gap_values()[i]});
    }
    const ConcavePL g = Cav(f);
    for (const Rational& x : grid) {
      ASSERT_EQ(g(x), oracle::DiscreteCav(pts, x)) << f.ToString();
    }
  }
}

TEST(VerifiabilityProperties, SkepticalTypeMap) {
  GameGen gen(21);
  const std::vector<Rational> dense = DenseGrid();
  for (int trial = 0; trial < 200; ++trial) {
    const VerifStructure m = gen.Structure(4, 0);
    const SkepticalTypeMap g = ComputeSkepticalTypeMap(m);
    const LowestConsistentSet l = ComputeLowestConsistentSet(m);
    for (const Rational& s : dense) {
      const Rational gs = g(s);
      ASSERT_LE(gs, s);
      ASSERT_EQ(gs == s, l.Contains(s)) << s.ToString();
    }
    const std::vector<Rational> ends = m.SupportEndpoints();
    for (const Rational& k : g.steps->knots()) {
      ASSERT_TRUE(k == Rational(0) || k == Rational(1) ||
                  std::binary_search(ends.begin(), ends.end(), k));
    }
    const VerifStructure bigger =
        AddMessage(m, "extra", IntervalUnion({Interval::Closed(
                                   gen.UnitRational(), Rational(1))}));
    ASSERT_TRUE(ComputeLowestConsistentSet(bigger).IncludesAll(l));
  }
}

TEST(VerifiabilityProperties, PartitionLowestTypesAreLeftEnds) {
  GameGen gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> cuts{Rational(0)};
    for (int i = gen.Int(0, 3); i > 0; --i) cuts.push_back(gen.UnitRational(false));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Interval> cells;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      cells.push_back(i + 1 < cuts.size()
                          ? Interval::LeftClosed(cuts[i], cuts[i + 1])
                          : Interval::Closed(cuts[i], Rational(1)));
    }
    ASSERT_EQ(ComputeLowestConsistentSet(Partition(cells)).types, cuts);
  }
}

TEST(EquilibriumProperties, PnbpSolveOutputs) {
  GameGen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const GameSpec game = gen.PnbpGame();
    const Equilibrium eq = Solve(game);
    ASSERT_EQ(eq.value, Cav(SkepticalValue(game))(game.prior()));
    ASSERT_EQ(eq.signal.Mean(), game.prior());
    ASSERT_TRUE(VerifyEquilibrium(game, eq).ok())
        << io::ToJson(game) << ToString(VerifyEquilibrium(game, eq).kind);
    ASSERT_TRUE(OnPathTypesLowestConsistent(game, eq));
    for (const auto& [s, m] : eq.messaging) {
      ASSERT_EQ(BeliefOf(game.structure(), eq.beliefs, m), s);
      ASSERT_EQ(BeliefOf(game.structure(), eq.beliefs, m),
                MinInverse(game.structure(), m));
    }
    if (eq.s_minus != eq.s_plus) {
      ASSERT_LT(eq.w_beta(eq.s_minus), eq.w_beta(eq.s_plus));
    }
  }
}

TEST(EquilibriumProperties, NoPnbpSolveOutputs) {
  GameGen gen(32);
  for (int trial = 0; trial < 200; ++trial) {
    const GameSpec game = gen.NoPnbpGame();
    const Equilibrium eq = Solve(game);
    ASSERT_EQ(eq.signal, Signal::Degenerate(game.prior()));
    ASSERT_EQ(eq.value, game.payoff()(game.prior()));
    ASSERT_TRUE(VerifyEquilibrium(game, eq).ok()) << io::ToJson(game);
  }
}

TEST(EquilibriumProperties, ValueMonotoneInPayoff) {
  GameGen gen(33);
  for (int trial = 0; trial < 200; ++trial) {
    const GameSpec game = gen.Game();
    // Raise every piece from some breakpoint on by a positive amount.
    std::vector<Rational> values = game.payoff().Values();
    const std::size_t from = gen.Int(0, values.size() - 1);
    for (std::size_t i = from; i < values.size(); ++i) values[i] += Q(1, 2);
    const GameSpec raised(StepFunction(game.payoff().Breakpoints(), values),
                          game.prior(), game.structure());
    ASSERT_LE(Solve(game).value, Solve(raised).value) << io::ToJson(game);
  }
}

TEST(OracleProperties, SkepticalBestDeviationIsCavOfSkepticalValue) {
  GameGen gen(41);
  for (int trial = 0; trial < 200; ++trial) {
    const GameSpec game = gen.Game();
    ASSERT_EQ(
        oracle::BestDeviation(game, SkepticalBeliefs(game.structure())).value,
        Cav(SkepticalValue(game))(game.prior()))
        << io::ToJson(game);
  }
}

TEST(OracleProperties, ExhaustiveSearchAgrees) {
  GameGen gen(42);
  for (int trial = 0; trial < 25; ++trial) {
    const GameSpec game = gen.OracleGame(true);
    const oracle::SearchResult r = oracle::ExhaustiveSearch(game);
    ASSERT_FALSE(r.values.empty()) << io::ToJson(game);
    ASSERT_EQ(*r.values.rbegin(), EquilibriumValue(game).value)
        << io::ToJson(game);
    for (const Equilibrium& eq : r.equilibria) {
      ASSERT_TRUE(OnPathTypesLowestConsistent(game, eq)) << io::ToJson(game);
    }
  }
  for (int trial = 0; trial < 25; ++trial) {
    const GameSpec game = gen.OracleGame(false);
    const oracle::SearchResult r = oracle::ExhaustiveSearch(game);
    ASSERT_FALSE(r.values.empty());
    ASSERT_LE(*r.values.rbegin(), game.payoff()(game.prior()));
  }
}

TEST(ComparativeProperties, MoreLowestConsistentTypesNeverHurt) {
  GameGen gen(51);
  int checked = 0;
  while (checked < 100) {
    const auto [hi, lo] = gen.LcPair();
    ASSERT_TRUE(GeqLc(hi, lo).holds);
    const GameSpec game_lo(gen.Payoff(), gen.UnitRational(false), lo);
    if (!Pnbp(game_lo).holds) continue;
    const GameSpec game_hi(game_lo.payoff(), game_lo.prior(), hi);
    ASSERT_GE(EquilibriumValue(game_hi).value, EquilibriumValue(game_lo).value)
        << io::ToJson(game_lo) << io::ToJson(game_hi);
    ++checked;
  }
}

TEST(ComparativeProperties, MissingLowestTypeCanHurt) {
  GameGen gen(52);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [hi, lo] = gen.FailingLcPair();
    const SeparatingInstance s = MakeSeparatingInstance(hi, lo);
    ASSERT_TRUE(Pnbp(s.game_lo).holds);
    ASSERT_LT(s.value_hi, s.value_lo) << io::ToJson(s);
  }
}

TEST(ComparativeProperties, SeparationImpliesLowestConsistent) {
  GameGen gen(53);
  int holds = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto [hi, lo] = gen.MixedPair();
    if (GeqSep(hi, lo).holds) {
      ++holds;
      ASSERT_TRUE(GeqLc(hi, lo).holds);
    }
  }
  EXPECT_GT(holds, 20);
}

TEST(ComparativeProperties, PreorderLaws) {
  GameGen gen(54);
  for (int trial = 0; trial < 200; ++trial) {
    const VerifStructure a = gen.Structure();
    const VerifStructure b = gen.Structure();
    const VerifStructure c = gen.Structure();
    ASSERT_TRUE(GeqLc(a, a).holds);
    ASSERT_TRUE(GeqSep(a, a).holds);
    if (GeqLc(a, b).holds && GeqLc(b, c).holds) {
      ASSERT_TRUE(GeqLc(a, c).holds);
    }
  }
  // Two different cheap-talk structures rank both ways.
  const VerifStructure one = CheapTalk({"a"});
  const VerifStructure two = CheapTalk({"a", "b"});
  EXPECT_NE(one, two);
  EXPECT_TRUE(GeqLc(one, two).holds);
  EXPECT_TRUE(GeqLc(two, one).holds);
}

TEST(IoProperties, RandomRoundTrips) {
  GameGen gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    const GameSpec game = gen.Game();
    ASSERT_EQ(io::ParseGame(io::ToJson(game)), game);
    const Equilibrium eq = Solve(game);
    ASSERT_EQ(io::ParseEquilibrium(io::ToJson(eq), game), eq);
  }
}

}  // namespace
}  // namespace vds

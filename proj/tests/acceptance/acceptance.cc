// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every comparison is exact rational equality or order; there are
// no tolerances to tune. The time limit per criterion is pinned below.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "support/games.h"
#include "support/random_games.h"
#include "vdsolve/comparative.h"
#include "vdsolve/io.h"
#include "vdsolve/oracle.h"

namespace vds {
namespace {

using testing::GameGen;
using testing::Q;

constexpr double kSecondsPerCriterion = 10.0;

// Thrown by Check to end a criterion with a reason.
struct Failure {
  std::string why;
};

void Check(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::string Fixture(const std::string& name) {
  const std::string path = std::string(VDSOLVE_FIXTURES) + "/" + name;
  std::ifstream in(path);
  if (!in) throw Failure{"missing fixture " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Show(const GameSpec& g) { return io::ToJson(g); }

void SplitReproduction() {
  const GameSpec game = io::ParseGame(Fixture("three_action.json"));
  const Equilibrium eq = Solve(game);
  Check(eq.signal.support == std::vector<Rational>{Q(0), Q(1, 2)},
        "support " + eq.signal.ToString());
  Check(eq.beliefs.at("m_L") == Q(0) && eq.beliefs.at("m_M") == Q(1, 2),
        "beliefs");
  Check(eq.value == Q(2, 3), "value " + eq.value.ToString());
}

void MoreVerifiabilityHurts() {
  const GameSpec cheap = io::ParseGame(Fixture("cheap_talk_game.json"));
  const GameSpec more = io::ParseGame(Fixture("high_certificate.json"));
  const Rational v_cheap = Solve(cheap).value;
  const Rational v_more = Solve(more).value;
  Check(v_cheap == Q(2), "cheap talk value " + v_cheap.ToString());
  Check(v_more == Q(5, 3), "extended value " + v_more.ToString());
  Check(GeqSep(more.structure(), cheap.structure()).holds &&
            GeqLc(more.structure(), cheap.structure()).holds,
        "the extended structure should dominate");
  Check(v_more < v_cheap, "value should drop");
}

void FullCommitment() {
  const GameSpec game = io::ParseGame(Fixture("mandatory_disclosure.json"));
  const Equilibrium eq = Solve(game);
  Check(eq.value == Q(5, 4), "value " + eq.value.ToString());
  Check(eq.signal.support == std::vector<Rational>{Q(0), Q(4, 5)},
        "support " + eq.signal.ToString());
}

void SkepticalOnPath() {
  GameGen gen(1001);
  for (int i = 0; i < 500; ++i) {
    const GameSpec game = gen.PnbpGame();
    const Equilibrium eq = Solve(game);
    const VerificationReport r = VerifyEquilibrium(game, eq);
    Check(r.ok(), "verify: " + r.detail + "\n" + Show(game));
    Check(OnPathTypesLowestConsistent(game, eq), "lowest types\n" + Show(game));
    for (const auto& [s, m] : eq.messaging) {
      const Rational b = BeliefOf(game.structure(), eq.beliefs, m);
      Check(b == MinInverse(game.structure(), m), "not skeptical\n" + Show(game));
      Check(b == s, "not revealing\n" + Show(game));
    }
  }
}

void OracleEquivalence() {
  GameGen gen(1002);
  for (int i = 0; i < 100; ++i) {
    const GameSpec game = gen.OracleGame(true);
    const oracle::SearchResult r = oracle::ExhaustiveSearch(game);
    const Rational analytic = Cav(SkepticalValue(game))(game.prior());
    Check(!r.values.empty(), "oracle found nothing\n" + Show(game));
    Check(*r.values.rbegin() == analytic, "oracle max differs\n" + Show(game));
    Check(Solve(game).value == analytic, "solve differs\n" + Show(game));
  }
}

void NoInformationWithoutPnbp() {
  GameGen gen(1003);
  for (int i = 0; i < 200; ++i) {
    const GameSpec game = gen.OracleGame(false);
    const Equilibrium eq = Solve(game);
    const Rational at_prior = game.payoff()(game.prior());
    Check(eq.signal == Signal::Degenerate(game.prior()), "informative");
    Check(eq.value == at_prior, "value\n" + Show(game));
    Check(VerifyEquilibrium(game, eq).ok(), "verify\n" + Show(game));
    const oracle::SearchResult r = oracle::ExhaustiveSearch(game);
    Check(r.values.empty() || *r.values.rbegin() <= at_prior,
          "oracle beats v(prior)\n" + Show(game));
  }
}

void LowestConsistentComparative() {
  GameGen gen(1004);
  int pairs = 0;
  while (pairs < 200) {
    const auto [hi, lo] = gen.LcPair();
    Check(GeqLc(hi, lo).holds, "generator produced a failing pair");
    const GameSpec game_lo(gen.Payoff(), gen.UnitRational(false), lo);
    if (!Pnbp(game_lo).holds) continue;
    const GameSpec game_hi(game_lo.payoff(), game_lo.prior(), hi);
    Check(EquilibriumValue(game_lo).value <= EquilibriumValue(game_hi).value,
          "value fell\n" + Show(game_lo) + Show(game_hi));
    ++pairs;
  }
  for (int i = 0; i < 50; ++i) {
    const auto [hi, lo] = gen.FailingLcPair();
    const SeparatingInstance s = MakeSeparatingInstance(hi, lo);
    Check(s.value_hi < s.value_lo, "no reversal\n" + io::ToJson(s));
  }
}

void TopOnlyFullInformation() {
  const GameSpec fixture = io::ParseGame(Fixture("receiver_optimal.json"));
  Check(IsReceiverOptimal(fixture.structure()), "fixture not receiver-optimal");
  Check(Solve(fixture).signal.support == std::vector<Rational>{Q(0), Q(1)},
        "fixture support");
  GameGen gen(1005);
  int games = 0;
  while (games < 100) {
    const StepFunction v = gen.Payoff();
    const Rational prior = gen.UnitRational(false);
    if (!(v(prior) < v(Q(1)))) continue;
    const GameSpec game(v, prior, fixture.structure());
    const Equilibrium eq = Solve(game);
    Check(eq.signal.support == std::vector<Rational>{Q(0), Q(1)},
          "support " + eq.signal.ToString() + "\n" + Show(game));
    ++games;
  }
  // Indicator payoff at the threshold: partial information, value p/s*.
  const Rational s_star = Q(1, 2);
  const StepFunction indicator({Q(0), s_star}, {Q(0), Q(1)});
  for (const Rational& prior : {Q(1, 10), Q(1, 4), Q(1, 3), Q(9, 20)}) {
    const GameSpec game(indicator, prior, testing::HalfThreshold());
    const Equilibrium eq = Solve(game);
    Check(eq.signal.support != std::vector<Rational>{Q(0), Q(1)},
          "full information at prior " + prior.ToString());
    Check(eq.value == prior / s_star, "value at prior " + prior.ToString());
  }
}

void SeparationVersusLowestConsistent() {
  GameGen gen(1006);
  for (int i = 0; i < 200; ++i) {
    const auto [hi, lo] = gen.MixedPair();
    if (GeqSep(hi, lo).holds) {
      Check(GeqLc(hi, lo).holds, "sep without lc\n" + io::ToJson(hi) +
                                     io::ToJson(lo));
    }
  }
  const VerifStructure a = io::ParseStructure(Fixture("sep_bounded.json"));
  const VerifStructure b = io::ParseStructure(Fixture("sep_threshold.json"));
  Check(GeqLc(a, b).holds && GeqLc(b, a).holds, "lc should hold both ways");
  Check(!GeqSep(a, b).holds && !GeqSep(b, a).holds,
        "sep should fail both ways");
}

void ConcavificationSuite() {
  GameGen gen(1007);
  for (int i = 0; i < 1000; ++i) {
    const StepFunction f = gen.AnyStep();
    const ConcavePL g = Cav(f);
    std::vector<Rational> grid;
    std::vector<Point> pts;
    for (std::size_t k = 0; k < f.knots().size(); ++k) {
      const Rational& x = f.knots()[k];
      grid.push_back(x);
      pts.push_back({x, f.knot_values()[k]});
      if (k > 0) pts.push_back({x, f.gap_values()[k - 1]});
      if (k < f.gap_values().size()) {
        pts.push_back({x, f.gap_values()[k]});
        grid.push_back(Midpoint(x, f.knots()[k + 1]));
      }
    }
    for (const Rational& x : grid) {
      Check(g(x) >= f(x), "not a majorant of " + f.ToString());
      Check(g(x) == oracle::DiscreteCav(pts, x),
            "discrete hull differs for " + f.ToString());
    }
    const std::vector<Rational> slopes = g.Slopes();
    for (std::size_t k = 1; k < slopes.size(); ++k) {
      Check(slopes[k] < slopes[k - 1], "slopes of " + g.ToString());
    }
  }
}

}  // namespace
}  // namespace vds

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"three-action split: support {0,1/2}, beliefs 0 and 1/2, value 2/3",
       vds::SplitReproduction},
      {"cheap talk value 2, added certificate value 5/3", vds::MoreVerifiabilityHurts},
      {"mandatory disclosure value 5/4 on {0,4/5}", vds::FullCommitment},
      {"500 PNBP games: verified, skeptical and revealing on path",
       vds::SkepticalOnPath},
      {"100 PNBP games: oracle max = cav v_-(prior) = solve value",
       vds::OracleEquivalence},
      {"200 no-PNBP games: no information, value v(prior), oracle bound",
       vds::NoInformationWithoutPnbp},
      {"200 lc pairs never lose value; 50 failing pairs reverse strictly",
       vds::LowestConsistentComparative},
      {"top-only certificate gives full information; indicator gives p/s*",
       vds::TopOnlyFullInformation},
      {"sep implies lc on 200 pairs; stored pair separates the two",
       vds::SeparationVersusLowestConsistent},
      {"1000 step functions: majorant, concave, equals discrete hull",
       vds::ConcavificationSuite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      criteria[i].second();
    } catch (const vds::Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (why.empty() && secs > vds::kSecondsPerCriterion) {
      why = "took longer than the time limit";
    }
    std::printf("%s %2zu  %s  (%.2fs)\n", why.empty() ? "PASS" : "FAIL", i + 1,
                criteria[i].first, secs);
    if (!why.empty()) {
      std::printf("       %s\n", why.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

#ifndef VDSOLVE_EQUILIBRIUM_H_
#define VDSOLVE_EQUILIBRIUM_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdsolve/piecewise.h"
#include "vdsolve/rational.h"
#include "vdsolve/verifiability.h"

namespace vds {

// Sender payoff v, common prior, and verifiability structure.
class GameSpec {
 public:
  // payoff must be non-decreasing and upper semicontinuous; prior in [0,1].
  GameSpec(StepFunction payoff, Rational prior, VerifStructure structure);

  const StepFunction& payoff() const { return payoff_; }
  const Rational& prior() const { return prior_; }
  const VerifStructure& structure() const { return structure_; }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  StepFunction payoff_;
  Rational prior_;
  VerifStructure structure_;
};

// Distribution over sender posteriors. Valid signals have distinct posteriors
// in [0,1], positive weights summing to one, and mean equal to the prior.
struct Signal {
  std::vector<Rational> support;
  std::vector<Rational> weights;

  static Signal Degenerate(const Rational& posterior);
  // Two-point split of prior on {lo, hi}; degenerate when lo == hi.
  static Signal Split(const Rational& prior, const Rational& lo,
                      const Rational& hi);

  Rational Mean() const;
  std::string ToString() const;

  friend bool operator==(const Signal&, const Signal&) = default;
};

// Empty when the signal is valid for the prior, else a description.
std::optional<std::string> SignalProblem(const Signal& signal,
                                         const Rational& prior);

// Receiver belief after each stored message. Identity messages are not
// listed; their belief is forced to the sending type.
using BeliefMap = std::map<std::string, Rational, std::less<>>;

Rational BeliefOf(const VerifStructure& m, const BeliefMap& beliefs,
                  std::string_view message);

BeliefMap SkepticalBeliefs(const VerifStructure& m);

// How the sender picks messages at types outside the signal's support.
enum class OffSupportRule {
  // The existence construction: the designated message when available,
  // otherwise the available message with the highest lowest sender.
  kConstruction,
  // Any payoff-maximising message given the beliefs.
  kBestResponse,
};

struct Equilibrium {
  Signal signal;
  std::map<Rational, std::string> messaging;  // support type -> message
  BeliefMap beliefs;
  Rational value;
  StepFunction w_beta = StepFunction::Constant(0);
  Rational s_minus;
  Rational s_plus;
  bool pnbp = false;
  // Message whose belief is pinned at the prior in the no-information
  // construction.
  std::optional<std::string> designated;
  OffSupportRule off_support = OffSupportRule::kConstruction;

  friend bool operator==(const Equilibrium&, const Equilibrium&) = default;
};

struct PnbpResult {
  bool holds = false;
  std::optional<std::string> witness;
};

// Whether some message, read as skeptically as possible, still pays
// strictly more than the prior. The witness maximises v(min M^{-1}(m)),
// ties broken by name.
PnbpResult Pnbp(const GameSpec& game);

// v composed with the skeptical type map; v itself under full verifiability.
StepFunction SkepticalValue(const GameSpec& game);

enum class ValueTag { kUnique, kSenderPreferred };

struct ValueResult {
  Rational value;
  ValueTag tag;
};

// (cav v_-)(prior) when PNBP holds, otherwise v(prior).
ValueResult EquilibriumValue(const GameSpec& game);

// Nearest contact points of Cav(w) on either side of the prior. Throws
// DomainError when one of them is an unattained limit, which requires
// w to fail upper semicontinuity.
std::pair<Rational, Rational> SplitPoints(const StepFunction& w,
                                          const Rational& prior);

// w_beta(s) = max over m in M(s) of v(beta(m)).
StepFunction ComputeWBeta(const GameSpec& game, const BeliefMap& beliefs);

// Message the equilibrium prescribes at any type s.
std::string ChooseMessage(const GameSpec& game, const Equilibrium& eq,
                          const Rational& s);

// Canonical equilibrium: the two-point skeptical construction under PNBP,
// the no-information equilibrium otherwise.
Equilibrium Solve(const GameSpec& game);

enum class ViolationKind {
  kNone,
  kMalformed,
  kBeliefConsistency,
  kSignalOptimality,
  kMessageOptimality,
  kBayesOnPath,
  kValueMismatch,
};

std::string_view ToString(ViolationKind kind);

struct VerificationReport {
  ViolationKind kind = ViolationKind::kNone;
  std::string detail;
  // Profitable deviation witnesses.
  std::optional<Signal> deviating_signal;
  std::optional<Rational> deviation_value;
  std::optional<Rational> deviating_type;
  std::optional<std::string> deviating_message;

  bool ok() const { return kind == ViolationKind::kNone; }
};

// Checks the three equilibrium conditions (optimal acquisition, optimal
// messaging on the critical grid, consistent beliefs with Bayes' rule on
// path) and reports the first failure.
VerificationReport VerifyEquilibrium(const GameSpec& game,
                                     const Equilibrium& eq);

// Every on-path type is the lowest sender of the message it sends. Throws
// PreconditionError when the game does not satisfy PNBP.
bool OnPathTypesLowestConsistent(const GameSpec& game, const Equilibrium& eq);

}  // namespace vds

#endif  // VDSOLVE_EQUILIBRIUM_H_

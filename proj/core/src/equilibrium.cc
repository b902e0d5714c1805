#include "vdsolve/equilibrium.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "vdsolve/errors.h"
#include "vdsolve/oracle.h"
#include "verify_internal.h"

namespace vds {
namespace {

// Highest lowest-sender among messages available at s; ties go to the
// lexicographically smallest name (MessagesAt is sorted).
std::string MostSkepticalProof(const VerifStructure& m, const Rational& s) {
  const std::vector<std::string> available = MessagesAt(m, s);
  const std::string* best = &available.front();
  Rational best_min = MinInverse(m, *best);
  for (const std::string& name : available) {
    Rational lo = MinInverse(m, name);
    if (best_min < lo) {
      best = &name;
      best_min = std::move(lo);
    }
  }
  return *best;
}

Rational WBetaAt(const GameSpec& game, const BeliefMap& beliefs,
                 const Rational& s) {
  std::optional<Rational> best;
  for (const std::string& name : MessagesAt(game.structure(), s)) {
    Rational value = game.payoff()(BeliefOf(game.structure(), beliefs, name));
    if (!best || *best < value) best = std::move(value);
  }
  return *best;
}

Rational RealizedValue(const GameSpec& game, const Equilibrium& eq) {
  Rational total;
  for (std::size_t i = 0; i < eq.signal.support.size(); ++i) {
    const std::string& message = eq.messaging.at(eq.signal.support[i]);
    total += eq.signal.weights[i] *
             game.payoff()(BeliefOf(game.structure(), eq.beliefs, message));
  }
  return total;
}

VerificationReport Fail(ViolationKind kind, std::string detail) {
  VerificationReport r;
  r.kind = kind;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

GameSpec::GameSpec(StepFunction payoff, Rational prior,
                   VerifStructure structure)
    : payoff_(std::move(payoff)),
      prior_(std::move(prior)),
      structure_(std::move(structure)) {
  if (!payoff_.IsNonDecreasing()) {
    throw ConstructionError("payoff must be non-decreasing");
  }
  if (!payoff_.IsUpperSemicontinuous()) {
    throw ConstructionError("payoff must be upper semicontinuous");
  }
  if (!InUnitInterval(prior_)) {
    throw ConstructionError("prior " + prior_.ToString() +
                            " outside [0,1]");
  }
}

Signal Signal::Degenerate(const Rational& posterior) {
  return {{posterior}, {Rational(1)}};
}

Signal Signal::Split(const Rational& prior, const Rational& lo,
                     const Rational& hi) {
  if (lo == hi) return Degenerate(lo);
  const Rational weight_hi = (prior - lo) / (hi - lo);
  if (weight_hi.Sign() == 0) return Degenerate(lo);
  if (weight_hi == Rational(1)) return Degenerate(hi);
  return {{lo, hi}, {Rational(1) - weight_hi, weight_hi}};
}

Rational Signal::Mean() const {
  Rational mean;
  for (std::size_t i = 0; i < support.size(); ++i) {
    mean += support[i] * weights[i];
  }
  return mean;
}

std::string Signal::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i > 0) out += ", ";
    out += support[i].ToString() + ":" + weights[i].ToString();
  }
  return out + "}";
}

std::optional<std::string> SignalProblem(const Signal& signal,
                                         const Rational& prior) {
  if (signal.support.empty() ||
      signal.support.size() != signal.weights.size()) {
    return "signal support and weights must be non-empty and aligned";
  }
  std::set<Rational> distinct(signal.support.begin(), signal.support.end());
  if (distinct.size() != signal.support.size()) {
    return "signal posteriors must be distinct";
  }
  Rational total;
  for (std::size_t i = 0; i < signal.support.size(); ++i) {
    if (!InUnitInterval(signal.support[i])) {
      return "posterior " + signal.support[i].ToString() + " outside [0,1]";
    }
    if (signal.weights[i].Sign() <= 0) return "signal weights must be positive";
    total += signal.weights[i];
  }
  if (total != Rational(1)) return "signal weights sum to " + total.ToString();
  if (signal.Mean() != prior) {
    return "signal mean " + signal.Mean().ToString() + " differs from prior " +
           prior.ToString();
  }
  return std::nullopt;
}

Rational BeliefOf(const VerifStructure& m, const BeliefMap& beliefs,
                  std::string_view message) {
  // Stored names never carry the identity prefix, so look them up first.
  const auto it = beliefs.find(message);
  if (it != beliefs.end() && m.Find(message) != nullptr) return it->second;
  if (m.full_verifiability()) {
    if (auto s = ParseIdentityMessageName(message)) return *s;
  }
  if (it == beliefs.end()) {
    throw LookupError("no belief for message '" + std::string(message) + "'");
  }
  return it->second;
}

BeliefMap SkepticalBeliefs(const VerifStructure& m) {
  BeliefMap beliefs;
  for (const Message& msg : m.messages()) {
    beliefs.emplace(msg.name, *msg.support.Min());
  }
  return beliefs;
}

PnbpResult Pnbp(const GameSpec& game) {
  const StepFunction& v = game.payoff();
  const Rational at_prior = v(game.prior());
  std::vector<std::pair<Rational, std::string>> candidates;
  for (const Message& msg : game.structure().messages()) {
    candidates.emplace_back(v(*msg.support.Min()), msg.name);
  }
  if (game.structure().full_verifiability()) {
    candidates.emplace_back(v(Rational(1)), IdentityMessageName(Rational(1)));
  }
  PnbpResult result;
  const std::pair<Rational, std::string>* best = nullptr;
  for (const auto& c : candidates) {
    if (!(at_prior < c.first)) continue;
    if (best == nullptr || best->first < c.first ||
        (best->first == c.first && c.second < best->second)) {
      best = &c;
    }
  }
  if (best != nullptr) {
    result.holds = true;
    result.witness = best->second;
  }
  return result;
}

StepFunction SkepticalValue(const GameSpec& game) {
  const SkepticalTypeMap g = ComputeSkepticalTypeMap(game.structure());
  if (g.identity) return game.payoff();
  return Compose(game.payoff(), *g.steps);
}

ValueResult EquilibriumValue(const GameSpec& game) {
  if (Pnbp(game).holds) {
    return {Cav(SkepticalValue(game))(game.prior()), ValueTag::kUnique};
  }
  return {game.payoff()(game.prior()), ValueTag::kSenderPreferred};
}

std::pair<Rational, Rational> SplitPoints(const StepFunction& w,
                                          const Rational& prior) {
  if (!InUnitInterval(prior)) {
    throw DomainError("prior " + prior.ToString() + " outside [0,1]");
  }
  const IntervalUnion contact = ContactSet(w, Cav(w));
  std::optional<Rational> lo;
  bool lo_attained = false;
  std::optional<Rational> hi;
  bool hi_attained = false;
  for (const Interval& piece : contact.intervals()) {
    if (piece.Contains(prior)) return {prior, prior};
    if (piece.hi < prior || (piece.hi == prior && !piece.hi_closed)) {
      lo = piece.hi;  // pieces are ascending, so the last one wins
      lo_attained = piece.hi_closed;
    } else if (!hi && (prior < piece.lo ||
                       (piece.lo == prior && !piece.lo_closed))) {
      hi = piece.lo;
      hi_attained = piece.lo_closed;
    }
  }
  if (!lo || !hi) {
    throw DomainError(
        "no optimal signal: the hull leaves the function at an endpoint "
        "(payoff to types is not upper semicontinuous)");
  }
  if (!lo_attained || !hi_attained) {
    throw DomainError(
        "no optimal signal: the contact point nearest the prior is not "
        "attained (payoff to types is not upper semicontinuous)");
  }
  return {*lo, *hi};
}

StepFunction ComputeWBeta(const GameSpec& game, const BeliefMap& beliefs) {
  std::vector<Rational> knots = game.structure().SupportEndpoints();
  if (game.structure().full_verifiability()) {
    const auto& v_knots = game.payoff().knots();
    knots.insert(knots.end(), v_knots.begin(), v_knots.end());
  }
  knots.emplace_back(0);
  knots.emplace_back(1);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::vector<Rational> knot_values;
  std::vector<Rational> gap_values;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    knot_values.push_back(WBetaAt(game, beliefs, knots[i]));
    if (i + 1 < knots.size()) {
      gap_values.push_back(
          WBetaAt(game, beliefs, Midpoint(knots[i], knots[i + 1])));
    }
  }
  return StepFunction::FromKnots(std::move(knots), std::move(knot_values),
                                 std::move(gap_values));
}

std::string ChooseMessage(const GameSpec& game, const Equilibrium& eq,
                          const Rational& s) {
  if (auto it = eq.messaging.find(s); it != eq.messaging.end()) {
    return it->second;
  }
  const VerifStructure& m = game.structure();
  if (eq.off_support == OffSupportRule::kBestResponse) {
    const std::vector<std::string> available = MessagesAt(m, s);
    const std::string* best = &available.front();
    Rational best_value = game.payoff()(BeliefOf(m, eq.beliefs, *best));
    for (const std::string& name : available) {
      Rational value = game.payoff()(BeliefOf(m, eq.beliefs, name));
      if (best_value < value) {
        best = &name;
        best_value = std::move(value);
      }
    }
    return *best;
  }
  if (eq.designated) {
    const std::vector<std::string> available = MessagesAt(m, s);
    if (std::binary_search(available.begin(), available.end(),
                           *eq.designated)) {
      return *eq.designated;
    }
  }
  return MostSkepticalProof(m, s);
}

Equilibrium Solve(const GameSpec& game) {
  const VerifStructure& m = game.structure();
  const Rational& prior = game.prior();
  Equilibrium eq;
  eq.pnbp = Pnbp(game).holds;
  eq.beliefs = SkepticalBeliefs(m);
  if (!eq.pnbp) {
    // No information: pin the most credible message available at the prior
    // to the prior itself. Every other belief stays skeptical and so pays at
    // most v(prior).
    std::string m0 = MostSkepticalProof(m, prior);
    if (m.Find(m0) != nullptr) eq.beliefs[m0] = prior;
    eq.designated = std::move(m0);
  }
  eq.w_beta = ComputeWBeta(game, eq.beliefs);
  std::tie(eq.s_minus, eq.s_plus) = SplitPoints(eq.w_beta, prior);
  eq.signal = eq.pnbp ? Signal::Split(prior, eq.s_minus, eq.s_plus)
                      : Signal::Degenerate(prior);
  for (const Rational& s : eq.signal.support) {
    eq.messaging.emplace(s, ChooseMessage(game, eq, s));
  }
  eq.value = RealizedValue(game, eq);
  return eq;
}

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNone:
      return "ok";
    case ViolationKind::kMalformed:
      return "malformed";
    case ViolationKind::kBeliefConsistency:
      return "belief consistency";
    case ViolationKind::kSignalOptimality:
      return "optimal information acquisition";
    case ViolationKind::kMessageOptimality:
      return "sequentially rational communication";
    case ViolationKind::kBayesOnPath:
      return "Bayes' rule on path";
    case ViolationKind::kValueMismatch:
      return "value mismatch";
  }
  return "unknown";
}

namespace internal {

VerificationReport VerifyWith(
    const GameSpec& game, const Equilibrium& eq,
    const std::function<const oracle::Deviation&()>& deviation,
    const std::vector<Rational>& grid) {
  const VerifStructure& m = game.structure();
  const StepFunction& v = game.payoff();

  if (auto problem = SignalProblem(eq.signal, game.prior())) {
    return Fail(ViolationKind::kMalformed, *problem);
  }
  if (eq.messaging.size() != eq.signal.support.size()) {
    return Fail(ViolationKind::kMalformed,
                "messaging must cover exactly the signal support");
  }
  for (const Rational& s : eq.signal.support) {
    const auto it = eq.messaging.find(s);
    if (it == eq.messaging.end()) {
      return Fail(ViolationKind::kMalformed,
                  "no message for support type " + s.ToString());
    }
    const std::vector<std::string> available = MessagesAt(m, s);
    if (!std::binary_search(available.begin(), available.end(), it->second)) {
      return Fail(ViolationKind::kMalformed, "message '" + it->second +
                                                 "' unavailable at " +
                                                 s.ToString());
    }
  }
  for (const auto& [name, belief] : eq.beliefs) {
    if (m.Find(name) == nullptr) {
      return Fail(ViolationKind::kMalformed,
                  "belief for unknown message '" + name + "'");
    }
  }
  for (const Message& msg : m.messages()) {
    const auto it = eq.beliefs.find(msg.name);
    if (it == eq.beliefs.end()) {
      return Fail(ViolationKind::kMalformed,
                  "no belief for message '" + msg.name + "'");
    }
    if (!ConvexHullOfSupport(m, msg.name).Contains(it->second)) {
      return Fail(ViolationKind::kBeliefConsistency,
                  "belief " + it->second.ToString() + " after '" + msg.name +
                      "' lies outside the hull of its senders");
    }
  }

  const Rational realized = RealizedValue(game, eq);
  const oracle::Deviation& best = deviation();
  if (realized < best.value) {
    VerificationReport r = Fail(
        ViolationKind::kSignalOptimality,
        "signal " + best.signal.ToString() + " pays " +
            best.value.ToString() + " > " + realized.ToString());
    r.deviating_signal = best.signal;
    r.deviation_value = best.value;
    return r;
  }

  std::vector<Rational> types = grid;
  types.insert(types.end(), eq.signal.support.begin(),
               eq.signal.support.end());
  for (const Rational& s : types) {
    const std::string chosen = ChooseMessage(game, eq, s);
    const Rational chosen_value = v(BeliefOf(m, eq.beliefs, chosen));
    for (const std::string& alt : MessagesAt(m, s)) {
      if (chosen_value < v(BeliefOf(m, eq.beliefs, alt))) {
        VerificationReport r =
            Fail(ViolationKind::kMessageOptimality,
                 "type " + s.ToString() + " prefers '" + alt + "' to '" +
                     chosen + "'");
        r.deviating_type = s;
        r.deviating_message = alt;
        return r;
      }
    }
  }

  std::map<std::string, Rational> residual;
  for (std::size_t i = 0; i < eq.signal.support.size(); ++i) {
    const Rational& s = eq.signal.support[i];
    const std::string& message = eq.messaging.at(s);
    residual[message] +=
        eq.signal.weights[i] * (s - BeliefOf(m, eq.beliefs, message));
  }
  for (const auto& [message, r] : residual) {
    if (r.Sign() != 0) {
      return Fail(ViolationKind::kBayesOnPath,
                  "belief after on-path message '" + message +
                      "' is not the posterior mean of its senders");
    }
  }

  if (eq.value != realized) {
    return Fail(ViolationKind::kValueMismatch,
                "stated value " + eq.value.ToString() + " but strategies pay " +
                    realized.ToString());
  }
  return {};
}

}  // namespace internal

VerificationReport VerifyEquilibrium(const GameSpec& game,
                                     const Equilibrium& eq) {
  std::optional<oracle::Deviation> best;
  return internal::VerifyWith(
      game, eq,
      [&]() -> const oracle::Deviation& {
        best = oracle::BestDeviation(game, eq.beliefs);
        return *best;
      },
      oracle::ComputeCriticalGrid(game).points);
}

bool OnPathTypesLowestConsistent(const GameSpec& game, const Equilibrium& eq) {
  if (!Pnbp(game).holds) {
    throw PreconditionError(
        "lowest-consistency of on-path types is only implied under PNBP");
  }
  return std::all_of(eq.messaging.begin(), eq.messaging.end(),
                     [&](const auto& entry) {
                       return entry.first ==
                              MinInverse(game.structure(), entry.second);
                     });
}

}  // namespace vds

#include "vdsolve/oracle.h"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "vdsolve/errors.h"
#include "verify_internal.h"

namespace vds::oracle {
namespace {

Rational WBetaAt(const GameSpec& game, const BeliefMap& beliefs,
                 const Rational& s) {
  std::optional<Rational> best;
  for (const std::string& name : MessagesAt(game.structure(), s)) {
    Rational value = game.payoff()(BeliefOf(game.structure(), beliefs, name));
    if (!best || *best < value) best = std::move(value);
  }
  return *best;
}

void RequireConsistent(const VerifStructure& m, const BeliefMap& beliefs) {
  for (const Message& msg : m.messages()) {
    const auto it = beliefs.find(msg.name);
    if (it == beliefs.end()) {
      throw PreconditionError("no belief for message '" + msg.name + "'");
    }
    if (!ConvexHullOfSupport(m, msg.name).Contains(it->second)) {
      throw PreconditionError("belief after '" + msg.name +
                              "' outside the hull of its senders");
    }
  }
}

// Value of the chord through (a, w_a) and (b, w_b) at x, a < x < b.
Rational Chord(const Rational& a, const Rational& w_a, const Rational& b,
               const Rational& w_b, const Rational& x) {
  return (w_a * (b - x) + w_b * (x - a)) / (b - a);
}

Deviation BestDeviationOn(const GameSpec& game, const BeliefMap& beliefs,
                          const std::vector<Rational>& x);

// Per-belief-map work shared by every candidate with the same beliefs.
class BeliefCache {
 public:
  struct Entry {
    Deviation deviation;
    StepFunction w_beta;
  };

  BeliefCache(const GameSpec& game, const std::vector<Rational>& grid)
      : game_(game), grid_(grid) {}

  const Entry& Get(const BeliefMap& beliefs) {
    auto it = cache_.find(beliefs);
    if (it == cache_.end()) {
      it = cache_
               .emplace(beliefs,
                        Entry{BestDeviationOn(game_, beliefs, grid_),
                              ComputeWBeta(game_, beliefs)})
               .first;
    }
    return it->second;
  }

 private:
  const GameSpec& game_;
  const std::vector<Rational>& grid_;
  std::map<BeliefMap, Entry> cache_;
};

// Bayes-plausible signals on grid supports of one to three points.
std::vector<Signal> CandidateSignals(const std::vector<Rational>& grid,
                                     const Rational& prior) {
  std::vector<Signal> out;
  out.push_back(Signal::Degenerate(prior));
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(grid[i] < prior)) continue;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (!(prior < grid[k])) continue;
      const Signal outer = Signal::Split(prior, grid[i], grid[k]);
      out.push_back(outer);
      for (std::size_t j = i + 1; j < k; ++j) {
        // Mix the outer split with the extreme three-point signal that puts
        // no mass on one endpoint. t runs over the open segment of weights.
        const Signal inner =
            grid[j] == prior ? Signal::Degenerate(prior)
            : grid[j] < prior ? Signal::Split(prior, grid[j], grid[k])
                              : Signal::Split(prior, grid[i], grid[j]);
        for (const Rational& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
          std::map<Rational, Rational> mass;
          for (std::size_t q = 0; q < outer.support.size(); ++q) {
            mass[outer.support[q]] += (Rational(1) - t) * outer.weights[q];
          }
          for (std::size_t q = 0; q < inner.support.size(); ++q) {
            mass[inner.support[q]] += t * inner.weights[q];
          }
          Signal s;
          for (auto& [x, w] : mass) {
            s.support.push_back(x);
            s.weights.push_back(w);
          }
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

}  // namespace

CriticalGrid ComputeCriticalGrid(const GameSpec& game) {
  std::vector<Rational> base = game.structure().SupportEndpoints();
  const auto& v_knots = game.payoff().knots();
  base.insert(base.end(), v_knots.begin(), v_knots.end());
  base.emplace_back(0);
  base.emplace_back(1);
  base.push_back(game.prior());
  if (game.structure().full_verifiability()) {
    const auto contact =
        ContactSet(game.payoff(), Cav(game.payoff())).Endpoints();
    base.insert(base.end(), contact.begin(), contact.end());
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  CriticalGrid grid;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i > 0) grid.points.push_back(Midpoint(base[i - 1], base[i]));
    grid.points.push_back(base[i]);
  }
  return grid;
}

Rational DiscreteCav(const std::vector<Point>& points, const Rational& x) {
  std::optional<Rational> best;
  auto offer = [&](Rational y) {
    if (!best || *best < y) best = std::move(y);
  };
  for (const Point& p : points) {
    if (p.x == x) offer(p.y);
  }
  for (const Point& a : points) {
    if (!(a.x < x)) continue;
    for (const Point& b : points) {
      if (x < b.x) offer(Chord(a.x, a.y, b.x, b.y, x));
    }
  }
  if (!best) {
    throw DomainError("x = " + x.ToString() + " outside the points' range");
  }
  return *best;
}

// Completeness: every message support is a union of intervals with
// endpoints among the base points, so M(s), and with it w_beta, is constant
// on each open cell between neighbouring base points. A signal's value is
// linear in where it puts each posterior within a cell, so the supremum is
// reached at base points with the cell value as the limit from inside. The
// lift below takes that limit; for usc w_beta it is a no-op and the optimum
// is attained on the grid.
Deviation BestDeviation(const GameSpec& game, const BeliefMap& beliefs) {
  RequireConsistent(game.structure(), beliefs);
  return BestDeviationOn(game, beliefs, ComputeCriticalGrid(game).points);
}

namespace {

Deviation BestDeviationOn(const GameSpec& game, const BeliefMap& beliefs,
                          const std::vector<Rational>& x) {
  const std::size_t n = x.size();
  std::vector<Rational> w;
  for (const Rational& s : x) w.push_back(WBetaAt(game, beliefs, s));
  std::vector<Rational> lifted = w;
  for (std::size_t i = 0; i < n; i += 2) {
    if (i > 0) lifted[i] = Max(lifted[i], w[i - 1]);
    if (i + 1 < n) lifted[i] = Max(lifted[i], w[i + 1]);
  }

  const Rational& prior = game.prior();
  const std::size_t at_prior =
      std::lower_bound(x.begin(), x.end(), prior) - x.begin();
  // At 0 or 1 only the degenerate signal exists, so nothing is approached.
  const bool interior = 0 < at_prior && at_prior + 1 < n;
  Deviation best{interior ? lifted[at_prior] : w[at_prior],
                 Signal::Degenerate(prior)};
  // Ties keep the candidate with the larger low point, then the smaller
  // high point; the degenerate signal wins all ties.
  std::optional<std::pair<std::size_t, std::size_t>> pick;
  for (std::size_t i = 0; i < at_prior; ++i) {
    for (std::size_t j = at_prior + 1; j < n; ++j) {
      const Rational value = Chord(x[i], lifted[i], x[j], lifted[j], prior);
      if (best.value < value ||
          (value == best.value && pick &&
           (i > pick->first || (i == pick->first && j < pick->second)))) {
        best.value = value;
        pick = {i, j};
      }
    }
  }
  if (pick) best.signal = Signal::Split(prior, x[pick->first], x[pick->second]);
  return best;
}

}  // namespace

SearchResult ExhaustiveSearch(const GameSpec& game, SearchLimits limits) {
  const VerifStructure& m = game.structure();
  if (m.messages().size() > limits.max_messages) {
    throw LimitError("structure has " + std::to_string(m.messages().size()) +
                     " messages, search limit is " +
                     std::to_string(limits.max_messages));
  }
  const CriticalGrid grid = ComputeCriticalGrid(game);
  if (grid.points.size() > limits.max_grid) {
    throw LimitError("critical grid has " +
                     std::to_string(grid.points.size()) +
                     " points, search limit is " +
                     std::to_string(limits.max_grid));
  }

  const StepFunction& v = game.payoff();
  const BeliefMap skeptical = SkepticalBeliefs(m);
  const bool pnbp = Pnbp(game).holds;
  BeliefCache cache(game, grid.points);
  SearchResult result;

  for (const Signal& signal : CandidateSignals(grid.points, game.prior())) {
    const std::size_t k = signal.support.size();
    std::vector<std::vector<std::string>> options;
    for (const Rational& s : signal.support) {
      options.push_back(MessagesAt(m, s));
    }
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      ++result.candidates;
      // Beliefs: Bayes on path, skeptical off path.
      std::map<std::string, std::pair<Rational, Rational>> senders;
      for (std::size_t i = 0; i < k; ++i) {
        auto& [mass, moment] = senders[options[i][choice[i]]];
        mass += signal.weights[i];
        moment += signal.weights[i] * signal.support[i];
      }
      BeliefMap beliefs = skeptical;
      bool consistent = true;
      for (const auto& [name, mw] : senders) {
        const Rational belief = mw.second / mw.first;
        if (m.Find(name) == nullptr) continue;  // identity message
        if (!ConvexHullOfSupport(m, name).Contains(belief)) {
          consistent = false;
          break;
        }
        beliefs[name] = belief;
      }

      // Cheap necessary conditions before the full check.
      bool viable = consistent;
      Rational realized;
      for (std::size_t i = 0; viable && i < k; ++i) {
        const Rational own = v(BeliefOf(m, beliefs, options[i][choice[i]]));
        for (const std::string& alt : options[i]) {
          if (own < v(BeliefOf(m, beliefs, alt))) {
            viable = false;
            break;
          }
        }
        realized += signal.weights[i] * own;
      }
      const BeliefCache::Entry* entry = viable ? &cache.Get(beliefs) : nullptr;
      if (viable && !(realized < entry->deviation.value)) {
        Equilibrium eq;
        eq.signal = signal;
        for (std::size_t i = 0; i < k; ++i) {
          eq.messaging.emplace(signal.support[i], options[i][choice[i]]);
        }
        eq.beliefs = std::move(beliefs);
        eq.value = realized;
        eq.pnbp = pnbp;
        eq.off_support = OffSupportRule::kBestResponse;
        eq.s_minus = signal.support.front();
        eq.s_plus = signal.support.back();
        eq.w_beta = entry->w_beta;
        const auto deviation = [&]() -> const Deviation& {
          return entry->deviation;
        };
        if (internal::VerifyWith(game, eq, deviation, grid.points).ok()) {
          result.values.insert(eq.value);
          result.equilibria.push_back(std::move(eq));
        }
      }

      std::size_t d = 0;
      while (d < k && ++choice[d] == options[d].size()) choice[d++] = 0;
      if (d == k) break;
    }
  }
  return result;
}

}  // namespace vds::oracle

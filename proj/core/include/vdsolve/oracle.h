#ifndef VDSOLVE_ORACLE_H_
#define VDSOLVE_ORACLE_H_

#include <cstddef>
#include <set>
#include <vector>

#include "vdsolve/equilibrium.h"
#include "vdsolve/piecewise.h"
#include "vdsolve/rational.h"

// Brute-force cross-checks that share no code path with the analytic
// solver: grid enumeration instead of hulls, pairwise search instead of
// contact sets.
namespace vds::oracle {

// Base points (0, 1, prior, payoff breakpoints, support endpoints, and under
// full verifiability the contact endpoints of cav v) with a midpoint inserted
// between each consecutive pair. Base points sit at even
// indices of `points`.
struct CriticalGrid {
  std::vector<Rational> points;

  bool IsBasePoint(std::size_t index) const { return index % 2 == 0; }
};

CriticalGrid ComputeCriticalGrid(const GameSpec& game);

// Value at x of the upper concave hull of `points`, by checking every pair
// of points that brackets x. Throws DomainError when no pair does.
Rational DiscreteCav(const std::vector<Point>& points, const Rational& x);

struct Deviation {
  Rational value;
  Signal signal;
};

// The sender's best signal given beliefs.
//
// Messages become available or unavailable only at base points, so w_beta is
// constant on each open cell between consecutive base points and the cell
// midpoint samples it exactly. The supremum over signals is the hull of the
// samples, with each base point lifted to the larger of its own value and
// its neighbouring cells' (the limit a signal can approach). When w_beta is
// upper semicontinuous the lift changes nothing and the returned signal
// attains the value. Throws PreconditionError for inconsistent beliefs.
Deviation BestDeviation(const GameSpec& game, const BeliefMap& beliefs);

struct SearchLimits {
  std::size_t max_messages = 4;
  std::size_t max_grid = 12;
};

struct SearchResult {
  std::set<Rational> values;
  std::vector<Equilibrium> equilibria;
  std::size_t candidates = 0;
};

// Enumerates pure messaging maps over grid supports of size at most three,
// sets on-path beliefs by Bayes' rule and off-path beliefs skeptically, and
// keeps every candidate that passes VerifyEquilibrium. Three-point supports
// have a one-parameter family of Bayes-plausible weights; the search samples
// it at 1/4, 1/2 and 3/4 of the way between its endpoints. Throws LimitError
// when the game exceeds `limits`.
SearchResult ExhaustiveSearch(const GameSpec& game, SearchLimits limits = {});

}  // namespace vds::oracle

#endif  // VDSOLVE_ORACLE_H_

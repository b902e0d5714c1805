#ifndef VDSOLVE_COMPARATIVE_H_
#define VDSOLVE_COMPARATIVE_H_

#include <optional>
#include <string>

#include "vdsolve/equilibrium.h"
#include "vdsolve/interval.h"
#include "vdsolve/rational.h"
#include "vdsolve/verifiability.h"

namespace vds {

// A type s and a set S that the lower structure can separate by sending
// `message` at s but the higher structure cannot. S is the complement of the
// message's support (for an identity message, [0,1] minus {s}).
struct SeparationWitness {
  Rational type;
  std::string message;
  IntervalUnion set;
};

struct OrderVerdict {
  bool holds = true;
  // Set on failure of the lowest-consistent comparison.
  std::optional<Rational> type_witness;
  // Set on failure of the separation comparison.
  std::optional<SeparationWitness> separation_witness;
};

// L(hi) contains L(lo). The witness is the smallest type of L(lo) missing
// from L(hi); when L(lo) is all of [0,1] it is the midpoint of the first gap
// of L(hi) together with 1.
OrderVerdict GeqLc(const VerifStructure& hi, const VerifStructure& lo);

// At every type, every set lo can separate with one message hi can separate
// too. Availability only changes at support endpoints, so it is checked at
// those, 0 and 1, and the midpoints between them.
OrderVerdict GeqSep(const VerifStructure& hi, const VerifStructure& lo);

bool IsSenderOptimal(const VerifStructure& m);
bool IsReceiverOptimal(const VerifStructure& m);

struct SeparatingInstance {
  Rational s_star;
  GameSpec game_hi;
  GameSpec game_lo;
  Rational value_hi;
  Rational value_lo;
};

// Payoff 1(s >= s*) and prior s*/2 for s* the GeqLc witness; lo then earns
// strictly more than hi. Throws PreconditionError when GeqLc(hi, lo) holds.
SeparatingInstance MakeSeparatingInstance(const VerifStructure& hi,
                                          const VerifStructure& lo);

}  // namespace vds

#endif  // VDSOLVE_COMPARATIVE_H_

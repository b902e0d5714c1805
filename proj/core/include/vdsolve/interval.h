#ifndef VDSOLVE_INTERVAL_H_
#define VDSOLVE_INTERVAL_H_

#include <optional>
#include <string>
#include <vector>

#include "vdsolve/rational.h"

namespace vds {

// Interval of the real line with rational endpoints and independent
// open/closed flags at either end.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval Closed(Rational lo, Rational hi);
  // [lo, hi)
  static Interval LeftClosed(Rational lo, Rational hi);
  static Interval Point(Rational x);

  bool IsEmpty() const;
  bool IsDegenerate() const { return lo == hi; }
  bool Contains(const Rational& x) const;
  std::string ToString() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of intervals, stored canonically: sorted, pairwise disjoint,
// non-empty, and with touching neighbours merged. Two unions describe the
// same set iff they compare equal.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> intervals);

  static IntervalUnion Unit();

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  bool Contains(const Rational& x) const;

  // Smallest element, when the infimum is attained.
  std::optional<Rational> Min() const;
  // Infimum/supremum of the set; the set must be non-empty.
  const Rational& Infimum() const;
  const Rational& Supremum() const;
  bool SupremumAttained() const;

  bool IsLeftClosed() const;

  // [0,1] \ *this.
  IntervalUnion ComplementInUnit() const;

  // All finite endpoints, ascending and deduplicated.
  std::vector<Rational> Endpoints() const;

  std::string ToString() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace vds

#endif  // VDSOLVE_INTERVAL_H_

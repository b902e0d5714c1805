#include "vdsolve/interval.h"

#include <algorithm>

#include "vdsolve/errors.h"

namespace vds {

Interval Interval::Closed(Rational lo, Rational hi) {
  return {std::move(lo), std::move(hi), true, true};
}

Interval Interval::LeftClosed(Rational lo, Rational hi) {
  return {std::move(lo), std::move(hi), true, false};
}

Interval Interval::Point(Rational x) { return {x, x, true, true}; }

bool Interval::IsEmpty() const {
  if (lo < hi) return false;
  return !(lo == hi && lo_closed && hi_closed);
}

bool Interval::Contains(const Rational& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string Interval::ToString() const {
  if (IsDegenerate() && lo_closed && hi_closed) {
    return "{" + lo.ToString() + "}";
  }
  return std::string(lo_closed ? "[" : "(") + lo.ToString() + "," +
         hi.ToString() + (hi_closed ? "]" : ")");
}

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& i) { return i.IsEmpty(); });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.lo_closed && !b.lo_closed;
            });
  for (Interval& next : intervals) {
    if (!intervals_.empty()) {
      Interval& cur = intervals_.back();
      const bool overlaps =
          next.lo < cur.hi ||
          (next.lo == cur.hi && (cur.hi_closed || next.lo_closed));
      if (overlaps) {
        if (next.hi > cur.hi) {
          cur.hi = next.hi;
          cur.hi_closed = next.hi_closed;
        } else if (next.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || next.hi_closed;
        }
        continue;
      }
    }
    intervals_.push_back(std::move(next));
  }
}

IntervalUnion IntervalUnion::Unit() {
  return IntervalUnion({Interval::Closed(0, 1)});
}

bool IntervalUnion::Contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& i) { return i.Contains(x); });
}

std::optional<Rational> IntervalUnion::Min() const {
  if (intervals_.empty() || !intervals_.front().lo_closed) return std::nullopt;
  return intervals_.front().lo;
}

const Rational& IntervalUnion::Infimum() const {
  if (intervals_.empty()) throw PreconditionError("infimum of empty set");
  return intervals_.front().lo;
}

const Rational& IntervalUnion::Supremum() const {
  if (intervals_.empty()) throw PreconditionError("supremum of empty set");
  return intervals_.back().hi;
}

bool IntervalUnion::SupremumAttained() const {
  return !intervals_.empty() && intervals_.back().hi_closed;
}

bool IntervalUnion::IsLeftClosed() const {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [](const Interval& i) { return i.lo_closed; });
}

IntervalUnion IntervalUnion::ComplementInUnit() const {
  std::vector<Interval> gaps;
  Rational lo(0);
  bool lo_closed = true;
  for (const Interval& i : intervals_) {
    gaps.push_back({lo, i.lo, lo_closed, !i.lo_closed});
    lo = i.hi;
    lo_closed = !i.hi_closed;
  }
  gaps.push_back({lo, Rational(1), lo_closed, true});
  return IntervalUnion(std::move(gaps));
}

std::vector<Rational> IntervalUnion::Endpoints() const {
  std::vector<Rational> out;
  for (const Interval& i : intervals_) {
    out.push_back(i.lo);
    out.push_back(i.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string IntervalUnion::ToString() const {
  if (intervals_.empty()) return "{}";
  std::string out;
  for (const Interval& i : intervals_) {
    if (!out.empty()) out += " U ";
    out += i.ToString();
  }
  return out;
}

}  // namespace vds

#include "vdsolve/piecewise.h"

#include <algorithm>

#include "vdsolve/errors.h"

namespace vds {
namespace {

void RequireUnit(const Rational& x, const char* what) {
  if (!InUnitInterval(x)) {
    throw DomainError(std::string(what) + ": " + x.ToString() +
                      " outside [0,1]");
  }
}

// Sign of the turn o -> a -> b; negative for a clockwise (right) turn.
int Turn(const Point& o, const Point& a, const Point& b) {
  return ((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)).Sign();
}

}  // namespace

StepFunction::StepFunction(std::vector<Rational> breakpoints,
                           std::vector<Rational> values) {
  if (breakpoints.empty() || breakpoints.size() != values.size()) {
    throw ConstructionError(
        "step function needs equally many (>= 1) breakpoints and values");
  }
  if (breakpoints.front() != Rational(0)) {
    throw ConstructionError("first breakpoint must be 0");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw ConstructionError("breakpoints must be strictly ascending");
    }
  }
  if (breakpoints.back() > Rational(1)) {
    throw ConstructionError("breakpoints must lie in [0,1]");
  }
  const std::size_t n = breakpoints.size();
  for (std::size_t i = 0; i < n; ++i) {
    knots_.push_back(breakpoints[i]);
    knot_values_.push_back(values[i]);
    if (breakpoints[i] < Rational(1)) gap_values_.push_back(values[i]);
  }
  if (breakpoints.back() < Rational(1)) {
    knots_.emplace_back(1);
    knot_values_.push_back(values.back());
  }
  Canonicalize();
}

StepFunction StepFunction::Constant(Rational c) {
  return StepFunction({Rational(0)}, {std::move(c)});
}

StepFunction StepFunction::FromKnots(std::vector<Rational> knots,
                                     std::vector<Rational> knot_values,
                                     std::vector<Rational> gap_values) {
  if (knots.size() < 2 || knot_values.size() != knots.size() ||
      gap_values.size() + 1 != knots.size()) {
    throw ConstructionError("knot representation has inconsistent sizes");
  }
  if (knots.front() != Rational(0) || knots.back() != Rational(1)) {
    throw ConstructionError("knots must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1] < knots[i])) {
      throw ConstructionError("knots must be strictly ascending");
    }
  }
  StepFunction f;
  f.knots_ = std::move(knots);
  f.knot_values_ = std::move(knot_values);
  f.gap_values_ = std::move(gap_values);
  f.Canonicalize();
  return f;
}

void StepFunction::Canonicalize() {
  std::vector<Rational> knots{knots_.front()};
  std::vector<Rational> kv{knot_values_.front()};
  std::vector<Rational> gv;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const bool interior = i + 1 < knots_.size();
    if (interior && knot_values_[i] == gap_values_[i - 1] &&
        knot_values_[i] == gap_values_[i]) {
      continue;
    }
    gv.push_back(gap_values_[i - 1]);
    knots.push_back(knots_[i]);
    kv.push_back(knot_values_[i]);
  }
  knots_ = std::move(knots);
  knot_values_ = std::move(kv);
  gap_values_ = std::move(gv);
}

Rational StepFunction::operator()(const Rational& x) const {
  RequireUnit(x, "step function argument");
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const auto idx = static_cast<std::size_t>(it - knots_.begin()) - 1;
  if (knots_[idx] == x) return knot_values_[idx];
  return gap_values_[idx];
}

bool StepFunction::IsLeftClosed() const {
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (knot_values_[i] != gap_values_[i]) return false;
  }
  return true;
}

std::vector<Rational> StepFunction::Breakpoints() const {
  if (!IsLeftClosed()) {
    throw PreconditionError("step function has right-closed pieces");
  }
  std::vector<Rational> out(knots_.begin(), knots_.end() - 1);
  if (knot_values_.back() != gap_values_.back()) {
    out.push_back(knots_.back());
  }
  return out;
}

std::vector<Rational> StepFunction::Values() const {
  if (!IsLeftClosed()) {
    throw PreconditionError("step function has right-closed pieces");
  }
  std::vector<Rational> out(knot_values_.begin(), knot_values_.end() - 1);
  if (knot_values_.back() != gap_values_.back()) {
    out.push_back(knot_values_.back());
  }
  return out;
}

bool StepFunction::IsNonDecreasing() const {
  for (std::size_t i = 0; i < gap_values_.size(); ++i) {
    if (gap_values_[i] < knot_values_[i] ||
        knot_values_[i + 1] < gap_values_[i]) {
      return false;
    }
  }
  return true;
}

bool StepFunction::IsUpperSemicontinuous() const {
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (i > 0 && knot_values_[i] < gap_values_[i - 1]) return false;
    if (i < gap_values_.size() && knot_values_[i] < gap_values_[i]) {
      return false;
    }
  }
  return true;
}

std::string StepFunction::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (i > 0) {
      out += " (" + knots_[i - 1].ToString() + "," + knots_[i].ToString() +
             ")->" + gap_values_[i - 1].ToString();
    }
    out += " {" + knots_[i].ToString() + "}->" + knot_values_[i].ToString();
  }
  return out.substr(1);
}

StepFunction Compose(const StepFunction& outer, const StepFunction& inner) {
  std::vector<Rational> kv;
  std::vector<Rational> gv;
  for (const Rational& y : inner.knot_values()) kv.push_back(outer(y));
  for (const Rational& y : inner.gap_values()) gv.push_back(outer(y));
  return StepFunction::FromKnots(inner.knots(), std::move(kv), std::move(gv));
}

ConcavePL::ConcavePL(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.front().x > Rational(0) ||
      vertices_.back().x < Rational(1)) {
    throw ConstructionError("concave hull vertices must span [0,1]");
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!(vertices_[i - 1].x < vertices_[i].x)) {
      throw ConstructionError("hull vertices must have ascending x");
    }
  }
  const std::vector<Rational> slopes = Slopes();
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (!(slopes[i] < slopes[i - 1])) {
      throw ConstructionError("hull slopes must be strictly decreasing");
    }
  }
}

Rational ConcavePL::operator()(const Rational& x) const {
  RequireUnit(x, "concave function argument");
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), x,
      [](const Point& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const Point& right = *it;
  const Point& left = *(it - 1);
  return left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
}

std::vector<Rational> ConcavePL::Slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    out.push_back((vertices_[i].y - vertices_[i - 1].y) /
                  (vertices_[i].x - vertices_[i - 1].x));
  }
  return out;
}

std::string ConcavePL::ToString() const {
  std::string out;
  for (const Point& p : vertices_) {
    if (!out.empty()) out += " ";
    out += "(" + p.x.ToString() + "," + p.y.ToString() + ")";
  }
  return out;
}

std::vector<Point> UpperHull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return b.y < a.y;
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point& a, const Point& b) {
                             return a.x == b.x;
                           }),
               points.end());
  std::vector<Point> hull;
  for (Point& p : points) {
    while (hull.size() >= 2 &&
           Turn(hull[hull.size() - 2], hull.back(), p) >= 0) {
      hull.pop_back();
    }
    hull.push_back(std::move(p));
  }
  return hull;
}

ConcavePL Cav(const StepFunction& f) {
  const auto& knots = f.knots();
  std::vector<Point> candidates;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    candidates.push_back({knots[i], f.knot_values()[i]});
  }
  for (std::size_t i = 0; i < f.gap_values().size(); ++i) {
    candidates.push_back({knots[i], f.gap_values()[i]});
    candidates.push_back({knots[i + 1], f.gap_values()[i]});
  }
  return ConcavePL(UpperHull(std::move(candidates)));
}

IntervalUnion ContactSet(const StepFunction& f, const ConcavePL& g) {
  // g - c is concave and non-negative on a gap with value c, so it vanishes
  // somewhere inside the gap only if it vanishes on the whole gap. Testing the
  // midpoint therefore decides each gap exactly.
  const auto& knots = f.knots();
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (g(knots[i]) == f.knot_values()[i]) {
      pieces.push_back(Interval::Point(knots[i]));
    }
  }
  for (std::size_t i = 0; i < f.gap_values().size(); ++i) {
    if (g(Midpoint(knots[i], knots[i + 1])) == f.gap_values()[i]) {
      pieces.push_back({knots[i], knots[i + 1], false, false});
    }
  }
  return IntervalUnion(std::move(pieces));
}

}  // namespace vds

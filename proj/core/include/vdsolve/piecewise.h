#ifndef VDSOLVE_PIECEWISE_H_
#define VDSOLVE_PIECEWISE_H_

#include <string>
#include <vector>

#include "vdsolve/interval.h"
#include "vdsolve/rational.h"

namespace vds {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Piecewise-constant function on [0,1] with finitely many pieces.
//
// The usual way to build one is from left-closed pieces: values[i] holds on
// [breakpoints[i], breakpoints[i+1]) and the last value on
// [breakpoints.back(), 1]. A non-decreasing function built this way is upper
// semicontinuous.
//
// Internally the function is stored by knots 0 = x_0 < ... < x_n = 1 with a
// value at every knot and a value on every open gap (x_i, x_{i+1}). This also
// represents right-closed pieces, which arise when a message support ends
// with a closed endpoint below 1. Redundant knots are dropped, so equal
// functions have equal representations.
class StepFunction {
 public:
  StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static StepFunction Constant(Rational c);
  static StepFunction FromKnots(std::vector<Rational> knots,
                                std::vector<Rational> knot_values,
                                std::vector<Rational> gap_values);

  // Throws DomainError outside [0,1].
  Rational operator()(const Rational& x) const;

  const std::vector<Rational>& knots() const { return knots_; }
  const std::vector<Rational>& knot_values() const { return knot_values_; }
  const std::vector<Rational>& gap_values() const { return gap_values_; }

  // True iff every knot below 1 takes the value of the gap to its right.
  bool IsLeftClosed() const;
  // Left-closed view; throws PreconditionError when !IsLeftClosed().
  std::vector<Rational> Breakpoints() const;
  std::vector<Rational> Values() const;

  bool IsNonDecreasing() const;
  bool IsUpperSemicontinuous() const;

  std::string ToString() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  StepFunction() = default;
  void Canonicalize();

  std::vector<Rational> knots_;
  std::vector<Rational> knot_values_;
  std::vector<Rational> gap_values_;
};

// outer(inner(x)) for every x in [0,1]; inner must map into [0,1].
StepFunction Compose(const StepFunction& outer, const StepFunction& inner);

// Concave piecewise-linear function on [0,1] given by its vertices.
class ConcavePL {
 public:
  // Vertices must have strictly ascending x spanning [0,1] and strictly
  // decreasing slopes.
  explicit ConcavePL(std::vector<Point> vertices);

  // Throws DomainError outside [0,1].
  Rational operator()(const Rational& x) const;

  const std::vector<Point>& vertices() const { return vertices_; }
  std::vector<Rational> Slopes() const;

  std::string ToString() const;

  friend bool operator==(const ConcavePL&, const ConcavePL&) = default;

 private:
  std::vector<Point> vertices_;
};

// Upper concave hull of a finite point set, collinear points removed.
// Used by Cav; exposed for reuse and testing.
std::vector<Point> UpperHull(std::vector<Point> points);

// Smallest concave majorant. The hull is taken over both endpoints of every
// piece paired with that piece's value, plus each knot's own value.
ConcavePL Cav(const StepFunction& f);

// {s in [0,1] : g(s) = f(s)} for g = Cav(f).
IntervalUnion ContactSet(const StepFunction& f, const ConcavePL& g);

}  // namespace vds

#endif  // VDSOLVE_PIECEWISE_H_

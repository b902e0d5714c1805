#ifndef VDSOLVE_RATIONAL_H_
#define VDSOLVE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vds {

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Parses "p/q", "-p/q" or an integer literal. Whitespace is not allowed.
  static Rational Parse(std::string_view text);

  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  // Lowest-terms numerator/denominator as decimal strings.
  std::string Numerator() const;
  std::string Denominator() const;

  bool IsInteger() const;
  int Sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t Hash() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Midpoint(const Rational& a, const Rational& b);
Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

inline bool InUnitInterval(const Rational& x) {
  return x.Sign() >= 0 && x <= Rational(1);
}

}  // namespace vds

template <>
struct std::hash<vds::Rational> {
  std::size_t operator()(const vds::Rational& r) const { return r.Hash(); }
};

#endif  // VDSOLVE_RATIONAL_H_

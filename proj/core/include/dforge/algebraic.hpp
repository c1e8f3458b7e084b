#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/rational.hpp"
#include "dforge/upoly.hpp"

namespace dforge {

/// A real algebraic number: the unique root of a squarefree primitive integer
/// polynomial inside a closed rational interval.
///
/// Rationals use the linear polynomial q*x - p and the degenerate interval
/// [p/q, p/q]. Irrational numbers produced by this library carry a canonical
/// interval: the unit interval [floor(a), floor(a)+1], halved towards the root
/// until it isolates it. `refine` deliberately leaves that canonical form.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  AlgebraicNumber(const Rational& r);  // NOLINT: rationals are algebraic
  AlgebraicNumber(long v) : AlgebraicNumber(Rational(v)) {}  // NOLINT

  /// Validates that `poly` has exactly one real root in [lo, hi]. The
  /// polynomial is reduced to its squarefree primitive part first.
  static AlgebraicNumber from_isolating(const UPoly& poly, const Rational& lo, const Rational& hi);

  const UPoly& poly() const noexcept { return poly_; }
  const Rational& lower() const noexcept { return lo_; }
  const Rational& upper() const noexcept { return hi_; }
  bool is_rational() const noexcept { return lo_ == hi_; }
  /// Only meaningful when is_rational().
  const Rational& rational_value() const noexcept { return lo_; }

  /// Same number with an isolating interval no wider than `width`.
  AlgebraicNumber refine(const Rational& width) const;

  /// Sign of q at this number, exact.
  int sign_of(const UPoly& q) const;
  int sign() const;

  /// floor(scale * a) for a positive integer scale.
  Integer floor_scaled(const Integer& scale) const;
  Integer floor() const { return floor_scaled(1); }
  AlgebraicNumber frac() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber abs() const;
  AlgebraicNumber add(const Rational& r) const;
  /// c * a for nonzero rational c.
  AlgebraicNumber scale(const Rational& c) const;
  /// (a*x + b) / (c*x + d); the denominator must not vanish at this number and
  /// the map is applied on the branch containing it.
  AlgebraicNumber mobius(const Integer& a, const Integer& b, const Integer& c, const Integer& d) const;

  /// `p/q` for rationals, otherwise `alg poly="..." interval=(lo,hi)`.
  std::string to_string() const;

  /// Structural equality (same polynomial and interval). Use compare() for value equality.
  friend bool same_representation(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  AlgebraicNumber(UPoly poly, Rational lo, Rational hi) noexcept
      : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  friend class RootIsolator;
  friend std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

  // Halves the interval once; may collapse to a rational.
  void bisect();
  // Rebuilds the canonical interval from the current (narrow) one.
  void canonicalize();

  UPoly poly_;
  Rational lo_;
  Rational hi_;
};

/// Exact trichotomy. Equality is decided through a shared root of the gcd of
/// the defining polynomials inside the overlapping intervals.
std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b); }

/// All distinct real roots of p in increasing order, with canonical intervals.
std::vector<AlgebraicNumber> real_roots(const UPoly& p);

/// Accepts a rational (`p/q`, decimal) or `alg poly="..." interval=(lo,hi)`.
AlgebraicNumber parse_algebraic(std::string_view text);

/// Parses a univariate polynomial in the given variable, e.g. "x^2-x-1".
UPoly parse_upoly(std::string_view text, const std::string& var = "x");

}  // namespace dforge

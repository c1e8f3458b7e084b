#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dforge/rational.hpp"

namespace dforge {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector and has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  static UPoly constant(const Integer& c);
  /// q*x - p, the canonical linear polynomial of the rational p/q.
  static UPoly linear_root(const Rational& r);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Integer& coeff(std::size_t i) const;
  const Integer& leading() const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  /// Value at q scaled by den(q)^deg; has the sign of p(q).
  Integer eval_scaled(const Rational& q) const;
  int sign_at(const Rational& q) const;
  Rational eval(const Rational& q) const;
  /// Sign as x -> +inf (dir > 0) or -inf (dir < 0).
  int sign_at_infinity(int dir) const;

  UPoly derivative() const;
  Integer content() const;
  /// Divides out the content and makes the leading coefficient positive.
  UPoly primitive() const;

  /// p(a*x + b) rescaled to a primitive integer polynomial.
  UPoly compose_affine(const Rational& a, const Rational& b) const;
  /// p((a*x + b)/(c*x + d)) * (c*x + d)^deg, primitive.
  UPoly compose_mobius(const Integer& a, const Integer& b, const Integer& c, const Integer& d) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
/// Exact quotient a / b; requires b | a over the rationals. Result is primitive.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
/// Primitive gcd with positive leading coefficient (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Primitive squarefree part.
UPoly squarefree_part(const UPoly& p);

/// Sturm chain of a polynomial; sign-variation counts locate its distinct real
/// roots exactly.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);

  std::size_t variations_at(const Rational& q) const;
  std::size_t variations_at_infinity(int dir) const;
  /// Number of distinct real roots in the closed interval [lo, hi].
  std::size_t count_closed(const Rational& lo, const Rational& hi) const;
  /// Number of distinct real roots in the open interval (lo, hi).
  std::size_t count_open(const Rational& lo, const Rational& hi) const;
  std::size_t count_all() const;

  const std::vector<UPoly>& chain() const noexcept { return chain_; }

 private:
  std::vector<UPoly> chain_;
};

/// Power of two strictly exceeding the absolute value of every real root.
Integer root_bound(const UPoly& p);

}  // namespace dforge

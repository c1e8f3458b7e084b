#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dforge/rational.hpp"
#include "dforge/upoly.hpp"

namespace dforge {

/// Exponent vector; entry i is the exponent of variable x_{i+1}. No trailing zeros.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(std::size_t index, unsigned exponent = 1);

  unsigned exponent(std::size_t index) const noexcept;
  unsigned total_degree() const noexcept;
  bool is_one() const noexcept { return exps_.empty(); }
  std::size_t max_variable() const noexcept { return exps_.size(); }
  Monomial without(std::size_t index) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order with x1 > x2 > ...
  friend bool grlex_greater(const Monomial& a, const Monomial& b) noexcept;

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

/// Variable naming used by rendering. Defaults to positional `x<i>`.
using VariableNamer = std::function<std::string(std::size_t)>;
std::string positional_name(std::size_t index);

/// Sparse multivariate polynomial over the integers in variables x1, x2, ...
/// Terms are kept in descending graded-lex order; the first term is the
/// leading term used for sign normalization.
class Poly {
 public:
  using Terms = std::map<Monomial, Integer, MonomialGreater>;

  Poly() = default;
  Poly(const Integer& c);  // NOLINT: implicit constant
  Poly(long c) : Poly(Integer(c)) {}  // NOLINT
  static Poly var(std::size_t index);
  static Poly term(const Integer& c, const Monomial& m);
  /// sum_i coeffs[i] * x_index^i
  static Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t index);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (or the value when is_constant()).
  Integer constant_term() const;
  const Terms& terms() const noexcept { return terms_; }
  const Integer& leading_coefficient() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  unsigned degree_in(std::size_t index) const noexcept;
  unsigned total_degree() const noexcept;
  bool mentions(std::size_t index) const noexcept { return degree_in(index) > 0; }
  std::set<std::size_t> variables() const;
  /// Coefficients c_0..c_d with p = sum c_i x_index^i.
  std::vector<Poly> coefficients_in(std::size_t index) const;

  Integer content() const;
  /// Content-free with positive leading coefficient; returns the sign that was
  /// divided out (+1 or -1) through `sign` when non-null.
  Poly normalized(int* sign = nullptr) const;

  /// Replaces x_index by `value`.
  Poly substitute(std::size_t index, const Poly& value) const;
  /// Replaces x_index by the rational r and multiplies by den(r)^deg, keeping
  /// the sign of every evaluation.
  Poly substitute_scaled(std::size_t index, const Rational& r) const;
  /// Renames variables through `map(old) -> new`.
  Poly rename(const std::function<std::size_t(std::size_t)>& map) const;
  Rational evaluate(const std::function<Rational(std::size_t)>& value) const;
  /// The polynomial as univariate in x_index; requires no other variables.
  UPoly to_upoly(std::size_t index) const;
  static Poly from_upoly(const UPoly& p, std::size_t index);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(unsigned n) const;
  friend bool operator==(const Poly& a, const Poly& b) = default;
  /// Total order used for canonical sorting of formulas.
  friend int compare(const Poly& a, const Poly& b);

  /// Spaced form for formulas (`x1 + x2 - x3`) or compact (`x^2-2`).
  std::string to_string(const VariableNamer& namer = positional_name, bool compact = false) const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

}  // namespace dforge

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dforge/algebraic.hpp"
#include "dforge/formula.hpp"

namespace dforge {

/// Negation normal form with normalized atoms, constant folding, sorted and
/// deduplicated junctions, and sign conditions on a shared polynomial merged.
Formula simplify(const Formula& f);

/// Quantifier-free equivalent of `exists x . f` (or `forall x . f`) for a
/// quantifier-free f. Throws UnsupportedDegree when x occurs with degree above
/// two in an atom that also mentions other variables.
Formula eliminate_variable(Quantifier q, std::size_t x, const Formula& f);

/// Quantifier-free equivalent over the same free variables, innermost
/// quantifier first.
PolyFormula eliminate(const PolyFormula& f);

/// Truth of a closed formula. Throws InvalidArgument if variables remain free.
bool decide(const PolyFormula& f);

/// Truth of a quantifier-free formula in one variable x at an algebraic point.
bool holds_at(const Formula& f, std::size_t x, const AlgebraicNumber& a);

/// Finite union of points and open intervals; nullopt bounds are infinite.
struct UnaryComponent {
  enum class Kind { Point, Interval };
  Kind kind = Kind::Point;
  AlgebraicNumber point;
  std::optional<AlgebraicNumber> lower;
  std::optional<AlgebraicNumber> upper;

  static UnaryComponent at(AlgebraicNumber a);
  static UnaryComponent between(std::optional<AlgebraicNumber> lo, std::optional<AlgebraicNumber> hi);
  bool contains(const AlgebraicNumber& a) const;
  /// `point poly="x^2-2" in (1,2)`, `point 1/2`, `interval (-1,1)`.
  std::string to_string() const;
};

class UnarySetDescription {
 public:
  UnarySetDescription() = default;
  explicit UnarySetDescription(std::vector<UnaryComponent> components);

  const std::vector<UnaryComponent>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  bool contains(const AlgebraicNumber& a) const;
  /// One component per line, or `empty`.
  std::string to_string() const;

 private:
  std::vector<UnaryComponent> components_;
};

/// The set defined by a formula with exactly one free variable.
UnarySetDescription describe_unary(const PolyFormula& f);

std::optional<AlgebraicNumber> extract_singleton(const UnarySetDescription& d);

/// Rational strictly between a < b.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace dforge

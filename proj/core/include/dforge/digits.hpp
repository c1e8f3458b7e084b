#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dforge/algebraic.hpp"

namespace dforge {

/// n-th decimal digit after the point, n >= 1, of x in (0,1):
/// floor(10 * frac(10^(n-1) * x)). Expansions never end in repeating nines, so
/// 1/2 yields 5,0,0,... Throws OutOfRange unless 0 < x < 1.
int nth_digit(std::size_t n, const AlgebraicNumber& x);

/// Lazily evaluated, memoized base-10 digit function n -> digit(n), n >= 1.
/// Copies share the cache; concurrent readers are safe.
class DigitStream {
 public:
  using Generator = std::function<int(std::size_t)>;

  /// Digits of x in (0,1). Rationals use long division, irrationals interval
  /// refinement. Throws OutOfRange outside (0,1).
  static DigitStream of(const AlgebraicNumber& x);
  /// Arbitrary digit function; the caller guarantees the no-trailing-nines
  /// convention.
  static DigitStream from_generator(Generator g);
  /// Finite prefix followed by zeros.
  static DigitStream from_digits(std::vector<int> digits);

  int digit(std::size_t n) const;
  std::vector<int> prefix(std::size_t count) const;

 private:
  struct State;
  explicit DigitStream(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Digits as ASCII without separators; wraps every `wrap` digits when nonzero.
std::string render_digits(const std::vector<int>& digits, std::size_t wrap = 0);

/// Rational with the given preperiod digits followed by a repeating block
/// (empty block means the expansion terminates).
Rational rational_from_digits(const std::vector<int>& preperiod, const std::vector<int>& period);

/// Decimal expansion of a rational in [0,1): preperiod and minimal period
/// (the period is {0} for terminating expansions).
struct DecimalExpansion {
  std::vector<int> preperiod;
  std::vector<int> period;
};
DecimalExpansion decimal_expansion(const Rational& x);

}  // namespace dforge

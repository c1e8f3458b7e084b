#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/poly.hpp"

namespace dforge {

/// f(N, x_1, ..., x_m) with integer coefficients. In `poly`, variable 1 is the
/// parameter N and variables 2..m+1 are the search variables.
class DiophantineInstance {
 public:
  DiophantineInstance(Poly poly, std::size_t search_vars);
  /// Polynomial text with `N` as the parameter; the other names become search
  /// variables in natural order (x < y < z, x2 < x10).
  static DiophantineInstance parse(std::string_view text);

  const Poly& poly() const noexcept { return poly_; }
  std::size_t search_vars() const noexcept { return m_; }
  /// Search variable names, in order; positional when built from a Poly.
  const std::vector<std::string>& names() const noexcept { return names_; }
  Integer evaluate(const Integer& N, const std::vector<Integer>& xs) const;

 private:
  Poly poly_;
  std::size_t m_;
  std::vector<std::string> names_;
};

struct BoundedSearch {
  bool bit = false;
  /// Least solution in colex order (x_m most significant) when bit is set.
  std::vector<Integer> witness;
};

/// Exhaustive search over 1..M-1 in every search variable.
BoundedSearch bounded_bit(const DiophantineInstance& f, std::uint64_t M, const Integer& N);

/// sum_{N=1}^{M} 2^-N A_{M,N}.
Rational omega_approx(const DiophantineInstance& f, std::uint64_t M);

/// `p/2^k` with p odd, or `0`.
std::string render_dyadic(const Rational& q);

/// Least M <= cap with A_{M,N} = 1.
std::optional<std::uint64_t> stabilization_bound(const DiophantineInstance& f, const Integer& N, std::uint64_t cap);

}  // namespace dforge

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/algebraic.hpp"
#include "dforge/term.hpp"

namespace dforge {

/// Why term n contributed the value it did to the number stream.
struct StreamEntry {
  std::size_t index = 0;
  AlgebraicNumber value;
  /// `singleton`, `arity <a>`, `empty` or `not a singleton (<c> components)`.
  std::string reason;
};

/// x_n for the first `count` terms: the unique element when term n is a unary
/// singleton, otherwise 0. Throws NonSemialgebraic if Nat is a generator;
/// UnsupportedDegree messages carry the term index.
std::vector<StreamEntry> singleton_stream(const std::vector<GeneratorKind>& generators, std::size_t count);

/// The unique solution of a one-variable formula such as `x>0 and x*x=2`.
/// Throws InvalidArgument when the formula does not define a single number.
AlgebraicNumber definable_number(std::string_view formula);

/// 0, 1, 355/113, sqrt 2 and the golden mean, each obtained from a defining
/// formula where it is irrational.
std::vector<AlgebraicNumber> curated_stream();

/// 3 when floor(10^n |x|) ends in 7, else 7.
int diagonal_digit(const AlgebraicNumber& x, std::size_t n);

struct DiagonalCertificate {
  std::size_t n = 0;
  AlgebraicNumber x;
  int digit = 0;
  int alpha = 0;
  /// `n=<n> x_n=<value> digit(x_n)=<d> alpha=<3|7>`
  std::string to_string() const;
};

/// The first N digits of sum alpha_n 10^-n against the stream, with one
/// certificate per position. Throws InvalidArgument if the stream is shorter.
std::vector<DiagonalCertificate> diagonal_number(const std::vector<AlgebraicNumber>& stream, std::size_t N);
std::vector<int> diagonal_digits(const std::vector<DiagonalCertificate>& certificates);

}  // namespace dforge

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dforge/algebraic.hpp"
#include "dforge/digits.hpp"

namespace dforge {

using FiniteSequence = std::vector<AlgebraicNumber>;

/// h(x) = (1 + x/(1+|x|)) / 2, an increasing bijection from the line onto (0,1).
Rational h_map(const Rational& x);
AlgebraicNumber h_map(const AlgebraicNumber& x);
/// Throws OutOfRange unless 0 < y < 1.
Rational h_inverse(const Rational& y);
AlgebraicNumber h_inverse(const AlgebraicNumber& y);

/// Digit interleaving: digit m(n-1)+k of the result is digit n of entry k.
/// Entries must lie in (0,1); throws OutOfRange otherwise.
Rational interleave(const std::vector<Rational>& entries);
DigitStream interleave(const FiniteSequence& entries);

/// Unique preimage of z under m-fold interleaving, or nullopt when some
/// extracted stream ends in nines or is zero.
std::optional<std::vector<Rational>> deinterleave(const Rational& z, std::size_t m);
/// The first `digits` digits of each of the m streams hidden in z. No validity
/// check is possible from a finite prefix.
std::vector<std::vector<int>> deinterleave_prefix(const DigitStream& z, std::size_t m, std::size_t digits);

/// W([x1..xm]) = interleave(h(x1), ..., h(xm)).
Rational w_encode(const std::vector<Rational>& entries);
DigitStream w_encode(const FiniteSequence& entries);
/// Inverse of w_encode on its image.
std::optional<std::vector<Rational>> w_decode(const Rational& z, std::size_t m);

/// x_k, 1-based. Throws IndexOutOfRange.
template <class T>
const T& evaluate(const std::vector<T>& s, std::size_t k);
template <class T>
std::vector<T> append(const T& x, std::vector<T> s);
/// Drops the last entry. Throws LengthUnderflow below length 2.
template <class T>
std::vector<T> truncate(std::vector<T> s);

/// `[a, b, c]` with exact entries.
std::string render_sequence(const std::vector<Rational>& s);
std::string render_sequence(const FiniteSequence& s);
/// Accepts `[a, b, c]` or `a,b,c` with rational or `alg ...` entries.
FiniteSequence parse_sequence(std::string_view text);

}  // namespace dforge

#include "dforge/error.hpp"

namespace dforge {

template <class T>
const T& evaluate(const std::vector<T>& s, std::size_t k) {
  if (k == 0 || k > s.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(k) + " outside a sequence of length " + std::to_string(s.size()));
  }
  return s[k - 1];
}

template <class T>
std::vector<T> append(const T& x, std::vector<T> s) {
  s.push_back(x);
  return s;
}

template <class T>
std::vector<T> truncate(std::vector<T> s) {
  if (s.size() < 2) throw Error(ErrorCode::LengthUnderflow, "cannot truncate a sequence of length " + std::to_string(s.size()));
  s.pop_back();
  return s;
}

}  // namespace dforge

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dforge {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;

Integer pow10(unsigned long n);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
int sign_of(const Integer& z);
int sign_of(const Rational& q);

/// Decimal integer with optional sign. Throws Error(InvalidArgument).
Integer parse_integer(std::string_view text);
/// Parses `p`, `-p`, `p/q` or a finite decimal such as `0.75`.
/// Throws Error(InvalidArgument) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p/q`, or just `p` when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace dforge

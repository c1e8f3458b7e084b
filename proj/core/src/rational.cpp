#include "dforge/rational.hpp"

#include <cctype>

#include "dforge/error.hpp"

namespace dforge {

Integer pow10(unsigned long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign_of(const Integer& z) { return sgn(z); }
int sign_of(const Rational& q) { return sgn(q); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const Rational q = parse_rational(text);
  if (q.get_den() != 1 || text.find_first_of("./") != std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "malformed integer '" + std::string(text) + "'");
  }
  return q.get_num();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw bad();
    value = Rational(Integer(std::string(whole) + std::string(frac), 10), pow10(frac.size()));
  } else {
    if (!all_digits(s)) throw bad();
    value = Rational(Integer(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace dforge

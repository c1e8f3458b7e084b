#include "dforge/codec.hpp"

#include <algorithm>
#include <cctype>

namespace dforge {
namespace {

void require_open_unit(const Rational& y) {
  if (sgn(y) <= 0 || y >= 1) throw Error(ErrorCode::OutOfRange, "value must lie in (0,1), got " + to_string(y));
}

void require_open_unit(const AlgebraicNumber& y) {
  if (y.sign() <= 0 || y >= AlgebraicNumber(1)) {
    throw Error(ErrorCode::OutOfRange, "value must lie in (0,1), got " + y.to_string());
  }
}

Integer pow10_big(std::size_t e) { return pow10(static_cast<unsigned long>(e)); }

// sum_n digit(n) 10^(-m n) for the expansion of x in [0,1).
Rational spread(const Rational& x, std::size_t m) {
  const DecimalExpansion ex = decimal_expansion(x);
  Rational acc = 0;
  for (std::size_t n = 0; n < ex.preperiod.size(); ++n) acc += Rational(ex.preperiod[n], pow10_big(m * (n + 1)));
  Rational block = 0;
  for (std::size_t i = 0; i < ex.period.size(); ++i) block += Rational(ex.period[i], pow10_big(m * (i + 1)));
  if (sgn(block) != 0) {
    const Integer full = pow10_big(m * ex.period.size());
    acc += block * Rational(full, full - 1) / Rational(pow10_big(m * ex.preperiod.size()));
  }
  acc.canonicalize();
  return acc;
}

}  // namespace

Rational h_map(const Rational& x) {
  Rational r = sgn(x) >= 0 ? Rational(2 * x + 1) / Rational(2 * x + 2) : Rational(1) / Rational(2 - 2 * x);
  r.canonicalize();
  return r;
}

AlgebraicNumber h_map(const AlgebraicNumber& x) {
  if (x.is_rational()) return h_map(x.rational_value());
  return x.sign() >= 0 ? x.mobius(2, 1, 2, 2) : x.mobius(0, 1, -2, 2);
}

Rational h_inverse(const Rational& y) {
  require_open_unit(y);
  Rational r = 2 * y >= 1 ? Rational(2 * y - 1) / Rational(2 - 2 * y) : Rational(2 * y - 1) / Rational(2 * y);
  r.canonicalize();
  return r;
}

AlgebraicNumber h_inverse(const AlgebraicNumber& y) {
  require_open_unit(y);
  if (y.is_rational()) return h_inverse(y.rational_value());
  return y >= AlgebraicNumber(Rational(1, 2)) ? y.mobius(2, -1, -2, 2) : y.mobius(2, -1, 2, 0);
}

Rational interleave(const std::vector<Rational>& entries) {
  if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "cannot interleave an empty sequence");
  const std::size_t m = entries.size();
  Rational z = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    require_open_unit(entries[k - 1]);
    z += spread(entries[k - 1], m) * Rational(pow10_big(m - k));
  }
  z.canonicalize();
  return z;
}

DigitStream interleave(const FiniteSequence& entries) {
  if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "cannot interleave an empty sequence");
  std::vector<DigitStream> streams;
  for (const auto& e : entries) streams.push_back(DigitStream::of(e));
  const std::size_t m = streams.size();
  return DigitStream::from_generator(
      [streams, m](std::size_t n) { return streams[(n - 1) % m].digit((n - 1) / m + 1); });
}

std::optional<std::vector<Rational>> deinterleave(const Rational& z, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  require_open_unit(z);
  const DecimalExpansion ex = decimal_expansion(z);
  const std::size_t S = ex.preperiod.size();
  const std::size_t T = ex.period.size();
  const auto digit = [&](std::size_t p) { return p <= S ? ex.preperiod[p - 1] : ex.period[(p - S - 1) % T]; };
  const std::size_t pre_len = (S + m - 1) / m;
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<int> pre, period;
    for (std::size_t n = 1; n <= pre_len; ++n) pre.push_back(digit(m * (n - 1) + k));
    for (std::size_t n = pre_len + 1; n <= pre_len + T; ++n) period.push_back(digit(m * (n - 1) + k));
    if (std::all_of(period.begin(), period.end(), [](int d) { return d == 9; })) return std::nullopt;
    Rational v = rational_from_digits(pre, period);
    if (sgn(v) == 0) return std::nullopt;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> deinterleave_prefix(const DigitStream& z, std::size_t m, std::size_t digits) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  std::vector<std::vector<int>> out(m);
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t n = 1; n <= digits; ++n) out[k - 1].push_back(z.digit(m * (n - 1) + k));
  }
  return out;
}

Rational w_encode(const std::vector<Rational>& entries) {
  std::vector<Rational> mapped;
  for (const auto& e : entries) mapped.push_back(h_map(e));
  return interleave(mapped);
}

DigitStream w_encode(const FiniteSequence& entries) {
  FiniteSequence mapped;
  for (const auto& e : entries) mapped.push_back(h_map(e));
  return interleave(mapped);
}

std::optional<std::vector<Rational>> w_decode(const Rational& z, std::size_t m) {
  auto parts = deinterleave(z, m);
  if (!parts) return std::nullopt;
  for (auto& p : *parts) p = h_inverse(p);
  return parts;
}

std::string render_sequence(const std::vector<Rational>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i]);
  }
  return out + "]";
}

std::string render_sequence(const FiniteSequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].to_string();
  }
  return out + "]";
}

FiniteSequence parse_sequence(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::InvalidArgument, "unterminated sequence '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  FiniteSequence out;
  // Commas inside `interval=(lo,hi)` do not separate entries.
  std::size_t start = 0;
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0 && !quoted)) {
      auto item = s.substr(start, i - start);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
      if (item.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty entry in sequence '" + std::string(text) + "'");
      }
      out.push_back(parse_algebraic(item));
      start = i + 1;
    } else if (s[i] == '"') {
      quoted = !quoted;
    } else if (s[i] == '(' && !quoted) {
      ++depth;
    } else if (s[i] == ')' && !quoted) {
      --depth;
    }
  }
  return out;
}

}  // namespace dforge

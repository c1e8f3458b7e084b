#include "dforge/poly.hpp"

#include <algorithm>
#include <cassert>

#include "dforge/error.hpp"

namespace dforge {

Monomial Monomial::var(std::size_t index, unsigned exponent) {
  assert(index >= 1);
  Monomial m;
  if (exponent == 0) return m;
  m.exps_.assign(index, 0);
  m.exps_[index - 1] = exponent;
  return m;
}

unsigned Monomial::exponent(std::size_t index) const noexcept {
  return index >= 1 && index <= exps_.size() ? exps_[index - 1] : 0;
}

unsigned Monomial::total_degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::without(std::size_t index) const {
  Monomial m = *this;
  if (index >= 1 && index <= m.exps_.size()) m.exps_[index - 1] = 0;
  m.trim();
  return m;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exps_.assign(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] += a.exps_[i];
  for (std::size_t i = 0; i < b.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned ea = i < a.exps_.size() ? a.exps_[i] : 0;
    const unsigned eb = i < b.exps_.size() ? b.exps_[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string positional_name(std::size_t index) { return "x" + std::to_string(index); }

Poly::Poly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(std::size_t index) { return term(1, Monomial::var(index)); }

Poly Poly::term(const Integer& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, std::size_t index) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial xi = Monomial::var(index, static_cast<unsigned>(i));
    for (const auto& [m, c] : coeffs[i].terms_) out.add_term(m * xi, c);
  }
  return out;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Integer Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Integer(0) : it->second;
}

const Integer& Poly::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

unsigned Poly::degree_in(std::size_t index) const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index));
  return d;
}

unsigned Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::set<std::size_t> Poly::variables() const {
  std::set<std::size_t> vars;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 1; i <= m.max_variable(); ++i) {
      if (m.exponent(i) > 0) vars.insert(i);
    }
  }
  return vars;
}

std::vector<Poly> Poly::coefficients_in(std::size_t index) const {
  std::vector<Poly> out(degree_in(index) + 1);
  for (const auto& [m, c] : terms_) out[m.exponent(index)].add_term(m.without(index), c);
  return out;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Poly Poly::normalized(int* sign) const {
  if (terms_.empty()) {
    if (sign) *sign = 1;
    return {};
  }
  Integer g = content();
  const int s = leading_coefficient() < 0 ? -1 : 1;
  if (s < 0) g = -g;
  if (sign) *sign = s;
  if (g == 1) return *this;
  Poly out;
  for (const auto& [m, c] : terms_) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.terms_.emplace_hint(out.terms_.end(), m, q);
  }
  return out;
}

Poly Poly::substitute(std::size_t index, const Poly& value) const {
  auto coeffs = coefficients_in(index);
  // Horner in the substituted value.
  Poly acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * value + coeffs[i];
  return acc;
}

Poly Poly::substitute_scaled(std::size_t index, const Rational& r) const {
  auto coeffs = coefficients_in(index);
  const std::size_t d = coeffs.size() - 1;
  Poly out;
  Integer num_pow = 1;
  std::vector<Integer> den_pow(d + 1, Integer(1));
  for (std::size_t i = 1; i <= d; ++i) den_pow[i] = den_pow[i - 1] * r.get_den();
  for (std::size_t i = 0; i <= d; ++i) {
    const Integer factor = num_pow * den_pow[d - i];
    if (factor != 0) {
      for (const auto& [m, c] : coeffs[i].terms_) out.add_term(m, c * factor);
    }
    num_pow *= r.get_num();
  }
  return out;
}

Poly Poly::rename(const std::function<std::size_t(std::size_t)>& map) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (std::size_t i = 1; i <= m.max_variable(); ++i) {
      if (unsigned e = m.exponent(i); e > 0) nm = nm * Monomial::var(map(i), e);
    }
    out.add_term(nm, c);
  }
  return out;
}

Rational Poly::evaluate(const std::function<Rational(std::size_t)>& value) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t(c);
    for (std::size_t i = 1; i <= m.max_variable(); ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      const Rational v = value(i);
      for (unsigned k = 0; k < e; ++k) t *= v;
    }
    total += t;
  }
  return total;
}

UPoly Poly::to_upoly(std::size_t index) const {
  std::vector<Integer> coeffs(degree_in(index) + 1);
  for (const auto& [m, c] : terms_) {
    if (!m.without(index).is_one()) {
      throw Error(ErrorCode::InvalidArgument, "polynomial is not univariate in " + positional_name(index));
    }
    coeffs[m.exponent(index)] += c;
  }
  return UPoly(std::move(coeffs));
}

Poly Poly::from_upoly(const UPoly& p, std::size_t index) {
  Poly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term(Monomial::var(index, static_cast<unsigned>(i)), p.coeff(i));
  return out;
}

void Poly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

int compare(const Poly& a, const Poly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return grlex_greater(ia->first, ib->first) ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia == a.terms_.end() && ib == b.terms_.end()) return 0;
  return ia == a.terms_.end() ? -1 : 1;
}

std::string Poly::to_string(const VariableNamer& namer, bool compact) const {
  if (terms_.empty()) return "0";
  const std::string plus = compact ? "+" : " + ";
  const std::string minus = compact ? "-" : " - ";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? minus : plus;
    }
    const Integer mag = abs(c);
    std::string factors;
    for (std::size_t i = 1; i <= m.max_variable(); ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += namer(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace dforge

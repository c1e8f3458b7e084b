#include "dforge/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "dforge/error.hpp"

namespace dforge {

namespace {

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

UPoly::UPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Integer& c) { return UPoly(std::vector<Integer>{c}); }

UPoly UPoly::linear_root(const Rational& r) {
  return UPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& UPoly::coeff(std::size_t i) const {
  static const Integer zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Integer& UPoly::leading() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

Integer UPoly::eval_scaled(const Rational& q) const {
  if (coeffs_.empty()) return 0;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  return acc;
}

int UPoly::sign_at(const Rational& q) const { return sgn(eval_scaled(q)); }

Rational UPoly::eval(const Rational& q) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + Rational(coeffs_[i]);
  return acc;
}

int UPoly::sign_at_infinity(int dir) const {
  if (coeffs_.empty()) return 0;
  int s = sgn(coeffs_.back());
  if (dir < 0 && degree() % 2 == 1) s = -s;
  return s;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

UPoly UPoly::primitive() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return UPoly(std::move(out));
}

UPoly UPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner over rationals, then clear denominators.
  std::vector<Rational> acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k] * a;
      next[k] += acc[k] * b;
    }
    next[0] += Rational(coeffs_[i]);
    acc = std::move(next);
  }
  Integer den = 1;
  for (const auto& c : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(acc.size());
  for (const auto& c : acc) {
    Rational scaled = c * Rational(den);
    out.push_back(scaled.get_num());
  }
  return UPoly(std::move(out)).primitive();
}

UPoly UPoly::compose_mobius(const Integer& a, const Integer& b, const Integer& c,
                            const Integer& d) const {
  if (coeffs_.empty()) return {};
  const std::size_t n = coeffs_.size() - 1;
  const UPoly num(std::vector<Integer>{b, a});
  const UPoly den(std::vector<Integer>{d, c});
  std::vector<UPoly> num_pow{UPoly::constant(1)};
  std::vector<UPoly> den_pow{UPoly::constant(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  UPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    out = out + UPoly::constant(coeffs_[i]) * num_pow[i] * den_pow[n - i];
  }
  return out.primitive();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  std::vector<Integer> out(coeffs_);
  for (auto& c : out) c = -c;
  return UPoly(std::move(out));
}

std::string UPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero polynomial");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = std::max(0, dr - db + 1);
  while (dr >= db && dr >= 0) {
    Integer lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeff(j);
    --steps;
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  // Pad to the full multiplier lc(b)^(deg a - deg b + 1).
  for (; steps > 0; --steps) {
    for (auto& c : r) c *= lb;
  }
  return UPoly(std::move(r));
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (a.degree() < b.degree()) return {};
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  const Rational lb(b.leading());
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational f = r[i] / lb;
    q[i - b.degree()] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i - b.degree() + j] -= f * Rational(b.coeff(j));
  }
  Integer den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : q) out.push_back(Rational(c * Rational(den)).get_num());
  return UPoly(std::move(out)).primitive();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive();
  UPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  UPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.primitive();
  return exact_quotient(p, g);
}

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p.primitive());
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative().primitive());
  while (chain_.back().degree() > 0) {
    const UPoly& a = chain_[chain_.size() - 2];
    const UPoly& b = chain_.back();
    UPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^k * a mod b; the Sturm step needs -(a mod b) up to a positive factor.
    const int k = a.degree() - b.degree() + 1;
    const bool lc_pow_negative = b.leading() < 0 && k % 2 == 1;
    UPoly next = r.primitive();
    // primitive() forced a positive leading coefficient; restore the true sign of -prem.
    const int prem_sign = sgn(r.leading()) * (lc_pow_negative ? -1 : 1);
    if (prem_sign > 0) next = -next;
    chain_.push_back(std::move(next));
  }
}

std::size_t SturmSequence::variations_at(const Rational& q) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at(q));
  return variations(signs);
}

std::size_t SturmSequence::variations_at_infinity(int dir) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at_infinity(dir));
  return variations(signs);
}

std::size_t SturmSequence::count_closed(const Rational& lo, const Rational& hi) const {
  if (chain_.empty() || hi < lo) return 0;
  std::size_t n = variations_at(lo) - variations_at(hi);
  if (chain_.front().sign_at(lo) == 0) ++n;
  return n;
}

std::size_t SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
  if (chain_.empty() || !(lo < hi)) return 0;
  std::size_t n = variations_at(lo) - variations_at(hi);
  if (chain_.front().sign_at(hi) == 0) --n;
  return n;
}

std::size_t SturmSequence::count_all() const {
  if (chain_.empty()) return 0;
  return variations_at_infinity(-1) - variations_at_infinity(1);
}

Integer root_bound(const UPoly& p) {
  // Cauchy: |root| < 1 + max |a_i / a_n|.
  if (p.degree() <= 0) return 1;
  const Integer lead = abs(p.leading());
  Integer max_ratio_ceil = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer c = abs(p.coeff(i));
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    if (q > max_ratio_ceil) max_ratio_ceil = q;
  }
  Integer bound = 1;
  while (bound <= max_ratio_ceil + 1) bound *= 2;
  return bound;
}

}  // namespace dforge

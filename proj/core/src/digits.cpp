#include "dforge/digits.hpp"

#include <mutex>
#include <variant>

#include "dforge/error.hpp"

namespace dforge {

namespace {

void require_unit_interval(const AlgebraicNumber& x) {
  if (x.sign() <= 0 || compare(x, AlgebraicNumber(1)) >= 0) {
    throw Error(ErrorCode::OutOfRange, "digit extraction needs 0 < x < 1, got " + x.to_string());
  }
}

unsigned long valuation(Integer& n, unsigned long p) {
  unsigned long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace

int nth_digit(std::size_t n, const AlgebraicNumber& x) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "digit positions start at 1");
  require_unit_interval(x);
  const Integer f = x.floor_scaled(pow10(n));
  return static_cast<int>(mpz_fdiv_ui(f.get_mpz_t(), 10));
}

struct DigitStream::State {
  struct LongDivision {
    Integer remainder;
    Integer denominator;
  };
  struct Refining {
    AlgebraicNumber value;
  };
  std::mutex mutex;
  std::vector<int> memo;
  std::variant<LongDivision, Refining, Generator, std::vector<int>> source;

  int next(std::size_t n) {
    if (auto* ld = std::get_if<LongDivision>(&source)) {
      ld->remainder *= 10;
      Integer d;
      mpz_fdiv_qr(d.get_mpz_t(), ld->remainder.get_mpz_t(), ld->remainder.get_mpz_t(),
                  ld->denominator.get_mpz_t());
      return static_cast<int>(d.get_si());
    }
    if (auto* rf = std::get_if<Refining>(&source)) {
      const Integer scale = pow10(n);
      rf->value = rf->value.refine(Rational(1, scale * 10));
      const Integer f = rf->value.floor_scaled(scale);
      return static_cast<int>(mpz_fdiv_ui(f.get_mpz_t(), 10));
    }
    if (auto* g = std::get_if<Generator>(&source)) return (*g)(n);
    const auto& fixed = std::get<std::vector<int>>(source);
    return n <= fixed.size() ? fixed[n - 1] : 0;
  }
};

DigitStream DigitStream::of(const AlgebraicNumber& x) {
  require_unit_interval(x);
  auto state = std::make_shared<State>();
  if (x.is_rational()) {
    state->source = State::LongDivision{x.rational_value().get_num(), x.rational_value().get_den()};
  } else {
    state->source = State::Refining{x};
  }
  return DigitStream(std::move(state));
}

DigitStream DigitStream::from_generator(Generator g) {
  auto state = std::make_shared<State>();
  state->source = std::move(g);
  return DigitStream(std::move(state));
}

DigitStream DigitStream::from_digits(std::vector<int> digits) {
  auto state = std::make_shared<State>();
  state->source = std::move(digits);
  return DigitStream(std::move(state));
}

int DigitStream::digit(std::size_t n) const {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "digit positions start at 1");
  std::lock_guard lock(state_->mutex);
  auto& memo = state_->memo;
  while (memo.size() < n) memo.push_back(state_->next(memo.size() + 1));
  return memo[n - 1];
}

std::vector<int> DigitStream::prefix(std::size_t count) const {
  std::vector<int> out;
  out.reserve(count);
  if (count > 0) digit(count);
  std::lock_guard lock(state_->mutex);
  out.assign(state_->memo.begin(), state_->memo.begin() + static_cast<std::ptrdiff_t>(count));
  return out;
}

std::string render_digits(const std::vector<int>& digits, std::size_t wrap) {
  std::string out;
  out.reserve(digits.size() + (wrap ? digits.size() / wrap : 0));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (wrap && i > 0 && i % wrap == 0) out += '\n';
    out += static_cast<char>('0' + digits[i]);
  }
  return out;
}

Rational rational_from_digits(const std::vector<int>& preperiod, const std::vector<int>& period) {
  Integer pre = 0;
  for (int d : preperiod) pre = pre * 10 + d;
  const Integer shift = pow10(preperiod.size());
  if (period.empty()) {
    Rational r(pre, shift);
    r.canonicalize();
    return r;
  }
  Integer rep = 0;
  for (int d : period) rep = rep * 10 + d;
  const Integer block = pow10(period.size()) - 1;
  // x = (pre + rep/(10^t - 1)) / 10^s
  Rational r(pre * block + rep, shift * block);
  r.canonicalize();
  return r;
}

DecimalExpansion decimal_expansion(const Rational& x) {
  if (x < 0 || x >= 1) throw Error(ErrorCode::OutOfRange, "decimal expansion needs 0 <= x < 1");
  Integer rest = x.get_den();
  const unsigned long s = std::max(valuation(rest, 2), valuation(rest, 5));
  DecimalExpansion out;
  Integer r = x.get_num();
  const Integer& q = x.get_den();
  auto step = [&] {
    r *= 10;
    Integer d;
    mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
    return static_cast<int>(d.get_si());
  };
  for (unsigned long i = 0; i < s; ++i) out.preperiod.push_back(step());
  const Integer start = r;
  do {
    out.period.push_back(step());
  } while (r != start);
  return out;
}

}  // namespace dforge

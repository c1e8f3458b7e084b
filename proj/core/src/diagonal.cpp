#include "dforge/diagonal.hpp"

#include "dforge/error.hpp"
#include "dforge/enumerator.hpp"
#include "dforge/formula.hpp"
#include "dforge/qe.hpp"

namespace dforge {

std::vector<StreamEntry> singleton_stream(const std::vector<GeneratorKind>& generators, std::size_t count) {
  for (auto g : generators) {
    if (g == GeneratorKind::Nat) {
      throw Error(ErrorCode::NonSemialgebraic, "the number stream is only computable without nat");
    }
  }
  const auto terms = enumerate(generators, count);
  std::vector<StreamEntry> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    StreamEntry e{i + 1, AlgebraicNumber(0L), {}};
    if (terms[i].arity() != 1) {
      e.reason = "arity " + std::to_string(terms[i].arity());
      out.push_back(std::move(e));
      continue;
    }
    UnarySetDescription d;
    try {
      d = describe_unary(to_poly_formula(terms[i]));
    } catch (const UnsupportedDegree& err) {
      throw UnsupportedDegree(err.variable(), err.degree(), "term " + std::to_string(i + 1));
    }
    if (auto s = extract_singleton(d)) {
      e.value = *s;
      e.reason = "singleton";
    } else if (d.empty()) {
      e.reason = "empty";
    } else {
      e.reason = "not a singleton (" + std::to_string(d.components().size()) + " components)";
    }
    out.push_back(std::move(e));
  }
  return out;
}

AlgebraicNumber definable_number(std::string_view formula) {
  const ParsedFormula parsed = parse_formula(formula);
  const auto d = describe_unary(parsed.formula);
  auto s = extract_singleton(d);
  if (!s) throw Error(ErrorCode::InvalidArgument, "'" + std::string(formula) + "' does not define a single number");
  return *s;
}

std::vector<AlgebraicNumber> curated_stream() {
  return {AlgebraicNumber(0L), AlgebraicNumber(1L), AlgebraicNumber(Rational(355, 113)),
          definable_number("x > 0 and x*x = 2"), definable_number("x > 0 and x*x = x + 1")};
}

namespace {

int digit_of_abs(const AlgebraicNumber& x, std::size_t n) {
  const Integer f = x.abs().floor_scaled(pow10(n));
  return static_cast<int>(mpz_fdiv_ui(f.get_mpz_t(), 10));
}

}  // namespace

int diagonal_digit(const AlgebraicNumber& x, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "digit positions start at 1");
  return digit_of_abs(x, n) == 7 ? 3 : 7;
}

std::string DiagonalCertificate::to_string() const {
  return "n=" + std::to_string(n) + " x_n=" + x.to_string() + " digit(x_n)=" + std::to_string(digit) +
         " alpha=" + std::to_string(alpha);
}

std::vector<DiagonalCertificate> diagonal_number(const std::vector<AlgebraicNumber>& stream, std::size_t N) {
  if (stream.size() < N) {
    throw Error(ErrorCode::InvalidArgument,
                "stream has " + std::to_string(stream.size()) + " values, need " + std::to_string(N));
  }
  std::vector<DiagonalCertificate> out;
  for (std::size_t n = 1; n <= N; ++n) {
    const int d = digit_of_abs(stream[n - 1], n);
    out.push_back({n, stream[n - 1], d, d == 7 ? 3 : 7});
  }
  return out;
}

std::vector<int> diagonal_digits(const std::vector<DiagonalCertificate>& certificates) {
  std::vector<int> out;
  for (const auto& c : certificates) out.push_back(c.alpha);
  return out;
}

}  // namespace dforge

#include "dforge/chaitin.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "dforge/error.hpp"
#include "dforge/formula.hpp"

namespace dforge {
namespace {

// Natural order: alphabetic prefix, then numeric suffix.
bool natural_less(const std::string& a, const std::string& b) {
  const auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    const std::string digits = s.substr(i);
    return std::make_tuple(s.substr(0, i), digits.size(), digits);
  };
  return split(a) < split(b);
}

// Integer polynomial in the outer search variables, evaluated term by term.
struct CompiledPoly {
  std::vector<std::pair<Integer, std::vector<unsigned>>> terms;

  explicit CompiledPoly(const Poly& p, std::size_t vars) {
    for (const auto& [mono, c] : p.terms()) {
      std::vector<unsigned> e(vars);
      for (std::size_t v = 0; v < vars; ++v) e[v] = mono.exponent(v + 1);
      terms.emplace_back(c, std::move(e));
    }
  }

  void eval(const std::vector<unsigned long>& at, Integer& out, Integer& scratch) const {
    out = 0;
    for (const auto& [c, e] : terms) {
      scratch = c;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), at[v], e[v]);
        scratch *= pw;
      }
      out += scratch;
    }
  }
};

template <class T>
std::optional<std::uint64_t> scan_differences(const std::vector<Integer>& cs, std::uint64_t lo, std::uint64_t hi) {
  const std::size_t d = cs.size() - 1;
  std::vector<Integer> vals(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    Integer t(static_cast<unsigned long>(lo + j));
    Integer acc = 0;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * t + cs[i];
    vals[j] = acc;
  }
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = d; j >= i; --j) vals[j] -= vals[j - 1];
  }
  T diff[8];
  for (std::size_t i = 0; i <= d; ++i) {
    // Values fit: the caller checked the bound.
    Integer v = vals[i];
    const bool neg = sgn(v) < 0;
    if (neg) v = -v;
    T x = 0;
    const std::size_t limbs = mpz_size(v.get_mpz_t());
    if (limbs > 0) x = static_cast<T>(mpz_getlimbn(v.get_mpz_t(), 0));
    if constexpr (sizeof(T) > 8) {
      if (limbs > 1) x |= static_cast<T>(mpz_getlimbn(v.get_mpz_t(), 1)) << 64;
    }
    diff[i] = neg ? -x : x;
  }
  for (std::uint64_t t = lo;; ++t) {
    if (diff[0] == 0) return t;
    if (t == hi) return std::nullopt;
    for (std::size_t i = 0; i < d; ++i) diff[i] += diff[i + 1];
  }
}

// Least t in [lo, hi] with sum cs[i] t^i = 0.
std::optional<std::uint64_t> first_root(std::vector<Integer> cs, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) return std::nullopt;
  while (!cs.empty() && sgn(cs.back()) == 0) cs.pop_back();
  if (cs.empty()) return lo;
  if (cs.size() == 1) return std::nullopt;
  const std::size_t d = cs.size() - 1;
  Integer bound = 0;
  Integer h(static_cast<unsigned long>(hi));
  Integer pw = 1;
  for (const auto& c : cs) {
    bound += abs(c) * pw;
    pw *= h;
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + d + 2;
  if (d < 8 && bits < 63) return scan_differences<std::int64_t>(cs, lo, hi);
  if (d < 8 && bits < 127) return scan_differences<__int128>(cs, lo, hi);
  for (std::uint64_t t = lo;; ++t) {
    Integer x(static_cast<unsigned long>(t));
    Integer acc = 0;
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
    if (sgn(acc) == 0) return t;
    if (t == hi) return std::nullopt;
  }
}

template <std::size_t D>
std::optional<std::uint64_t> scan_native(const std::int64_t* init, std::uint64_t lo, std::uint64_t hi) {
  std::int64_t diff[D + 1];
  for (std::size_t i = 0; i <= D; ++i) diff[i] = init[i];
  for (std::uint64_t t = lo;; ++t) {
    if (diff[0] == 0) return t;
    if (t == hi) return std::nullopt;
    for (std::size_t i = 0; i < D; ++i) diff[i] += diff[i + 1];
  }
}

// f with N fixed, as coefficients in x_1 over the remaining variables. When
// every value met on [1, limit]^m fits in 62 bits the search runs natively.
struct Specialized {
  using SmallTerm = std::pair<std::int64_t, std::vector<unsigned>>;

  std::size_t outer = 0;
  std::vector<CompiledPoly> coeffs;
  bool native = false;
  std::vector<std::vector<SmallTerm>> small;

  Specialized(const DiophantineInstance& f, const Integer& N, unsigned long limit) {
    const Poly g = f.poly().substitute(1, Poly(N)).rename([](std::size_t v) { return v - 1; });
    outer = f.search_vars() - 1;
    for (const auto& c : g.coefficients_in(1)) {
      coeffs.emplace_back(c.rename([](std::size_t v) { return v - 1; }), outer);
    }
    const Integer L(limit);
    Integer total = 0;
    Integer lpow = 1;
    for (const auto& c : coeffs) {
      Integer bi = 0;
      for (const auto& [k, e] : c.terms) {
        Integer pw;
        unsigned deg = 0;
        for (auto x : e) deg += x;
        mpz_pow_ui(pw.get_mpz_t(), L.get_mpz_t(), deg);
        bi += abs(k) * pw;
      }
      total += bi * lpow;
      lpow *= L;
    }
    native = coeffs.size() <= 8 && mpz_sizeinbase(total.get_mpz_t(), 2) + coeffs.size() + 2 < 63;
    if (!native) return;
    for (const auto& c : coeffs) {
      std::vector<SmallTerm> terms;
      for (const auto& [k, e] : c.terms) terms.emplace_back(k.get_si(), e);
      small.push_back(std::move(terms));
    }
  }

  std::vector<Integer> at(const std::vector<unsigned long>& tuple) const {
    std::vector<Integer> out(coeffs.size());
    Integer scratch;
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i].eval(tuple, out[i], scratch);
    return out;
  }

  // Least t in [lo, hi] that is a root for this outer tuple.
  std::optional<std::uint64_t> root(const std::vector<unsigned long>& tuple, std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi) return std::nullopt;
    if (!native) return first_root(at(tuple), lo, hi);
    std::int64_t cs[8];
    std::size_t n = 0;
    for (const auto& terms : small) {
      std::int64_t v = 0;
      for (const auto& [k, e] : terms) {
        std::int64_t t = k;
        for (std::size_t i = 0; i < e.size(); ++i) {
          for (unsigned j = 0; j < e[i]; ++j) t *= static_cast<std::int64_t>(tuple[i]);
        }
        v += t;
      }
      cs[n++] = v;
    }
    while (n > 0 && cs[n - 1] == 0) --n;
    if (n == 0) return lo;
    if (n == 1) return std::nullopt;
    const std::size_t d = n - 1;
    std::int64_t diff[8];
    for (std::size_t j = 0; j <= d; ++j) {
      const auto t = static_cast<std::int64_t>(lo + j);
      std::int64_t acc = 0;
      for (std::size_t i = n; i-- > 0;) acc = acc * t + cs[i];
      diff[j] = acc;
    }
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = d; j >= i; --j) diff[j] -= diff[j - 1];
    }
    switch (d) {
      case 1: return scan_native<1>(diff, lo, hi);
      case 2: return scan_native<2>(diff, lo, hi);
      case 3: return scan_native<3>(diff, lo, hi);
      case 4: return scan_native<4>(diff, lo, hi);
      case 5: return scan_native<5>(diff, lo, hi);
      case 6: return scan_native<6>(diff, lo, hi);
      default: return scan_native<7>(diff, lo, hi);
    }
  }
};

// Odometer over [1, limit]^n with the first entry fastest.
bool next_tuple(std::vector<unsigned long>& t, unsigned long limit) {
  for (auto& v : t) {
    if (v < limit) {
      ++v;
      return true;
    }
    v = 1;
  }
  return false;
}

}  // namespace

DiophantineInstance::DiophantineInstance(Poly poly, std::size_t search_vars)
    : poly_(std::move(poly)), m_(search_vars) {
  if (m_ == 0) throw Error(ErrorCode::InvalidArgument, "at least one search variable is required");
  for (auto v : poly_.variables()) {
    if (v > m_ + 1) throw Error(ErrorCode::InvalidArgument, "polynomial mentions more than " + std::to_string(m_) + " search variables");
  }
  for (std::size_t i = 1; i <= m_; ++i) names_.push_back(positional_name(i));
}

DiophantineInstance DiophantineInstance::parse(std::string_view text) {
  std::vector<std::string> names{"N"};
  const Poly p = parse_poly(text, names);
  std::vector<std::string> search(names.begin() + 1, names.end());
  if (search.empty()) throw Error(ErrorCode::InvalidArgument, "the polynomial has no search variables");
  std::sort(search.begin(), search.end(), natural_less);
  std::map<std::size_t, std::size_t> index;
  index[1] = 1;
  for (std::size_t i = 1; i < names.size(); ++i) {
    index[i + 1] = static_cast<std::size_t>(std::find(search.begin(), search.end(), names[i]) - search.begin()) + 2;
  }
  DiophantineInstance out(p.rename([&](std::size_t v) { return index.at(v); }), search.size());
  out.names_ = std::move(search);
  return out;
}

Integer DiophantineInstance::evaluate(const Integer& N, const std::vector<Integer>& xs) const {
  if (xs.size() != m_) throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m_) + " values");
  const Rational v = poly_.evaluate([&](std::size_t i) { return Rational(i == 1 ? N : xs[i - 2]); });
  return v.get_num();
}

BoundedSearch bounded_bit(const DiophantineInstance& f, std::uint64_t M, const Integer& N) {
  if (M <= 1) return {};
  const unsigned long top = M - 1;
  const Specialized s(f, N, top);
  std::vector<unsigned long> tuple(s.outer, 1);
  do {
    if (auto x1 = s.root(tuple, 1, top)) {
      BoundedSearch out{true, {Integer(static_cast<unsigned long>(*x1))}};
      for (auto v : tuple) out.witness.emplace_back(v);
      return out;
    }
  } while (next_tuple(tuple, top));
  return {};
}

Rational omega_approx(const DiophantineInstance& f, std::uint64_t M) {
  Rational w = 0;
  for (std::uint64_t N = 1; N <= M; ++N) {
    if (bounded_bit(f, M, Integer(static_cast<unsigned long>(N))).bit) {
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 2, N);
      w += Rational(1, den);
    }
  }
  w.canonicalize();
  return w;
}

std::string render_dyadic(const Rational& q) {
  if (sgn(q) == 0) return "0";
  const Integer& den = q.get_den();
  const auto k = mpz_scan1(den.get_mpz_t(), 0);
  if (mpz_sizeinbase(den.get_mpz_t(), 2) != k + 1) {
    throw Error(ErrorCode::InvalidArgument, to_string(q) + " is not dyadic");
  }
  return to_string(Integer(q.get_num())) + "/2^" + std::to_string(k);
}

std::optional<std::uint64_t> stabilization_bound(const DiophantineInstance& f, const Integer& N, std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "cap must be at least 1");
  if (cap == 1) return std::nullopt;
  const unsigned long top = cap - 1;
  const Specialized s(f, N, top);
  // A_{M,N} first becomes 1 at M = 1 + the least largest coordinate over all
  // solutions; per outer tuple only the smallest inner root can attain it.
  unsigned long best = cap;
  std::vector<unsigned long> tuple(s.outer, 1);
  do {
    const unsigned long outer_max = tuple.empty() ? 1 : *std::max_element(tuple.begin(), tuple.end());
    if (outer_max >= best) continue;
    if (auto x1 = s.root(tuple, 1, best - 1)) best = std::max<unsigned long>(outer_max, *x1);
  } while (next_tuple(tuple, top));
  if (best < cap) return best + 1;
  return std::nullopt;
}

}  // namespace dforge

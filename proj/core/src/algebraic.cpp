#include "dforge/algebraic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

#include "dforge/error.hpp"

namespace dforge {

namespace {

const Integer kRationalRootCoeffLimit("1000000000000");
constexpr std::size_t kRationalRootCandidateLimit = 20000;

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Strips rational roots reachable by the rational root theorem when the
// extreme coefficients are small; appends them to `roots`.
void extract_rational_roots(UPoly& q, std::vector<AlgebraicNumber>& roots) {
  if (q.degree() < 1) return;
  if (abs(q.coeff(0)) > kRationalRootCoeffLimit || abs(q.leading()) > kRationalRootCoeffLimit) return;
  const auto nums = positive_divisors(q.coeff(0));
  const auto dens = positive_divisors(q.leading());
  if (nums.size() * dens.size() > kRationalRootCandidateLimit) return;
  std::vector<Rational> found;
  for (const auto& p : nums) {
    for (const auto& d : dens) {
      for (int s : {1, -1}) {
        Rational r(p * s, d);
        r.canonicalize();
        if (r.get_den() != d) continue;  // visited with the reduced denominator
        if (q.sign_at(r) == 0) found.push_back(r);
      }
    }
  }
  for (const auto& r : found) {
    roots.emplace_back(r);
    q = exact_quotient(q, UPoly::linear_root(r));
  }
}

std::string interval_text(const Rational& lo, const Rational& hi) {
  return "(" + to_string(lo) + "," + to_string(hi) + ")";
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& r) : poly_(UPoly::linear_root(r)), lo_(r), hi_(r) {}

AlgebraicNumber AlgebraicNumber::from_isolating(const UPoly& poly, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "isolating interval has lower > upper");
  UPoly q = squarefree_part(poly);
  if (q.degree() < 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial has no roots");
  const std::size_t n = SturmSequence(q).count_closed(lo, hi);
  if (n != 1) {
    throw Error(ErrorCode::InvalidArgument, "polynomial " + q.to_string() + " has " + std::to_string(n) +
                                                " roots in [" + dforge::to_string(lo) + "," + dforge::to_string(hi) + "]");
  }
  if (q.sign_at(lo) == 0) return AlgebraicNumber(lo);
  if (q.sign_at(hi) == 0) return AlgebraicNumber(hi);
  if (q.degree() == 1) return AlgebraicNumber(Rational(-q.coeff(0), q.coeff(1)));
  AlgebraicNumber a(std::move(q), lo, hi);
  a.canonicalize();
  return a;
}

void AlgebraicNumber::bisect() {
  if (is_rational()) return;
  Rational mid = (lo_ + hi_) / 2;
  const int s = poly_.sign_at(mid);
  if (s == 0) {
    *this = AlgebraicNumber(mid);
    return;
  }
  if (poly_.sign_at(lo_) * s < 0) {
    hi_ = std::move(mid);
  } else {
    lo_ = std::move(mid);
  }
}

void AlgebraicNumber::canonicalize() {
  if (is_rational()) return;
  if (poly_.degree() == 1) {
    *this = AlgebraicNumber(Rational(-poly_.coeff(0), poly_.coeff(1)));
    return;
  }
  const Integer f = floor();
  if (poly_.sign_at(Rational(f)) == 0) {
    *this = AlgebraicNumber(Rational(f));
    return;
  }
  Rational lo(f);
  Rational hi(f + 1);
  const SturmSequence sturm(poly_);
  AlgebraicNumber probe = *this;
  while (sturm.count_closed(lo, hi) != 1) {
    const Rational mid = (lo + hi) / 2;
    while (!probe.is_rational() && !(probe.hi_ < mid) && !(mid < probe.lo_)) probe.bisect();
    if (probe.is_rational()) {
      *this = probe;
      return;
    }
    if (probe.hi_ < mid) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
}

AlgebraicNumber AlgebraicNumber::refine(const Rational& width) const {
  if (width <= 0) throw Error(ErrorCode::InvalidArgument, "refinement width must be positive");
  AlgebraicNumber a = *this;
  while (!a.is_rational() && a.hi_ - a.lo_ > width) a.bisect();
  return a;
}

int AlgebraicNumber::sign_of(const UPoly& q) const {
  if (q.is_zero()) return 0;
  if (is_rational()) return q.sign_at(lo_);
  const UPoly g = gcd(q, poly_);
  if (g.degree() >= 1 && SturmSequence(g).count_closed(lo_, hi_) > 0) return 0;
  const SturmSequence sturm(squarefree_part(q));
  AlgebraicNumber a = *this;
  while (!a.is_rational() && sturm.count_closed(a.lo_, a.hi_) > 0) a.bisect();
  return q.sign_at(a.lo_);
}

int AlgebraicNumber::sign() const { return sign_of(UPoly(std::vector<Integer>{0, 1})); }

Integer AlgebraicNumber::floor_scaled(const Integer& scale) const {
  assert(scale > 0);
  if (is_rational()) return floor_of(lo_ * Rational(scale));
  AlgebraicNumber a = *this;
  const Rational s(scale);
  for (;;) {
    if (a.is_rational()) return floor_of(a.lo_ * s);
    const Integer below = floor_of(a.lo_ * s);
    const Integer above = floor_of(a.hi_ * s);
    if (below == above) return below;
    // The grid point just above lo may be the number itself.
    const Rational boundary(below + 1, scale);
    if (a.poly_.sign_at(boundary) == 0) return below + 1;
    a.bisect();
  }
}

AlgebraicNumber AlgebraicNumber::frac() const { return add(Rational(-floor())); }

AlgebraicNumber AlgebraicNumber::operator-() const {
  if (is_rational()) return AlgebraicNumber(Rational(-lo_));
  AlgebraicNumber a(poly_.compose_affine(Rational(-1), Rational(0)), -hi_, -lo_);
  a.canonicalize();
  return a;
}

AlgebraicNumber AlgebraicNumber::abs() const { return sign() < 0 ? -*this : *this; }

AlgebraicNumber AlgebraicNumber::add(const Rational& r) const {
  if (is_rational()) return AlgebraicNumber(Rational(lo_ + r));
  AlgebraicNumber a(poly_.compose_affine(Rational(1), Rational(-r)), lo_ + r, hi_ + r);
  a.canonicalize();
  return a;
}

AlgebraicNumber AlgebraicNumber::scale(const Rational& c) const {
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "scale factor must be nonzero");
  if (is_rational()) return AlgebraicNumber(Rational(lo_ * c));
  Rational lo = lo_ * c;
  Rational hi = hi_ * c;
  if (hi < lo) std::swap(lo, hi);
  AlgebraicNumber a(poly_.compose_affine(Rational(1) / c, Rational(0)), lo, hi);
  a.canonicalize();
  return a;
}

AlgebraicNumber AlgebraicNumber::mobius(const Integer& a, const Integer& b, const Integer& c,
                                        const Integer& d) const {
  if (a * d - b * c == 0) throw Error(ErrorCode::InvalidArgument, "degenerate Mobius map");
  const UPoly den(std::vector<Integer>{d, c});
  if (sign_of(den) == 0) throw Error(ErrorCode::OutOfRange, "Mobius map has a pole at this number");
  auto apply = [&](const Rational& x) {
    return Rational((Rational(a) * x + Rational(b)) / (Rational(c) * x + Rational(d)));
  };
  if (is_rational()) return AlgebraicNumber(apply(lo_));
  AlgebraicNumber x = *this;
  if (den.degree() >= 1) {
    const SturmSequence pole(den);
    while (!x.is_rational() && pole.count_closed(x.lo_, x.hi_) > 0) x.bisect();
    if (x.is_rational()) return AlgebraicNumber(apply(x.lo_));
  }
  Rational lo = apply(x.lo_);
  Rational hi = apply(x.hi_);
  if (hi < lo) std::swap(lo, hi);
  AlgebraicNumber y(poly_.compose_mobius(d, -b, -c, a), lo, hi);
  y.canonicalize();
  return y;
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return dforge::to_string(lo_);
  return "alg poly=\"" + poly_.to_string() + "\" interval=" + interval_text(lo_, hi_);
}

bool same_representation(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.poly_ == b.poly_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

std::strong_ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo_, b.lo_) <=> 0;
  if (a.is_rational() != b.is_rational()) {
    const bool flip = a.is_rational();
    const AlgebraicNumber& irr = flip ? b : a;
    const Rational& r = flip ? a.lo_ : b.lo_;
    auto ord = std::strong_ordering::equal;
    if (irr.lo_ <= r && r <= irr.hi_ && irr.poly_.sign_at(r) == 0) {
      ord = std::strong_ordering::equal;
    } else {
      AlgebraicNumber x = irr;
      while (!x.is_rational() && x.lo_ <= r && r <= x.hi_) x.bisect();
      ord = x.is_rational() ? (cmp(x.lo_, r) <=> 0) : (x.hi_ < r ? std::strong_ordering::less
                                                                  : std::strong_ordering::greater);
    }
    if (!flip) return ord;
    return ord == 0 ? ord : (ord < 0 ? std::strong_ordering::greater : std::strong_ordering::less);
  }
  if (a.hi_ < b.lo_) return std::strong_ordering::less;
  if (b.hi_ < a.lo_) return std::strong_ordering::greater;
  const UPoly g = gcd(a.poly_, b.poly_);
  if (g.degree() >= 1) {
    const Rational lo = std::max(a.lo_, b.lo_);
    const Rational hi = std::min(a.hi_, b.hi_);
    if (SturmSequence(g).count_closed(lo, hi) > 0) return std::strong_ordering::equal;
  }
  AlgebraicNumber x = a;
  AlgebraicNumber y = b;
  for (;;) {
    if (x.is_rational() || y.is_rational()) return compare(x, y);
    if (x.hi_ < y.lo_) return std::strong_ordering::less;
    if (y.hi_ < x.lo_) return std::strong_ordering::greater;
    if (x.hi_ - x.lo_ >= y.hi_ - y.lo_) {
      x.bisect();
    } else {
      y.bisect();
    }
  }
}

class RootIsolator {
 public:
  static std::vector<AlgebraicNumber> run(const UPoly& p) {
    std::vector<AlgebraicNumber> roots;
    UPoly q = squarefree_part(p);
    if (q.degree() < 1) return roots;
    if (q.coeff(0) == 0) {
      roots.emplace_back(Rational(0));
      q = exact_quotient(q, UPoly(std::vector<Integer>{0, 1}));
    }
    extract_rational_roots(q, roots);
    for (;;) {
      if (q.degree() < 1) break;
      if (q.degree() == 1) {
        roots.emplace_back(Rational(-q.coeff(0), q.coeff(1)));
        break;
      }
      const SturmSequence sturm(q);
      const Rational bound(root_bound(q));
      struct Pending {
        Rational lo, hi;
        std::size_t count;
      };
      std::vector<Pending> stack{{-bound, bound, sturm.count_open(-bound, bound)}};
      std::vector<std::pair<Rational, Rational>> isolated;
      bool deflated = false;
      while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 0) continue;
        if (cur.count == 1) {
          isolated.emplace_back(std::move(cur.lo), std::move(cur.hi));
          continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        if (q.sign_at(mid) == 0) {
          roots.emplace_back(mid);
          q = exact_quotient(q, UPoly::linear_root(mid));
          deflated = true;
          break;
        }
        const std::size_t left = sturm.count_open(cur.lo, mid);
        stack.push_back({mid, cur.hi, cur.count - left});
        stack.push_back({cur.lo, std::move(mid), left});
      }
      if (deflated) continue;
      for (auto& [lo, hi] : isolated) {
        AlgebraicNumber a(q, lo, hi);
        a.canonicalize();
        roots.push_back(std::move(a));
      }
      break;
    }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return compare(x, y) < 0; });
    return roots;
  }
};

std::vector<AlgebraicNumber> real_roots(const UPoly& p) { return RootIsolator::run(p); }

AlgebraicNumber parse_algebraic(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  if (trimmed.substr(0, 3) != "alg") return AlgebraicNumber(parse_rational(trimmed));
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::InvalidArgument, "malformed algebraic number '" + std::string(text) + "': " + why);
  };
  const auto poly_key = trimmed.find("poly=\"");
  if (poly_key == std::string_view::npos) throw fail("missing poly=\"...\"");
  const auto poly_end = trimmed.find('"', poly_key + 6);
  if (poly_end == std::string_view::npos) throw fail("unterminated poly");
  const auto poly_text = trimmed.substr(poly_key + 6, poly_end - poly_key - 6);
  const auto iv_key = trimmed.find("interval=", poly_end);
  if (iv_key == std::string_view::npos) throw fail("missing interval=");
  const auto open = trimmed.find_first_of("([", iv_key);
  const auto comma = trimmed.find(',', open);
  const auto close = trimmed.find_first_of(")]", comma);
  if (open == std::string_view::npos || comma == std::string_view::npos || close == std::string_view::npos) {
    throw fail("interval must look like (lo,hi)");
  }
  const Rational lo = parse_rational(trimmed.substr(open + 1, comma - open - 1));
  const Rational hi = parse_rational(trimmed.substr(comma + 1, close - comma - 1));
  return AlgebraicNumber::from_isolating(parse_upoly(poly_text), lo, hi);
}

}  // namespace dforge

#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

std::vector<int> long_division_digits(const Rational& x, std::size_t count) {
  Integer r = x.get_num();
  const Integer q = x.get_den();
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i) {
    r *= 10;
    const Integer d = r / q;
    r -= d * q;
    out.push_back(static_cast<int>(d.get_si()));
  }
  return out;
}

namespace {

int sign_at(const std::vector<Integer>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Rational(coeffs[i]);
  return sgn(acc);
}

}  // namespace

std::pair<Rational, Rational> bisect_root(const std::vector<Integer>& coeffs, Rational lo, Rational hi,
                                          const Rational& width) {
  const int slo = sign_at(coeffs, lo);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    const int s = sign_at(coeffs, mid);
    if (s == 0) return {mid, mid};
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

std::vector<int> bisection_digits(const std::vector<Integer>& coeffs, Rational lo, Rational hi, std::size_t count) {
  std::vector<int> out;
  Integer scale = 1;
  for (std::size_t n = 1; n <= count; ++n) {
    scale *= 10;
    // Shrink until lo and hi agree on floor(10^n x).
    for (;;) {
      Integer a, b;
      const Rational sl = lo * Rational(scale);
      const Rational sh = hi * Rational(scale);
      mpz_fdiv_q(a.get_mpz_t(), sl.get_num_mpz_t(), sl.get_den_mpz_t());
      mpz_fdiv_q(b.get_mpz_t(), sh.get_num_mpz_t(), sh.get_den_mpz_t());
      if (a == b) {
        out.push_back(static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), 10)));
        break;
      }
      auto [l, h] = bisect_root(coeffs, lo, hi, (hi - lo) / 2);
      lo = l;
      hi = h;
    }
  }
  return out;
}

std::uint64_t block_size(const std::vector<unsigned>& arities) {
  std::uint64_t c = 0, u = 0, p = 0, l = 0, j = 0;
  for (std::size_t i = 0; i < arities.size(); ++i) {
    ++c;
    for (std::size_t k = i + 1; k < arities.size(); ++k) u += arities[i] == arities[k];
    p += arities[i] - 1;
    ++l;
    j += arities[i] >= 2;
  }
  return c + u + p + l + j;
}

std::vector<std::uint64_t> recount_boundaries(const std::vector<unsigned>& generator_arities, std::size_t blocks) {
  std::vector<unsigned> all = generator_arities;
  std::vector<std::uint64_t> out{all.size()};
  while (out.size() < blocks) {
    std::vector<unsigned> block;
    for (unsigned a : all) block.push_back(a);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (all[i] == all[j]) block.push_back(all[i]);
      }
    }
    for (unsigned a : all) {
      for (unsigned p = 1; p < a; ++p) block.push_back(a);
    }
    for (unsigned a : all) block.push_back(a + 1);
    for (unsigned a : all) {
      if (a >= 2) block.push_back(a - 1);
    }
    all.insert(all.end(), block.begin(), block.end());
    out.push_back(all.size());
  }
  return out;
}

// ---- Fourier-Motzkin ----

namespace {

// Only Lt, Le, Eq survive in a conjunct; each side is c . (1, x1..xn).
using Conj = std::vector<LinAtom>;
using Dnf = std::vector<Conj>;

Rel negate(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Gt: return Rel::Le;
    case Rel::Ge: return Rel::Lt;
  }
  return r;
}

std::vector<Rational> scaled(const std::vector<Rational>& c, const Rational& k) {
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * k;
  return out;
}

std::vector<Rational> plus(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Atom as a disjunction of conjunct-ready atoms.
std::vector<LinAtom> basic(const LinAtom& a) {
  switch (a.rel) {
    case Rel::Lt:
    case Rel::Le:
    case Rel::Eq: return {a};
    case Rel::Gt: return {{scaled(a.c, -1), Rel::Lt}};
    case Rel::Ge: return {{scaled(a.c, -1), Rel::Le}};
    case Rel::Ne: return {{a.c, Rel::Lt}, {scaled(a.c, -1), Rel::Lt}};
  }
  return {};
}

bool constant(const LinAtom& a) {
  return std::all_of(a.c.begin() + 1, a.c.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool constant_holds(const LinAtom& a) {
  const int s = sgn(a.c[0]);
  switch (a.rel) {
    case Rel::Lt: return s < 0;
    case Rel::Le: return s <= 0;
    case Rel::Eq: return s == 0;
    case Rel::Ne: return s != 0;
    case Rel::Gt: return s > 0;
    case Rel::Ge: return s >= 0;
  }
  return false;
}

// Drops true constants; nullopt when a constant atom is false.
std::optional<Conj> clean(Conj c) {
  Conj out;
  for (auto& a : c) {
    if (constant(a)) {
      if (!constant_holds(a)) return std::nullopt;
      continue;
    }
    out.push_back(std::move(a));
  }
  return out;
}

Dnf dnf_of(const LinFormula& f, bool negated);

Dnf dnf_and(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Conj c = x;
      c.insert(c.end(), y.begin(), y.end());
      if (auto k = clean(std::move(c))) out.push_back(std::move(*k));
    }
  }
  return out;
}

Dnf exists(std::size_t v, const Dnf& d);

Dnf dnf_of(const LinFormula& f, bool negated) {
  using K = LinFormula::Kind;
  switch (f.kind) {
    case K::Atom: {
      LinAtom a = f.atom;
      if (negated) a.rel = negate(a.rel);
      Dnf out;
      for (auto& b : basic(a)) {
        if (auto k = clean({b})) out.push_back(std::move(*k));
      }
      return out;
    }
    case K::Not: return dnf_of(f.kids[0], !negated);
    case K::And:
    case K::Or: {
      const bool conj = (f.kind == K::And) != negated;
      Dnf acc = conj ? Dnf{Conj{}} : Dnf{};
      for (const auto& k : f.kids) {
        Dnf d = dnf_of(k, negated);
        if (conj) {
          acc = dnf_and(acc, d);
        } else {
          acc.insert(acc.end(), d.begin(), d.end());
        }
      }
      return acc;
    }
    case K::Exists:
    case K::Forall: {
      const bool ex = (f.kind == K::Exists) != negated;
      if (ex) return exists(f.var, dnf_of(f.kids[0], negated));
      // forall v . g == not exists v . not g
      Dnf inner = exists(f.var, dnf_of(f.kids[0], !negated));
      // Negate the DNF: conjunction over disjuncts of negated atoms.
      Dnf acc{Conj{}};
      for (const auto& c : inner) {
        Dnf alt;
        for (const auto& a : c) {
          LinAtom n = a;
          n.rel = negate(a.rel);
          for (auto& b : basic(n)) {
            if (auto k = clean({b})) alt.push_back(std::move(*k));
          }
        }
        acc = dnf_and(acc, alt);
      }
      return acc;
    }
  }
  return {};
}

std::optional<Conj> eliminate_conj(std::size_t v, const Conj& c) {
  // Equation with v: substitute.
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].rel != Rel::Eq || sgn(c[i].c[v]) == 0) continue;
    // v = -(rest)/a
    const Rational a = c[i].c[v];
    Conj out;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      const Rational k = c[j].c[v] / a;
      LinAtom n{plus(c[j].c, scaled(c[i].c, -k)), c[j].rel};
      n.c[v] = 0;
      out.push_back(std::move(n));
    }
    return clean(std::move(out));
  }
  Conj keep, lower, upper;
  for (const auto& a : c) {
    if (sgn(a.c[v]) == 0) {
      keep.push_back(a);
    } else if (a.rel == Rel::Eq) {
      keep.push_back(a);  // unreachable: handled above
    } else if (sgn(a.c[v]) > 0) {
      upper.push_back(a);
    } else {
      lower.push_back(a);
    }
  }
  for (const auto& l : lower) {
    for (const auto& u : upper) {
      // l: -p x + r rel 0 with p>0 gives x > r/p; u: q x + s rel 0 gives x < -s/q
      const Rational p = -l.c[v];
      const Rational q = u.c[v];
      LinAtom n{plus(scaled(l.c, q), scaled(u.c, p)), (l.rel == Rel::Lt || u.rel == Rel::Lt) ? Rel::Lt : Rel::Le};
      n.c[v] = 0;
      keep.push_back(std::move(n));
    }
  }
  return clean(std::move(keep));
}

Dnf exists(std::size_t v, const Dnf& d) {
  Dnf out;
  for (const auto& c : d) {
    if (auto k = eliminate_conj(v, c)) out.push_back(std::move(*k));
  }
  return out;
}

std::string rat_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_num().get_str() + ")/(" + q.get_den().get_str() + ")";
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
  }
  return "?";
}

}  // namespace

bool fm_decide(const LinFormula& f, std::size_t /*nvars*/) {
  const Dnf d = dnf_of(f, false);
  // Closed formula: every surviving conjunct is empty, i.e. true.
  return std::any_of(d.begin(), d.end(), [](const Conj& c) { return c.empty(); });
}

std::string to_text(const LinFormula& f) {
  using K = LinFormula::Kind;
  switch (f.kind) {
    case K::Atom: {
      std::string s;
      for (std::size_t i = 1; i < f.atom.c.size(); ++i) {
        if (sgn(f.atom.c[i]) == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + f.atom.c[i].get_num().get_str() + ")*x" + std::to_string(i);
      }
      if (!s.empty()) s += " + ";
      s += "(" + f.atom.c[0].get_num().get_str() + ")";
      return s + " " + rel_text(f.atom.rel) + " 0";
    }
    case K::Not: return "not (" + to_text(f.kids[0]) + ")";
    case K::And:
    case K::Or: {
      std::string s = "(";
      for (std::size_t i = 0; i < f.kids.size(); ++i) {
        if (i) s += f.kind == K::And ? " and " : " or ";
        s += "(" + to_text(f.kids[i]) + ")";
      }
      return s + ")";
    }
    case K::Exists:
    case K::Forall:
      return std::string(f.kind == K::Exists ? "exists" : "forall") + " x" + std::to_string(f.var) + " . (" +
             to_text(f.kids[0]) + ")";
  }
  (void)rat_text;
  return "";
}

LinFormula random_linear_sentence(std::mt19937_64& rng, std::size_t nvars, std::size_t atoms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> rel(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<LinFormula> leaves;
  for (std::size_t i = 0; i < atoms; ++i) {
    LinFormula a;
    a.atom.c.resize(nvars + 1);
    for (auto& c : a.atom.c) c = coef(rng);
    a.atom.rel = static_cast<Rel>(rel(rng));
    if (coin(rng) && coin(rng)) {
      LinFormula n;
      n.kind = LinFormula::Kind::Not;
      n.kids.push_back(std::move(a));
      leaves.push_back(std::move(n));
    } else {
      leaves.push_back(std::move(a));
    }
  }
  while (leaves.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    const std::size_t i = pick(rng);
    LinFormula a = leaves[i];
    leaves.erase(leaves.begin() + static_cast<long>(i));
    std::uniform_int_distribution<std::size_t> pick2(0, leaves.size() - 1);
    const std::size_t j = pick2(rng);
    LinFormula b = leaves[j];
    LinFormula n;
    n.kind = coin(rng) ? LinFormula::Kind::And : LinFormula::Kind::Or;
    n.kids = {std::move(a), std::move(b)};
    leaves[j] = std::move(n);
  }
  LinFormula f = leaves.front();
  std::vector<std::size_t> order(nvars);
  for (std::size_t i = 0; i < nvars; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  for (auto v : order) {
    LinFormula q;
    q.kind = coin(rng) ? LinFormula::Kind::Exists : LinFormula::Kind::Forall;
    q.var = v;
    q.kids.push_back(std::move(f));
    f = std::move(q);
  }
  return f;
}

}  // namespace oracle

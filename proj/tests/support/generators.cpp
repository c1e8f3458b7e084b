#include "generators.hpp"

#include <algorithm>
#include <set>

#include "dforge/algebraic.hpp"

namespace gen {

using dforge::Formula;
using dforge::GeneratorKind;
using dforge::NodeKind;
using dforge::Poly;
using dforge::RelationTerm;

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rational rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  Rational q(Integer(uniform(rng, -num_bound, num_bound)), Integer(uniform(rng, 1, den_bound)));
  q.canonicalize();
  return q;
}

Rational unit_rational(std::mt19937_64& rng, long den_bound) {
  const long q = uniform(rng, 2, den_bound);
  Rational r(Integer(uniform(rng, 1, q - 1)), Integer(q));
  r.canonicalize();
  return r;
}

namespace {

RelationTerm random_base(std::mt19937_64& rng, const std::vector<GeneratorKind>& gens) {
  return RelationTerm::base(gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))]);
}

// One random operation applied to t; `other` supplies a union partner.
RelationTerm grow(std::mt19937_64& rng, const RelationTerm& t, const RelationTerm& other) {
  for (;;) {
    switch (uniform(rng, 0, 4)) {
      case 0: return RelationTerm::complement(t);
      case 1:
        if (other.arity() == t.arity()) return RelationTerm::unite(t, other);
        break;
      case 2:
        if (t.arity() >= 2) return RelationTerm::swap(t, static_cast<unsigned>(uniform(rng, 1, t.arity() - 1)));
        break;
      case 3:
        if (t.arity() < 5) return RelationTerm::lift(t);
        break;
      case 4:
        if (t.arity() >= 2) return RelationTerm::project(t);
        break;
    }
  }
}

}  // namespace

RelationTerm term(std::mt19937_64& rng, unsigned max_depth, const std::vector<GeneratorKind>& gens) {
  if (max_depth <= 1 || uniform(rng, 0, 4) == 0) return random_base(rng, gens);
  RelationTerm t = term(rng, max_depth - 1, gens);
  RelationTerm other = uniform(rng, 0, 1) ? t : term(rng, max_depth - 1, gens);
  return grow(rng, t, other);
}

RelationTerm small_term(std::mt19937_64& rng, unsigned ops, const std::vector<GeneratorKind>& gens) {
  RelationTerm t = random_base(rng, gens);
  for (unsigned i = 0; i < ops; ++i) {
    // A union consumes one operation; the partner is a bare base relation.
    t = grow(rng, t, random_base(rng, gens));
  }
  return t;
}

Poly poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, long coef, std::size_t terms,
          std::size_t capped_var, unsigned cap_degree) {
  Poly p;
  for (std::size_t k = 0; k < terms; ++k) {
    dforge::Monomial m;
    const unsigned deg = static_cast<unsigned>(uniform(rng, 0, max_degree));
    for (unsigned d = 0; d < deg; ++d) {
      const auto v = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(nvars)));
      dforge::Monomial next = m * dforge::Monomial::var(v);
      if (v == capped_var && next.exponent(v) > cap_degree) continue;
      m = next;
    }
    long c = uniform(rng, -coef, coef);
    if (c == 0) c = 1;
    p += Poly::term(Integer(c), m);
  }
  return p;
}

Formula qf_formula(std::mt19937_64& rng, std::size_t nvars, std::size_t atoms, unsigned max_degree,
                   std::size_t capped_var, unsigned cap_degree) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < atoms; ++i) {
    Poly p = poly(rng, nvars, max_degree, 3, static_cast<std::size_t>(uniform(rng, 1, 3)), capped_var, cap_degree);
    const auto rel = static_cast<dforge::Relation>(uniform(rng, 0, 5));
    Formula a = Formula::atom(p, rel);
    if (uniform(rng, 0, 3) == 0) a = Formula::negation(a);
    parts.push_back(a);
  }
  while (parts.size() > 1) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(parts.size()) - 2));
    std::vector<Formula> pair{parts[i], parts[i + 1]};
    Formula j = uniform(rng, 0, 1) ? Formula::conj(pair) : Formula::disj(pair);
    parts.erase(parts.begin() + static_cast<long>(i) + 1);
    parts[i] = j;
  }
  return parts.front();
}

dforge::SequenceTable table(std::mt19937_64& rng, std::size_t n, long max_entry) {
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
  for (auto& r : rows) {
    for (auto& x : r) x = uniform(rng, 0, max_entry);
  }
  return dforge::SequenceTable(std::move(rows));
}

}  // namespace gen

namespace oracle {

using dforge::AlgebraicNumber;
using dforge::Formula;
using dforge::GeneratorKind;
using dforge::NodeKind;
using dforge::Rational;
using dforge::RelationTerm;

namespace {

void critical_values(const std::vector<Rational>& point, std::set<Rational>& out) {
  std::vector<Rational> c = point;
  c.push_back(0);
  c.push_back(1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out.insert(c[i]);
    for (std::size_t j = 0; j < c.size(); ++j) {
      out.insert(c[i] + c[j]);
      out.insert(c[i] - c[j]);
      out.insert(c[i] * c[j]);
      if (sgn(c[j]) != 0) out.insert(c[i] / c[j]);
    }
  }
}

}  // namespace

bool term_member(const RelationTerm& t, const std::vector<Rational>& p) {
  switch (t.kind()) {
    case NodeKind::Base:
      switch (t.generator()) {
        case GeneratorKind::Add: return p[0] + p[1] == p[2];
        case GeneratorKind::Mul: return p[0] * p[1] == p[2];
        case GeneratorKind::Leq: return p[0] <= p[1];
        case GeneratorKind::Nat: return p[0].get_den() == 1 && sgn(p[0]) > 0;
      }
      return false;
    case NodeKind::Complement: return !term_member(t.child(), p);
    case NodeKind::Union: return term_member(t.left(), p) || term_member(t.right(), p);
    case NodeKind::Swap: {
      std::vector<Rational> q = p;
      std::swap(q[t.position() - 1], q[t.position()]);
      return term_member(t.child(), q);
    }
    case NodeKind::Lift: return term_member(t.child(), std::vector<Rational>(p.begin(), p.end() - 1));
    case NodeKind::Project: {
      std::set<Rational> crit;
      critical_values(p, crit);
      std::vector<Rational> cand(crit.begin(), crit.end());
      std::vector<Rational> all = cand;
      for (std::size_t i = 0; i + 1 < cand.size(); ++i) all.push_back((cand[i] + cand[i + 1]) / 2);
      all.push_back(cand.front() - 1);
      all.push_back(cand.back() + 1);
      std::vector<Rational> q = p;
      q.push_back(0);
      for (const auto& w : all) {
        q.back() = w;
        if (term_member(t.child(), q)) return true;
      }
      return false;
    }
  }
  return false;
}

Formula instantiate(const Formula& f, const std::vector<Rational>& point) {
  return f.map_atoms([&](const dforge::Atom& a) {
    dforge::Poly p = a.poly;
    for (std::size_t i = 0; i < point.size(); ++i) p = p.substitute_scaled(i + 1, point[i]);
    return Formula::atom(p, a.rel);
  });
}

dforge::PolyFormula instantiate(const dforge::PolyFormula& f, const std::vector<Rational>& point) {
  dforge::PolyFormula out = f;
  out.matrix = instantiate(f.matrix, point);
  return out;
}

namespace {

bool holds(const Formula& f, std::size_t x, const AlgebraicNumber& a) {
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom: {
      const auto& atom = f.as_atom();
      const int s = atom.poly.is_constant() ? sgn(atom.poly.constant_term()) : a.sign_of(atom.poly.to_upoly(x));
      using R = dforge::Relation;
      switch (atom.rel) {
        case R::Eq: return s == 0;
        case R::Ne: return s != 0;
        case R::Lt: return s < 0;
        case R::Le: return s <= 0;
        case R::Gt: return s > 0;
        case R::Ge: return s >= 0;
      }
      return false;
    }
    case Formula::Kind::Not: return !holds(f.children()[0], x, a);
    case Formula::Kind::And:
      return std::all_of(f.children().begin(), f.children().end(), [&](const Formula& c) { return holds(c, x, a); });
    case Formula::Kind::Or:
      return std::any_of(f.children().begin(), f.children().end(), [&](const Formula& c) { return holds(c, x, a); });
    default: throw std::logic_error("quantifier in univariate oracle");
  }
}

void collect_polys(const Formula& f, std::vector<dforge::Poly>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    out.push_back(f.as_atom().poly);
    return;
  }
  if (f.kind() == Formula::Kind::True || f.kind() == Formula::Kind::False) return;
  for (const auto& c : f.children()) collect_polys(c, out);
}

}  // namespace

bool univariate_quantified(dforge::Quantifier q, std::size_t x, const Formula& f) {
  std::vector<dforge::Poly> polys;
  collect_polys(f, polys);
  std::vector<AlgebraicNumber> roots;
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    for (auto& r : dforge::real_roots(p.to_upoly(x))) roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<AlgebraicNumber> samples = roots;
  if (roots.empty()) {
    samples.emplace_back(Rational(0));
  } else {
    // Rationals between consecutive roots, below the first and above the last.
    samples.emplace_back(Rational(roots.front().refine(1).lower() - 1));
    samples.emplace_back(Rational(roots.back().refine(1).upper() + 1));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      Rational w = 1;
      for (;;) {
        auto a = roots[i].refine(w);
        auto b = roots[i + 1].refine(w);
        if (a.upper() < b.lower()) {
          samples.emplace_back(Rational((a.upper() + b.lower()) / 2));
          break;
        }
        w /= 2;
      }
    }
  }
  const bool want = q == dforge::Quantifier::Exists;
  for (const auto& s : samples) {
    if (holds(f, x, s) == want) return want;
  }
  return !want;
}

}  // namespace oracle

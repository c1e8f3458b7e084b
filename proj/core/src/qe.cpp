#include "dforge/qe.hpp"

#include <algorithm>
#include <map>

#include "dforge/error.hpp"

namespace dforge {
namespace {

using K = Formula::Kind;

Formula simplify_nnf(const Formula& f);

Formula simplify_junction(const Formula& f) {
  const bool is_and = f.kind() == K::And;
  std::vector<Formula> others;
  // Sign masks per polynomial: intersected under and, united under or.
  std::map<Poly, unsigned, decltype([](const Poly& a, const Poly& b) { return compare(a, b) < 0; })> masks;
  for (const auto& c : f.children()) {
    Formula s = simplify_nnf(c);
    std::vector<Formula> parts;
    if (s.kind() == f.kind()) {
      parts = s.children();
    } else {
      parts.push_back(s);
    }
    for (auto& p : parts) {
      if (p.is_true() || p.is_false()) {
        if (p.is_true() != is_and) return p;
        continue;
      }
      if (p.kind() == K::Atom) {
        const Atom& a = p.as_atom();
        const unsigned m = relation_mask(a.rel);
        auto [it, inserted] = masks.emplace(a.poly, m);
        if (!inserted) it->second = is_and ? (it->second & m) : (it->second | m);
        continue;
      }
      others.push_back(std::move(p));
    }
  }
  std::vector<Formula> out;
  for (const auto& [poly, mask] : masks) {
    if (mask == 0) {
      if (is_and) return Formula::truth(false);
      continue;
    }
    if (mask == 7) {
      if (!is_and) return Formula::truth(true);
      continue;
    }
    out.push_back(Formula::atom(poly, relation_from_mask(mask)));
  }
  if (is_and) {
    // An atom that becomes constant once an equation of the conjunction is
    // solved for one of its variables folds to that constant's truth value.
    std::vector<std::pair<std::size_t, Poly>> solved;
    for (const auto& [poly, mask] : masks) {
      if (mask != 2) continue;
      for (auto v : poly.variables()) {
        auto cs = poly.coefficients_in(v);
        if (cs.size() != 2 || !cs[1].is_constant() || abs(cs[1].constant_term()) != 1) continue;
        solved.emplace_back(v, cs[1].constant_term() > 0 ? -cs[0] : cs[0]);
        break;
      }
    }
    for (auto& a : out) {
      const Atom& at = a.as_atom();
      if (at.rel == Relation::Eq && std::any_of(solved.begin(), solved.end(), [&](const auto& s) {
            return Poly::var(s.first) - s.second == at.poly || s.second - Poly::var(s.first) == at.poly;
          })) {
        continue;
      }
      for (const auto& [v, value] : solved) {
        if (!at.poly.mentions(v)) continue;
        const Poly r = at.poly.substitute(v, value);
        if (r.is_constant()) {
          if (!holds(at.rel, sgn(r.constant_term()))) return Formula::truth(false);
          a = Formula::truth(true);
          break;
        }
      }
    }
  }
  for (auto& o : others) out.push_back(std::move(o));
  std::sort(out.begin(), out.end(), [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return is_and ? Formula::conj(std::move(out)) : Formula::disj(std::move(out));
}

Formula simplify_nnf(const Formula& f) {
  switch (f.kind()) {
    case K::True:
    case K::False: return f;
    case K::Atom: return Formula::normalized_atom(f.as_atom().poly, f.as_atom().rel);
    case K::And:
    case K::Or: return simplify_junction(f);
    case K::Exists:
    case K::Forall: {
      Formula body = simplify_nnf(f.body());
      if (body.is_true() || body.is_false()) return body;
      const auto fv = body.free_variables();
      if (!std::binary_search(fv.begin(), fv.end(), f.variable())) return body;
      return Formula::quantified(f.kind() == K::Exists ? Quantifier::Exists : Quantifier::Forall, f.variable(),
                                 body);
    }
    case K::Not: return simplify_nnf(f.nnf());
  }
  return f;
}

bool mentions(const Formula& f, std::size_t x) {
  if (f.kind() == K::Atom) return f.as_atom().poly.mentions(x);
  return std::any_of(f.children().begin(), f.children().end(), [&](const Formula& c) { return mentions(c, x); });
}

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
  if (f.kind() == K::Atom) {
    if (std::find(out.begin(), out.end(), f.as_atom()) == out.end()) out.push_back(f.as_atom());
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, out);
}

Formula rel_atom(const Poly& p, Relation r) { return Formula::normalized_atom(p, r); }

Poly derivative_in(const Poly& p, std::size_t x) {
  auto cs = p.coefficients_in(x);
  std::vector<Poly> d;
  for (std::size_t i = 1; i < cs.size(); ++i) d.push_back(cs[i] * Poly(static_cast<long>(i)));
  return Poly::from_coefficients(d, x);
}

// Test point (alpha + beta*sqrt(gamma)) / delta, optionally plus an
// infinitesimal, or minus infinity.
struct TestPoint {
  bool minus_inf = false;
  bool eps = false;
  Poly alpha, beta, gamma, delta;
  Formula guard = Formula::truth(true);
};

std::vector<TestPoint> root_points(const Poly& p, std::size_t x, bool eps) {
  auto cs = p.coefficients_in(x);
  std::vector<TestPoint> out;
  if (cs.size() == 2) {
    out.push_back({false, eps, -cs[0], Poly(), Poly(), cs[1], rel_atom(cs[1], Relation::Ne)});
  } else if (cs.size() == 3) {
    const Poly& a = cs[2];
    const Poly& b = cs[1];
    const Poly& c = cs[0];
    const Poly disc = b * b - Poly(4) * a * c;
    const Formula g = simplify(Formula::conj({rel_atom(a, Relation::Ne), rel_atom(disc, Relation::Ge)}));
    if (!g.is_false()) {
      for (long s : {1L, -1L}) out.push_back({false, eps, -b, Poly(s), disc, Poly(2) * a, g});
    }
    const Formula lg = simplify(Formula::conj({rel_atom(a, Relation::Eq), rel_atom(b, Relation::Ne)}));
    if (!lg.is_false()) out.push_back({false, eps, -c, Poly(), Poly(), b, lg});
  }
  return out;
}

// Sign condition A + B*sqrt(gamma) rel 0 with gamma >= 0.
Formula sqrt_sign(const Poly& A, const Poly& B, const Poly& gamma, Relation rel) {
  if (B.is_zero() || gamma.is_zero()) return rel_atom(A, rel);
  const Poly N = A * A - B * B * gamma;
  const auto lt = [&](const Poly& a, const Poly& b) {
    return Formula::disj({Formula::conj({rel_atom(a, Relation::Lt), rel_atom(N, Relation::Gt)}),
                          Formula::conj({rel_atom(b, Relation::Le),
                                         Formula::disj({rel_atom(a, Relation::Lt), rel_atom(N, Relation::Lt)})})});
  };
  const auto le = [&](const Poly& a, const Poly& b) {
    return Formula::disj({Formula::conj({rel_atom(a, Relation::Le), rel_atom(N, Relation::Ge)}),
                          Formula::conj({rel_atom(b, Relation::Le), rel_atom(N, Relation::Le)})});
  };
  const auto eq = [&] { return Formula::conj({rel_atom(A * B, Relation::Le), rel_atom(N, Relation::Eq)}); };
  switch (rel) {
    case Relation::Eq: return eq();
    case Relation::Ne: return Formula::disj({rel_atom(A * B, Relation::Gt), rel_atom(N, Relation::Ne)});
    case Relation::Lt: return lt(A, B);
    case Relation::Le: return le(A, B);
    case Relation::Gt: return lt(-A, -B);
    case Relation::Ge: return le(-A, -B);
  }
  return Formula::truth(false);
}

Formula at_point(const Poly& q, std::size_t x, const TestPoint& t, Relation rel) {
  auto cs = q.coefficients_in(x);
  // q(t) * delta^2 = A + B*sqrt(gamma); delta != 0 under the guard.
  const Poly A_i[3] = {Poly(1), t.alpha, t.alpha * t.alpha + t.beta * t.beta * t.gamma};
  const Poly B_i[3] = {Poly(), t.beta, Poly(2) * t.alpha * t.beta};
  const Poly d_pow[3] = {t.delta * t.delta, t.delta, Poly(1)};
  Poly A, B;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    A += cs[i] * A_i[i] * d_pow[i];
    B += cs[i] * B_i[i] * d_pow[i];
  }
  return sqrt_sign(A, B, t.gamma, rel);
}

Formula identically_zero(const Poly& q, std::size_t x) {
  std::vector<Formula> parts;
  for (const auto& c : q.coefficients_in(x)) parts.push_back(rel_atom(c, Relation::Eq));
  return Formula::conj(std::move(parts));
}

Formula lt_eps(const Poly& q, std::size_t x, const TestPoint& t) {
  if (q.is_zero()) return Formula::truth(false);
  if (!q.mentions(x)) return rel_atom(q, Relation::Lt);
  return Formula::disj({at_point(q, x, t, Relation::Lt),
                        Formula::conj({at_point(q, x, t, Relation::Eq), lt_eps(derivative_in(q, x), x, t)})});
}

Formula at_eps(const Poly& q, std::size_t x, const TestPoint& t, Relation rel) {
  switch (rel) {
    case Relation::Eq: return identically_zero(q, x);
    case Relation::Ne: return Formula::negation(identically_zero(q, x));
    case Relation::Lt: return lt_eps(q, x, t);
    case Relation::Gt: return lt_eps(-q, x, t);
    case Relation::Le: return Formula::disj({lt_eps(q, x, t), identically_zero(q, x)});
    case Relation::Ge: return Formula::disj({lt_eps(-q, x, t), identically_zero(q, x)});
  }
  return Formula::truth(false);
}

Formula lt_minus_inf(const Poly& q, std::size_t x) {
  auto cs = q.coefficients_in(x);
  const std::size_t d = cs.size() - 1;
  if (d == 0) return rel_atom(q, Relation::Lt);
  const Poly lead = d % 2 == 1 ? -cs[d] : cs[d];
  cs.pop_back();
  return Formula::disj({rel_atom(lead, Relation::Lt),
                        Formula::conj({rel_atom(lead, Relation::Eq),
                                       lt_minus_inf(Poly::from_coefficients(cs, x), x)})});
}

Formula at_minus_inf(const Poly& q, std::size_t x, Relation rel) {
  switch (rel) {
    case Relation::Eq: return identically_zero(q, x);
    case Relation::Ne: return Formula::negation(identically_zero(q, x));
    case Relation::Lt: return lt_minus_inf(q, x);
    case Relation::Gt: return lt_minus_inf(-q, x);
    case Relation::Le: return Formula::negation(lt_minus_inf(-q, x));
    case Relation::Ge: return Formula::negation(lt_minus_inf(q, x));
  }
  return Formula::truth(false);
}

Formula substitute(const Formula& f, std::size_t x, const TestPoint& t) {
  return f.map_atoms([&](const Atom& a) {
    if (!a.poly.mentions(x)) return Formula::atom(a.poly, a.rel);
    if (t.minus_inf) return at_minus_inf(a.poly, x, a.rel);
    if (t.eps) return at_eps(a.poly, x, t, a.rel);
    return at_point(a.poly, x, t, a.rel);
  });
}

bool is_strict(Relation r) { return r == Relation::Lt || r == Relation::Gt || r == Relation::Ne; }

Formula exists_univariate(const Formula& f, std::size_t x, const std::vector<Atom>& atoms) {
  std::vector<AlgebraicNumber> roots;
  for (const auto& a : atoms) {
    if (!a.poly.mentions(x)) continue;
    for (auto& r : real_roots(a.poly.to_upoly(x))) roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<AlgebraicNumber> samples;
  if (roots.empty()) {
    samples.emplace_back(0L);
  } else {
    samples.emplace_back(Rational(roots.front().floor() - 1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      samples.push_back(roots[i]);
      if (i + 1 < roots.size()) samples.emplace_back(rational_between(roots[i], roots[i + 1]));
    }
    samples.emplace_back(Rational(roots.back().floor() + 1));
  }
  std::vector<Formula> parts;
  for (const auto& s : samples) {
    parts.push_back(f.map_atoms([&](const Atom& a) {
      if (!a.poly.mentions(x)) return Formula::atom(a.poly, a.rel);
      return Formula::truth(holds(a.rel, s.sign_of(a.poly.to_upoly(x))));
    }));
  }
  return simplify(Formula::disj(std::move(parts)));
}

Formula exists_elim(const Formula& f, std::size_t x);

Formula exists_from_points(const Formula& f, std::size_t x, const std::vector<TestPoint>& points) {
  std::vector<Formula> parts;
  for (const auto& t : points) parts.push_back(simplify(Formula::conj({t.guard, substitute(f, x, t)})));
  return simplify(Formula::disj(std::move(parts)));
}

Formula exists_conj(const Formula& f, std::size_t x) {
  // Conjuncts free of x move outside the quantifier.
  std::vector<Formula> outside, inside;
  for (const auto& c : f.kind() == K::And ? f.children() : std::vector<Formula>{f}) {
    (mentions(c, x) ? inside : outside).push_back(c);
  }
  if (inside.empty()) return f;
  const Formula body = Formula::conj(inside);

  std::vector<Atom> atoms;
  collect_atoms(body, atoms);
  unsigned max_deg = 0;
  bool univariate = true;
  for (const auto& a : atoms) {
    const unsigned d = a.poly.degree_in(x);
    max_deg = std::max(max_deg, d);
    if (d > 0 && a.poly.variables().size() > 1) univariate = false;
  }
  if (max_deg > 2) {
    if (!univariate) throw UnsupportedDegree(x, max_deg, "quantified variable");
    outside.push_back(exists_univariate(body, x, atoms));
    return simplify(Formula::conj(std::move(outside)));
  }

  // Equation among the conjuncts: only its roots need testing.
  const Atom* eq = nullptr;
  for (const auto& c : inside) {
    if (c.kind() != K::Atom || c.as_atom().rel != Relation::Eq) continue;
    if (!eq || c.as_atom().poly.degree_in(x) < eq->poly.degree_in(x)) eq = &c.as_atom();
  }
  Formula result = Formula::truth(false);
  if (eq) {
    std::vector<TestPoint> points = root_points(eq->poly, x, false);
    std::vector<Formula> rest;
    for (const auto& c : inside) {
      if (!(c.kind() == K::Atom && c.as_atom() == *eq)) rest.push_back(c);
    }
    std::vector<Formula> parts{exists_from_points(body, x, points)};
    std::vector<Formula> zero;
    for (const auto& c : eq->poly.coefficients_in(x)) zero.push_back(rel_atom(c, Relation::Eq));
    const Formula degenerate = simplify(Formula::conj(std::move(zero)));
    if (!degenerate.is_false()) {
      parts.push_back(Formula::conj({degenerate, exists_elim(simplify(Formula::conj(std::move(rest))), x)}));
    }
    result = simplify(Formula::disj(std::move(parts)));
  } else {
    std::vector<TestPoint> points;
    points.push_back({true, false, Poly(), Poly(), Poly(), Poly(), Formula::truth(true)});
    std::vector<std::pair<Poly, bool>> seen;
    for (const auto& a : atoms) {
      if (!a.poly.mentions(x)) continue;
      const std::pair<Poly, bool> key{a.poly, is_strict(a.rel)};
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      for (auto& t : root_points(a.poly, x, key.second)) points.push_back(std::move(t));
    }
    result = exists_from_points(body, x, points);
  }
  outside.push_back(result);
  return simplify(Formula::conj(std::move(outside)));
}

Formula exists_elim(const Formula& f, std::size_t x) {
  if (!mentions(f, x)) return f;
  if (f.kind() == K::Or) {
    std::vector<Formula> parts;
    for (const auto& c : f.children()) parts.push_back(exists_elim(c, x));
    return simplify(Formula::disj(std::move(parts)));
  }
  return exists_conj(f, x);
}

}  // namespace

Formula simplify(const Formula& f) { return simplify_nnf(f.nnf()); }

Formula eliminate_variable(Quantifier q, std::size_t x, const Formula& f) {
  if (!f.is_quantifier_free()) throw Error(ErrorCode::InvalidArgument, "body must be quantifier-free");
  if (q == Quantifier::Exists) return exists_elim(simplify(f), x);
  return simplify(Formula::negation(exists_elim(simplify(Formula::negation(f)), x)));
}

PolyFormula eliminate(const PolyFormula& f) {
  Formula m = simplify(f.matrix);
  if (!m.is_quantifier_free()) throw Error(ErrorCode::InvalidArgument, "matrix must be quantifier-free");
  for (auto it = f.prefix.rbegin(); it != f.prefix.rend(); ++it) m = eliminate_variable(it->quantifier, it->variable, m);
  return PolyFormula{{}, m, f.free_count};
}

bool decide(const PolyFormula& f) {
  Formula m = eliminate(f).matrix;
  if (!m.free_variables().empty()) throw Error(ErrorCode::InvalidArgument, "decide needs a closed formula");
  return m.evaluate([](std::size_t) { return Rational(0); });
}

bool holds_at(const Formula& f, std::size_t x, const AlgebraicNumber& a) {
  const Formula g = f.map_atoms([&](const Atom& at) {
    if (!at.poly.is_constant() && at.poly.variables() != std::set<std::size_t>{x}) {
      throw Error(ErrorCode::InvalidArgument, "formula has variables other than " + positional_name(x));
    }
    return Formula::truth(holds(at.rel, at.poly.is_constant() ? sgn(at.poly.constant_term())
                                                              : a.sign_of(at.poly.to_upoly(x))));
  });
  return g.evaluate([](std::size_t) { return Rational(0); });
}

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "rational_between needs a < b");
  AlgebraicNumber ra = a, rb = b;
  Rational width = rb.upper() - ra.lower();
  while (!(ra.upper() < rb.lower())) {
    width /= 2;
    ra = ra.refine(width);
    rb = rb.refine(width);
  }
  return (ra.upper() + rb.lower()) / 2;
}

}  // namespace dforge

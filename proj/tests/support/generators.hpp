#pragma once

// Hand-rolled random generators and semantic evaluators for property tests.

#include <random>
#include <vector>

#include "dforge/formula.hpp"
#include "dforge/overtake.hpp"
#include "dforge/term.hpp"

namespace gen {

using dforge::Integer;
using dforge::Rational;

/// p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational rational(std::mt19937_64& rng, long num_bound, long den_bound);

/// Rational strictly inside (0,1) with denominator <= den_bound.
Rational unit_rational(std::mt19937_64& rng, long den_bound);

/// Well-formed term of depth <= max_depth over the given generators.
dforge::RelationTerm term(std::mt19937_64& rng, unsigned max_depth, const std::vector<dforge::GeneratorKind>& gens);

/// Term built with exactly `ops` operations on top of one or two base relations.
dforge::RelationTerm small_term(std::mt19937_64& rng, unsigned ops, const std::vector<dforge::GeneratorKind>& gens);

/// Polynomial in variables 1..nvars with total degree <= max_degree, degree in
/// `capped_var` <= cap_degree, coefficients in [-coef, coef].
dforge::Poly poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, long coef, std::size_t terms,
                  std::size_t capped_var = 0, unsigned cap_degree = 0);

/// Boolean combination of `atoms` random atoms over variables 1..nvars.
dforge::Formula qf_formula(std::mt19937_64& rng, std::size_t nvars, std::size_t atoms, unsigned max_degree,
                           std::size_t capped_var = 0, unsigned cap_degree = 0);

dforge::SequenceTable table(std::mt19937_64& rng, std::size_t n, long max_entry);

}  // namespace gen

namespace oracle {

/// Membership of a rational point, evaluated per node kind without any
/// translation to formulas. Projections search a witness among the critical
/// values of the base relations at that point.
bool term_member(const dforge::RelationTerm& t, const std::vector<dforge::Rational>& point);

/// Closed formula obtained by substituting a rational point into the free
/// variables 1..point.size().
dforge::PolyFormula instantiate(const dforge::PolyFormula& f, const std::vector<dforge::Rational>& point);
dforge::Formula instantiate(const dforge::Formula& f, const std::vector<dforge::Rational>& point);

/// Truth of `Q x . f` where f is quantifier-free with x its only variable, by
/// sampling every sign-invariant cell of its atoms.
bool univariate_quantified(dforge::Quantifier q, std::size_t x, const dforge::Formula& f);

}  // namespace oracle

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/poly.hpp"
#include "dforge/term.hpp"

namespace dforge {

/// Sign condition `p rel 0`.
enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

/// Bit set of admissible signs: 1 = negative, 2 = zero, 4 = positive.
unsigned relation_mask(Relation r) noexcept;
/// Inverse of relation_mask for masks 1..6.
Relation relation_from_mask(unsigned mask);
Relation negate(Relation r) noexcept;
/// Relation satisfied by -p exactly when r is satisfied by p.
Relation mirror(Relation r) noexcept;
bool holds(Relation r, int sign) noexcept;
std::string_view relation_symbol(Relation r) noexcept;

struct Atom {
  Poly poly;
  Relation rel;
  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class Quantifier { Exists, Forall };

/// Immutable first-order formula over integer polynomial atoms.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Exists, Forall };

  static Formula truth(bool value);
  static Formula atom(Poly p, Relation r);
  /// Atom with a content-free polynomial and positive leading coefficient;
  /// constant polynomials fold to True/False.
  static Formula normalized_atom(const Poly& p, Relation r);
  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula quantified(Quantifier q, std::size_t var, Formula body);

  Kind kind() const noexcept;
  bool is_true() const noexcept { return kind() == Kind::True; }
  bool is_false() const noexcept { return kind() == Kind::False; }
  const Atom& as_atom() const;
  const std::vector<Formula>& children() const;
  std::size_t variable() const;
  const Formula& body() const;

  bool is_quantifier_free() const noexcept;
  std::size_t atom_count() const noexcept;
  /// Largest variable index mentioned anywhere (bound or free).
  std::size_t max_variable() const noexcept;
  std::vector<std::size_t> free_variables() const;

  /// Truth at a rational point; quantifier-free formulas only.
  bool evaluate(const std::function<Rational(std::size_t)>& value) const;

  /// Negation pushed to the atoms (quantifiers flip); no Not nodes remain.
  Formula nnf() const;
  Formula map_atoms(const std::function<Formula(const Atom&)>& fn) const;
  Formula rename(const std::function<std::size_t(std::size_t)>& map) const;

  friend int compare(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct QuantifierBinding {
  Quantifier quantifier;
  std::size_t variable;
  friend bool operator==(const QuantifierBinding&, const QuantifierBinding&) = default;
};

/// Prenex formula denoting a relation of arity `free_count`: free variables are
/// x1..x_{free_count}, bound variables follow in prefix order.
struct PolyFormula {
  std::vector<QuantifierBinding> prefix;
  Formula matrix = Formula::truth(true);
  std::size_t free_count = 0;
};

/// Prenex normal form; bound variables are renumbered free_count+1, ... in
/// prefix order.
PolyFormula prenex(const Formula& f, std::size_t free_count);
/// The nested (non-prenex) formula with the prefix reattached.
Formula to_formula(const PolyFormula& f);

/// Complement -> not, union -> or, swap -> renaming, lift -> unused variable,
/// project -> existential. Throws NonSemialgebraic if the term mentions Nat.
PolyFormula to_poly_formula(const RelationTerm& t);

std::string render_formula(const Formula& f, const VariableNamer& namer = positional_name);
std::string render_formula(const PolyFormula& f, const VariableNamer& namer = positional_name);

/// Parsed formula plus the names bound to each variable index (1-based;
/// names[0] is the name of x1).
struct ParsedFormula {
  PolyFormula formula;
  std::vector<std::string> names;
  std::string name_of(std::size_t index) const;
};

/// Infix DSL: `exists z . x + z*z = y`, relations `= != < > <= >=`,
/// connectives `not and or -> <->`, quantifiers `exists`/`forall`.
/// Free variables named x1..xn take their written index; other names are
/// numbered by first appearance.
ParsedFormula parse_formula(std::string_view text);

/// Polynomial expression; `names` maps index-1 to a variable name and is
/// extended with unseen names in order of appearance.
Poly parse_poly(std::string_view text, std::vector<std::string>& names);

}  // namespace dforge

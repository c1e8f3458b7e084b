#include "dforge/formula.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dforge/error.hpp"

namespace dforge {

unsigned relation_mask(Relation r) noexcept {
  switch (r) {
    case Relation::Eq: return 2;
    case Relation::Ne: return 5;
    case Relation::Lt: return 1;
    case Relation::Le: return 3;
    case Relation::Gt: return 4;
    case Relation::Ge: return 6;
  }
  return 0;
}

Relation relation_from_mask(unsigned mask) {
  switch (mask) {
    case 1: return Relation::Lt;
    case 2: return Relation::Eq;
    case 3: return Relation::Le;
    case 4: return Relation::Gt;
    case 5: return Relation::Ne;
    case 6: return Relation::Ge;
    default: throw Error(ErrorCode::InvalidArgument, "sign mask has no relation");
  }
}

Relation negate(Relation r) noexcept { return relation_from_mask(7U & ~relation_mask(r)); }

Relation mirror(Relation r) noexcept {
  const unsigned m = relation_mask(r);
  return relation_from_mask(((m & 1U) << 2) | (m & 2U) | ((m & 4U) >> 2));
}

bool holds(Relation r, int sign) noexcept {
  const unsigned bit = sign < 0 ? 1U : (sign == 0 ? 2U : 4U);
  return (relation_mask(r) & bit) != 0;
}

std::string_view relation_symbol(Relation r) noexcept {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

struct Formula::Node {
  Kind kind;
  Atom atom{Poly(), Relation::Eq};
  std::vector<Formula> children;
  std::size_t var = 0;
};

Formula Formula::truth(bool value) {
  static const Formula t(std::make_shared<const Node>(Node{Kind::True, {}, {}, 0}));
  static const Formula f(std::make_shared<const Node>(Node{Kind::False, {}, {}, 0}));
  return value ? t : f;
}

Formula Formula::atom(Poly p, Relation r) {
  if (p.is_constant()) return truth(holds(r, sgn(p.constant_term())));
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, Atom{std::move(p), r}, {}, 0}));
}

Formula Formula::normalized_atom(const Poly& p, Relation r) {
  if (p.is_constant()) return truth(holds(r, sgn(p.constant_term())));
  int sign = 1;
  Poly n = p.normalized(&sign);
  return atom(std::move(n), sign < 0 ? mirror(r) : r);
}

Formula Formula::negation(Formula f) {
  if (f.is_true()) return truth(false);
  if (f.is_false()) return truth(true);
  if (f.kind() == Kind::Not) return f.children().front();
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}, 0}));
}

namespace {

Formula junction(Formula::Kind kind, std::vector<Formula> parts, bool unit, auto make) {
  std::vector<Formula> flat;
  for (auto& p : parts) {
    if (p.kind() == kind) {
      for (const auto& c : p.children()) flat.push_back(c);
    } else if ((unit && p.is_true()) || (!unit && p.is_false())) {
      continue;
    } else if ((unit && p.is_false()) || (!unit && p.is_true())) {
      return Formula::truth(!unit);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return Formula::truth(unit);
  if (flat.size() == 1) return flat.front();
  return make(std::move(flat));
}

}  // namespace

Formula Formula::conj(std::vector<Formula> parts) {
  return junction(Kind::And, std::move(parts), true, [](std::vector<Formula> c) {
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(c), 0}));
  });
}

Formula Formula::disj(std::vector<Formula> parts) {
  return junction(Kind::Or, std::move(parts), false, [](std::vector<Formula> c) {
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(c), 0}));
  });
}

Formula Formula::quantified(Quantifier q, std::size_t var, Formula body) {
  if (var == 0) throw Error(ErrorCode::InvalidArgument, "variable indices start at 1");
  const Kind k = q == Quantifier::Exists ? Kind::Exists : Kind::Forall;
  return Formula(std::make_shared<const Node>(Node{k, {}, {std::move(body)}, var}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Atom& Formula::as_atom() const {
  if (kind() != Kind::Atom) throw Error(ErrorCode::InvalidArgument, "formula is not an atom");
  return node_->atom;
}

const std::vector<Formula>& Formula::children() const { return node_->children; }

std::size_t Formula::variable() const {
  if (kind() != Kind::Exists && kind() != Kind::Forall) throw Error(ErrorCode::InvalidArgument, "not a quantifier");
  return node_->var;
}

const Formula& Formula::body() const {
  if (node_->children.empty()) throw Error(ErrorCode::InvalidArgument, "formula has no body");
  return node_->children.front();
}

bool Formula::is_quantifier_free() const noexcept {
  if (kind() == Kind::Exists || kind() == Kind::Forall) return false;
  return std::all_of(children().begin(), children().end(), [](const Formula& c) { return c.is_quantifier_free(); });
}

std::size_t Formula::atom_count() const noexcept {
  if (kind() == Kind::Atom) return 1;
  std::size_t n = 0;
  for (const auto& c : children()) n += c.atom_count();
  return n;
}

std::size_t Formula::max_variable() const noexcept {
  std::size_t m = node_->var;
  if (kind() == Kind::Atom) {
    for (auto v : node_->atom.poly.variables()) m = std::max(m, v);
  }
  for (const auto& c : children()) m = std::max(m, c.max_variable());
  return m;
}

namespace {

void collect_free(const Formula& f, std::set<std::size_t>& bound, std::set<std::size_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (auto v : f.as_atom().poly.variables()) {
        if (!bound.contains(v)) out.insert(v);
      }
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool inserted = bound.insert(f.variable()).second;
      collect_free(f.body(), bound, out);
      if (inserted) bound.erase(f.variable());
      break;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

}  // namespace

std::vector<std::size_t> Formula::free_variables() const {
  std::set<std::size_t> bound, out;
  collect_free(*this, bound, out);
  return {out.begin(), out.end()};
}

bool Formula::evaluate(const std::function<Rational(std::size_t)>& value) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return holds(node_->atom.rel, sgn(node_->atom.poly.evaluate(value)));
    case Kind::Not: return !body().evaluate(value);
    case Kind::And:
      return std::all_of(children().begin(), children().end(), [&](const Formula& c) { return c.evaluate(value); });
    case Kind::Or:
      return std::any_of(children().begin(), children().end(), [&](const Formula& c) { return c.evaluate(value); });
    default: throw Error(ErrorCode::InvalidArgument, "cannot evaluate a quantified formula pointwise");
  }
}

namespace {

Formula nnf_impl(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return Formula::truth(f.is_true() != negated);
    case K::Atom: {
      const Atom& a = f.as_atom();
      return negated ? Formula::atom(a.poly, negate(a.rel)) : f;
    }
    case K::Not: return nnf_impl(f.body(), !negated);
    case K::And:
    case K::Or: {
      std::vector<Formula> parts;
      for (const auto& c : f.children()) parts.push_back(nnf_impl(c, negated));
      const bool as_and = (f.kind() == K::And) != negated;
      return as_and ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    case K::Exists:
    case K::Forall: {
      const bool exists = (f.kind() == K::Exists) != negated;
      return Formula::quantified(exists ? Quantifier::Exists : Quantifier::Forall, f.variable(),
                                 nnf_impl(f.body(), negated));
    }
  }
  return f;
}

}  // namespace

Formula Formula::nnf() const { return nnf_impl(*this, false); }

Formula Formula::map_atoms(const std::function<Formula(const Atom&)>& fn) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom: return fn(node_->atom);
    case Kind::Not: return negation(body().map_atoms(fn));
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      parts.reserve(children().size());
      for (const auto& c : children()) parts.push_back(c.map_atoms(fn));
      return kind() == Kind::And ? conj(std::move(parts)) : disj(std::move(parts));
    }
    case Kind::Exists:
    case Kind::Forall:
      return quantified(kind() == Kind::Exists ? Quantifier::Exists : Quantifier::Forall, variable(),
                        body().map_atoms(fn));
  }
  return *this;
}

Formula Formula::rename(const std::function<std::size_t(std::size_t)>& map) const {
  switch (kind()) {
    case Kind::Exists:
    case Kind::Forall:
      return quantified(kind() == Kind::Exists ? Quantifier::Exists : Quantifier::Forall, map(variable()),
                        body().rename(map));
    default:
      return map_atoms([&](const Atom& a) { return atom(a.poly.rename(map), a.rel); });
  }
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::True:
    case K::False: return 0;
    case K::Atom: {
      if (int c = compare(a.node_->atom.poly, b.node_->atom.poly); c != 0) return c;
      const auto ra = a.node_->atom.rel;
      const auto rb = b.node_->atom.rel;
      return ra == rb ? 0 : (ra < rb ? -1 : 1);
    }
    default: break;
  }
  if (a.node_->var != b.node_->var) return a.node_->var < b.node_->var ? -1 : 1;
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  }
  if (ca.size() == cb.size()) return 0;
  return ca.size() < cb.size() ? -1 : 1;
}

namespace {

struct PrenexBuilder {
  std::size_t next_fresh;
  std::vector<QuantifierBinding> prefix;

  // `env` maps source variables to their current names.
  Formula run(const Formula& f, std::map<std::size_t, std::size_t>& env, bool negated) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True:
      case K::False: return f;
      case K::Atom: {
        const Atom& a = f.as_atom();
        return Formula::atom(a.poly.rename([&](std::size_t v) {
                               auto it = env.find(v);
                               return it == env.end() ? v : it->second;
                             }),
                             a.rel);
      }
      case K::Not: return Formula::negation(run(f.body(), env, !negated));
      case K::And:
      case K::Or: {
        std::vector<Formula> parts;
        for (const auto& c : f.children()) parts.push_back(run(c, env, negated));
        return f.kind() == K::And ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
      }
      case K::Exists:
      case K::Forall: {
        const std::size_t fresh = next_fresh++;
        const bool exists = (f.kind() == K::Exists) != negated;
        prefix.push_back({exists ? Quantifier::Exists : Quantifier::Forall, fresh});
        auto saved = env.find(f.variable()) == env.end() ? std::optional<std::size_t>{}
                                                          : std::optional<std::size_t>{env[f.variable()]};
        env[f.variable()] = fresh;
        Formula body = run(f.body(), env, negated);
        if (saved) {
          env[f.variable()] = *saved;
        } else {
          env.erase(f.variable());
        }
        return body;
      }
    }
    return f;
  }
};

}  // namespace

PolyFormula prenex(const Formula& f, std::size_t free_count) {
  // Fresh names are first allocated above everything in sight, then compacted
  // to free_count+1.. in prefix order.
  PrenexBuilder builder{std::max(free_count, f.max_variable()) + 1, {}};
  std::map<std::size_t, std::size_t> env;
  Formula matrix = builder.run(f, env, false);
  std::map<std::size_t, std::size_t> compact;
  for (std::size_t i = 0; i < builder.prefix.size(); ++i) {
    compact[builder.prefix[i].variable] = free_count + 1 + i;
    builder.prefix[i].variable = free_count + 1 + i;
  }
  matrix = matrix.rename([&](std::size_t v) {
    auto it = compact.find(v);
    return it == compact.end() ? v : it->second;
  });
  return PolyFormula{std::move(builder.prefix), std::move(matrix), free_count};
}

Formula to_formula(const PolyFormula& f) {
  Formula out = f.matrix;
  for (auto it = f.prefix.rbegin(); it != f.prefix.rend(); ++it) out = Formula::quantified(it->quantifier, it->variable, out);
  return out;
}

namespace {

struct TermTranslator {
  std::size_t next_bound;

  Formula run(const RelationTerm& t, const std::vector<std::size_t>& coords) {
    switch (t.kind()) {
      case NodeKind::Base: {
        const auto x = [&](std::size_t i) { return Poly::var(coords[i]); };
        switch (t.generator()) {
          case GeneratorKind::Add: return Formula::atom(x(0) + x(1) - x(2), Relation::Eq);
          case GeneratorKind::Mul: return Formula::atom(x(0) * x(1) - x(2), Relation::Eq);
          case GeneratorKind::Leq: return Formula::atom(x(1) - x(0), Relation::Ge);
          case GeneratorKind::Nat:
            throw Error(ErrorCode::NonSemialgebraic, "the naturals are not a semialgebraic set");
        }
        break;
      }
      case NodeKind::Complement: return Formula::negation(run(t.child(), coords));
      case NodeKind::Union: return Formula::disj({run(t.left(), coords), run(t.right(), coords)});
      case NodeKind::Swap: {
        auto swapped = coords;
        std::swap(swapped[t.position() - 1], swapped[t.position()]);
        return run(t.child(), swapped);
      }
      case NodeKind::Lift: {
        std::vector<std::size_t> inner(coords.begin(), coords.end() - 1);
        return run(t.child(), inner);
      }
      case NodeKind::Project: {
        const std::size_t w = next_bound++;
        auto extended = coords;
        extended.push_back(w);
        return Formula::quantified(Quantifier::Exists, w, run(t.child(), extended));
      }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown term node");
  }
};

}  // namespace

PolyFormula to_poly_formula(const RelationTerm& t) {
  if (t.mentions(GeneratorKind::Nat)) {
    throw Error(ErrorCode::NonSemialgebraic, "term mentions the naturals: " + render_term(t));
  }
  const std::size_t n = t.arity();
  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i + 1;
  TermTranslator tr{n + 1};
  Formula nested = tr.run(t, coords);
  return prenex(nested, n);
}

namespace {

void render_into(const Formula& f, const VariableNamer& namer, std::string& out, bool parenthesize) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: out += "true"; return;
    case K::False: out += "false"; return;
    case K::Atom: {
      const Atom& a = f.as_atom();
      if (parenthesize) out += '(';
      out += a.poly.to_string(namer);
      out += ' ';
      out += relation_symbol(a.rel);
      out += " 0";
      if (parenthesize) out += ')';
      return;
    }
    case K::Not:
      out += "not ";
      render_into(f.body(), namer, out, true);
      return;
    case K::And:
    case K::Or: {
      if (parenthesize) out += '(';
      const char* sep = f.kind() == K::And ? " and " : " or ";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += sep;
        first = false;
        render_into(c, namer, out, c.kind() == K::And || c.kind() == K::Or || c.kind() == K::Exists ||
                                        c.kind() == K::Forall);
      }
      if (parenthesize) out += ')';
      return;
    }
    case K::Exists:
    case K::Forall:
      if (parenthesize) out += '(';
      out += f.kind() == K::Exists ? "exists " : "forall ";
      out += namer(f.variable());
      out += " . ";
      render_into(f.body(), namer, out, false);
      if (parenthesize) out += ')';
      return;
  }
}

}  // namespace

std::string render_formula(const Formula& f, const VariableNamer& namer) {
  std::string out;
  render_into(f, namer, out, false);
  return out;
}

std::string render_formula(const PolyFormula& f, const VariableNamer& namer) {
  return render_formula(to_formula(f), namer);
}

std::string ParsedFormula::name_of(std::size_t index) const {
  if (index >= 1 && index <= names.size() && !names[index - 1].empty()) return names[index - 1];
  return positional_name(index);
}

}  // namespace dforge

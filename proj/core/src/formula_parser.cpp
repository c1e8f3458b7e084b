#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "dforge/algebraic.hpp"
#include "dforge/error.hpp"
#include "dforge/formula.hpp"

namespace dforge {
namespace {

enum class Tok { Number, Name, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), i});
      i = j;
    } else {
      static const char* const multi[] = {"<->", "->", "<=", ">=", "!="};
      bool matched = false;
      for (const char* m : multi) {
        const std::string_view mv(m);
        if (s.substr(i, mv.size()) == mv) {
          out.push_back({Tok::Sym, std::string(mv), i});
          i += mv.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      if (std::string_view("+-*^(),.=<>").find(c) == std::string_view::npos) {
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
      }
      out.push_back({Tok::Sym, std::string(1, c), i});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& w) {
  return w == "and" || w == "or" || w == "not" || w == "exists" || w == "forall" || w == "true" || w == "false";
}

std::optional<Relation> relation_of(const Token& t) {
  if (t.kind != Tok::Sym) return std::nullopt;
  if (t.text == "=") return Relation::Eq;
  if (t.text == "!=") return Relation::Ne;
  if (t.text == "<") return Relation::Lt;
  if (t.text == "<=") return Relation::Le;
  if (t.text == ">") return Relation::Gt;
  if (t.text == ">=") return Relation::Ge;
  return std::nullopt;
}

class Parser {
 public:
  using Resolver = std::function<std::size_t(const std::string&)>;

  Parser(std::string_view text, Resolver resolve) : toks_(lex(text)), resolve_(std::move(resolve)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Name && peek().text == w; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(t.pos, what + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }

  void expect_sym(std::string_view s) {
    if (!at_sym(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  Poly expr() {
    Poly acc = term();
    while (at_sym("+") || at_sym("-")) {
      const bool minus = peek().text == "-";
      ++pos_;
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  // Binder scopes: name -> variable id, innermost last.
  std::vector<std::pair<std::string, std::size_t>> scopes;
  std::function<std::size_t()> fresh_bound;
  std::vector<std::pair<std::size_t, std::string>> bound_names;

  Formula formula() {
    if (at_word("exists") || at_word("forall")) return quantified();
    return iff();
  }

 private:
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (at_sym("*")) {
        ++pos_;
        acc = acc * factor();
      } else if (peek().kind == Tok::Number || (peek().kind == Tok::Name && !is_keyword(peek().text)) ||
                 at_sym("(")) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (at_sym("-")) {
      ++pos_;
      return -factor();
    }
    Poly base = primary();
    if (at_sym("^")) {
      ++pos_;
      if (peek().kind != Tok::Number) fail("expected an exponent");
      const Integer e(peek().text, 10);
      if (e > 64) fail("exponent too large");
      ++pos_;
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return Poly(Integer(t.text, 10));
    }
    if (t.kind == Tok::Name && !is_keyword(t.text)) {
      ++pos_;
      return Poly::var(lookup(t.text));
    }
    if (at_sym("(")) {
      ++pos_;
      Poly p = expr();
      expect_sym(")");
      return p;
    }
    fail("expected a polynomial term");
  }

  std::size_t lookup(const std::string& name) {
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return resolve_(name);
  }

  Formula quantified() {
    const Quantifier q = peek().text == "exists" ? Quantifier::Exists : Quantifier::Forall;
    ++pos_;
    std::vector<std::size_t> vars;
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Name || is_keyword(t.text)) fail("expected a variable name");
      const std::size_t id = fresh_bound();
      bound_names.emplace_back(id, t.text);
      scopes.emplace_back(t.text, id);
      vars.push_back(id);
      ++pos_;
      if (!at_sym(",")) break;
      ++pos_;
    }
    expect_sym(".");
    Formula body = formula();
    for (std::size_t i = 0; i < vars.size(); ++i) scopes.pop_back();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::quantified(q, *it, body);
    return body;
  }

  Formula iff() {
    Formula lhs = implication();
    while (at_sym("<->")) {
      ++pos_;
      Formula rhs = implication();
      lhs = Formula::disj({Formula::conj({lhs, rhs}),
                           Formula::conj({Formula::negation(lhs), Formula::negation(rhs)})});
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at_sym("->")) {
      ++pos_;
      Formula rhs = at_word("exists") || at_word("forall") ? quantified() : implication();
      return Formula::disj({Formula::negation(lhs), rhs});
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (at_word("or")) {
      ++pos_;
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? parts.front() : Formula::disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (at_word("and")) {
      ++pos_;
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts));
  }

  Formula unary() {
    if (at_word("not")) {
      ++pos_;
      return Formula::negation(unary());
    }
    if (at_word("exists") || at_word("forall")) return quantified();
    if (at_word("true") || at_word("false")) {
      const bool v = peek().text == "true";
      ++pos_;
      return Formula::truth(v);
    }
    if (at_sym("(")) {
      const std::size_t save = pos_;
      const auto saved_bound = bound_names.size();
      try {
        return comparison();
      } catch (const SyntaxError& first) {
        pos_ = save;
        bound_names.resize(saved_bound);
        try {
          ++pos_;
          Formula f = formula();
          expect_sym(")");
          return f;
        } catch (const SyntaxError& second) {
          if (first.position() > second.position()) throw first;
          throw;
        }
      }
    }
    return comparison();
  }

  Formula comparison() {
    Poly lhs = expr();
    auto rel = relation_of(peek());
    if (!rel) fail("expected a relation");
    std::vector<Formula> parts;
    while (rel) {
      ++pos_;
      Poly rhs = expr();
      parts.push_back(Formula::atom(lhs - rhs, *rel));
      lhs = std::move(rhs);
      rel = relation_of(peek());
    }
    return parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Resolver resolve_;
};

std::optional<std::size_t> positional_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
  if (!std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  if (name.size() > 4) return std::nullopt;
  return static_cast<std::size_t>(std::stoul(name.substr(1)));
}

void binder_order(const Formula& f, std::vector<std::size_t>& out) {
  if (f.kind() == Formula::Kind::Exists || f.kind() == Formula::Kind::Forall) out.push_back(f.variable());
  if (f.kind() == Formula::Kind::Atom) return;
  for (const auto& c : f.children()) binder_order(c, out);
}

}  // namespace

ParsedFormula parse_formula(std::string_view text) {
  // Temporary ids are handed out in order of appearance to free and bound
  // names alike, then free ids are mapped to their final indices and bound ids
  // moved above them.
  std::size_t next_id = 1;
  std::map<std::string, std::size_t> free_ids;
  std::vector<std::string> free_names;
  Parser parser(text, [&](const std::string& name) {
    auto it = free_ids.find(name);
    if (it != free_ids.end()) return it->second;
    free_names.push_back(name);
    return free_ids[name] = next_id++;
  });
  parser.fresh_bound = [&] { return next_id++; };
  Formula f = parser.formula();
  parser.expect_end();

  std::map<std::size_t, std::size_t> final_index;
  std::set<std::size_t> used;
  for (const auto& name : free_names) {
    if (auto k = positional_index(name)) {
      final_index[free_ids[name]] = *k;
      used.insert(*k);
    }
  }
  std::size_t next = 1;
  for (const auto& name : free_names) {
    if (final_index.contains(free_ids[name])) continue;
    while (used.contains(next)) ++next;
    final_index[free_ids[name]] = next;
    used.insert(next);
  }
  const std::size_t free_count = used.empty() ? 0 : *used.rbegin();
  Formula renamed = f.rename([&](std::size_t v) {
    auto it = final_index.find(v);
    return it == final_index.end() ? free_count + v : it->second;
  });

  std::vector<std::size_t> order;
  binder_order(renamed, order);
  ParsedFormula out;
  out.formula = prenex(renamed, free_count);
  out.names.assign(free_count + order.size(), std::string());
  for (const auto& name : free_names) out.names[final_index[free_ids[name]] - 1] = name;
  std::map<std::size_t, std::string> bound;
  for (const auto& [id, name] : parser.bound_names) bound[free_count + id] = name;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = bound.find(order[i]);
    if (it != bound.end()) out.names[free_count + i] = it->second;
  }
  return out;
}

Poly parse_poly(std::string_view text, std::vector<std::string>& names) {
  Parser parser(text, [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin()) + 1;
    names.push_back(name);
    return names.size();
  });
  Poly p = parser.expr();
  parser.expect_end();
  return p;
}

UPoly parse_upoly(std::string_view text, const std::string& var) {
  std::vector<std::string> names{var};
  Poly p = parse_poly(text, names);
  if (names.size() > 1) throw SyntaxError(0, "unexpected variable '" + names[1] + "' in univariate polynomial");
  return p.to_upoly(1);
}

}  // namespace dforge

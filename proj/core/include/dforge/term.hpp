#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dforge {

/// Base relations a D-structure can be generated from.
enum class GeneratorKind {
  Add,  // {(x,y,z) | x + y = z}
  Mul,  // {(x,y,z) | x * y = z}
  Leq,  // {(x,y) | x <= y}
  Nat,  // {x | x in N}
};

unsigned generator_arity(GeneratorKind g) noexcept;
std::string_view generator_name(GeneratorKind g) noexcept;
GeneratorKind parse_generator(std::string_view name);
/// Comma-separated list such as "add,mul,nat".
std::vector<GeneratorKind> parse_generator_list(std::string_view text);

/// The five D-structure operations plus the leaf.
enum class NodeKind { Base, Complement, Union, Swap, Lift, Project };

std::string_view node_keyword(NodeKind k) noexcept;

/// Immutable relation term. Nodes are shared, so copies are cheap and terms
/// built by enumeration form a DAG rather than a tree.
class RelationTerm {
 public:
  static RelationTerm base(GeneratorKind g);
  static RelationTerm complement(const RelationTerm& t);
  /// Throws ArityMismatch when the arities differ.
  static RelationTerm unite(const RelationTerm& a, const RelationTerm& b);
  /// Exchanges coordinates position and position+1; needs 1 <= position < arity.
  static RelationTerm swap(const RelationTerm& t, unsigned position);
  /// Cartesian product with the line; the new coordinate is last.
  static RelationTerm lift(const RelationTerm& t);
  /// Drops the last coordinate (existential); needs arity >= 2.
  static RelationTerm project(const RelationTerm& t);
  /// Convenience: complement of the union of complements.
  static RelationTerm intersect(const RelationTerm& a, const RelationTerm& b);

  NodeKind kind() const noexcept;
  unsigned arity() const noexcept;
  GeneratorKind generator() const;
  unsigned position() const;
  RelationTerm child() const;
  RelationTerm left() const { return child(); }
  RelationTerm right() const;

  /// Nodes in the tree (shared subterms counted per occurrence).
  std::size_t size() const noexcept;
  std::size_t count(NodeKind k) const noexcept;
  bool mentions(GeneratorKind g) const noexcept;

  friend bool operator==(const RelationTerm& a, const RelationTerm& b) noexcept;

 private:
  struct Node;
  explicit RelationTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Generic constructor: `children` and `param` must fit the node kind. For
/// Base, `param` is the generator's index in GeneratorKind order; for Swap it
/// is the transposition position.
RelationTerm build_term(NodeKind kind, std::span<const RelationTerm> children,
                        std::optional<unsigned> param = std::nullopt);

/// Canonical s-expression, e.g. "(union (base add) (base mul))".
std::string render_term(const RelationTerm& t);
/// Inverse of render_term; whitespace-insensitive. Throws SyntaxError or ArityMismatch.
RelationTerm parse_term(std::string_view text);

}  // namespace dforge

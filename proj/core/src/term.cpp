#include "dforge/term.hpp"

#include <cctype>

#include "dforge/error.hpp"

namespace dforge {

unsigned generator_arity(GeneratorKind g) noexcept {
  switch (g) {
    case GeneratorKind::Add:
    case GeneratorKind::Mul: return 3;
    case GeneratorKind::Leq: return 2;
    case GeneratorKind::Nat: return 1;
  }
  return 0;
}

std::string_view generator_name(GeneratorKind g) noexcept {
  switch (g) {
    case GeneratorKind::Add: return "add";
    case GeneratorKind::Mul: return "mul";
    case GeneratorKind::Leq: return "leq";
    case GeneratorKind::Nat: return "nat";
  }
  return "?";
}

GeneratorKind parse_generator(std::string_view name) {
  for (auto g : {GeneratorKind::Add, GeneratorKind::Mul, GeneratorKind::Leq, GeneratorKind::Nat}) {
    if (generator_name(g) == name) return g;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator '" + std::string(name) + "'");
}

std::vector<GeneratorKind> parse_generator_list(std::string_view text) {
  std::vector<GeneratorKind> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty()) throw Error(ErrorCode::InvalidArgument, "empty entry in generator list");
    out.push_back(parse_generator(item));
    start = comma + 1;
  }
  return out;
}

std::string_view node_keyword(NodeKind k) noexcept {
  switch (k) {
    case NodeKind::Base: return "base";
    case NodeKind::Complement: return "compl";
    case NodeKind::Union: return "union";
    case NodeKind::Swap: return "swap";
    case NodeKind::Lift: return "lift";
    case NodeKind::Project: return "proj";
  }
  return "?";
}

struct RelationTerm::Node {
  NodeKind kind;
  unsigned arity;
  GeneratorKind generator = GeneratorKind::Add;
  unsigned position = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::size_t size = 1;
};

RelationTerm RelationTerm::base(GeneratorKind g) {
  return RelationTerm(std::make_shared<const Node>(Node{NodeKind::Base, generator_arity(g), g, 0, nullptr, nullptr, 1}));
}

RelationTerm RelationTerm::complement(const RelationTerm& t) {
  return RelationTerm(std::make_shared<const Node>(
      Node{NodeKind::Complement, t.arity(), GeneratorKind::Add, 0, t.node_, nullptr, t.size() + 1}));
}

RelationTerm RelationTerm::unite(const RelationTerm& a, const RelationTerm& b) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorCode::ArityMismatch, "union of arities " + std::to_string(a.arity()) + " and " +
                                              std::to_string(b.arity()));
  }
  return RelationTerm(std::make_shared<const Node>(
      Node{NodeKind::Union, a.arity(), GeneratorKind::Add, 0, a.node_, b.node_, a.size() + b.size() + 1}));
}

RelationTerm RelationTerm::swap(const RelationTerm& t, unsigned position) {
  if (position < 1 || position + 1 > t.arity()) {
    throw Error(ErrorCode::ArityMismatch, "swap position " + std::to_string(position) +
                                              " out of range for arity " + std::to_string(t.arity()));
  }
  return RelationTerm(std::make_shared<const Node>(
      Node{NodeKind::Swap, t.arity(), GeneratorKind::Add, position, t.node_, nullptr, t.size() + 1}));
}

RelationTerm RelationTerm::lift(const RelationTerm& t) {
  return RelationTerm(std::make_shared<const Node>(
      Node{NodeKind::Lift, t.arity() + 1, GeneratorKind::Add, 0, t.node_, nullptr, t.size() + 1}));
}

RelationTerm RelationTerm::project(const RelationTerm& t) {
  if (t.arity() < 2) throw Error(ErrorCode::ArityMismatch, "projection of a unary relation");
  return RelationTerm(std::make_shared<const Node>(
      Node{NodeKind::Project, t.arity() - 1, GeneratorKind::Add, 0, t.node_, nullptr, t.size() + 1}));
}

RelationTerm RelationTerm::intersect(const RelationTerm& a, const RelationTerm& b) {
  return complement(unite(complement(a), complement(b)));
}

NodeKind RelationTerm::kind() const noexcept { return node_->kind; }
unsigned RelationTerm::arity() const noexcept { return node_->arity; }

GeneratorKind RelationTerm::generator() const {
  if (node_->kind != NodeKind::Base) throw Error(ErrorCode::InvalidArgument, "not a base term");
  return node_->generator;
}

unsigned RelationTerm::position() const {
  if (node_->kind != NodeKind::Swap) throw Error(ErrorCode::InvalidArgument, "not a swap term");
  return node_->position;
}

RelationTerm RelationTerm::child() const {
  if (!node_->a) throw Error(ErrorCode::InvalidArgument, "base term has no child");
  return RelationTerm(node_->a);
}

RelationTerm RelationTerm::right() const {
  if (!node_->b) throw Error(ErrorCode::InvalidArgument, "only union terms have a right operand");
  return RelationTerm(node_->b);
}

std::size_t RelationTerm::size() const noexcept { return node_->size; }

namespace {

template <typename Node, typename Fn>
void walk(const Node* n, Fn&& fn) {
  fn(n);
  if (n->a) walk(n->a.get(), fn);
  if (n->b) walk(n->b.get(), fn);
}

}  // namespace

std::size_t RelationTerm::count(NodeKind k) const noexcept {
  std::size_t c = 0;
  walk(node_.get(), [&](const Node* n) { c += n->kind == k; });
  return c;
}

bool RelationTerm::mentions(GeneratorKind g) const noexcept {
  bool found = false;
  walk(node_.get(), [&](const Node* n) { found = found || (n->kind == NodeKind::Base && n->generator == g); });
  return found;
}

bool operator==(const RelationTerm& a, const RelationTerm& b) noexcept {
  const auto* x = a.node_.get();
  const auto* y = b.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind || x->arity != y->arity || x->size != y->size) return false;
  switch (x->kind) {
    case NodeKind::Base: return x->generator == y->generator;
    case NodeKind::Swap:
      if (x->position != y->position) return false;
      break;
    default: break;
  }
  if (!(RelationTerm(x->a) == RelationTerm(y->a))) return false;
  if (x->kind == NodeKind::Union) return RelationTerm(x->b) == RelationTerm(y->b);
  return true;
}

RelationTerm build_term(NodeKind kind, std::span<const RelationTerm> children, std::optional<unsigned> param) {
  const std::size_t expected = kind == NodeKind::Base ? 0 : (kind == NodeKind::Union ? 2 : 1);
  if (children.size() != expected) {
    throw Error(ErrorCode::InvalidArgument, std::string(node_keyword(kind)) + " expects " +
                                                std::to_string(expected) + " operand(s)");
  }
  const bool wants_param = kind == NodeKind::Base || kind == NodeKind::Swap;
  if (wants_param != param.has_value()) {
    throw Error(ErrorCode::InvalidArgument, std::string(node_keyword(kind)) +
                                                (wants_param ? " needs a parameter" : " takes no parameter"));
  }
  switch (kind) {
    case NodeKind::Base:
      if (*param > 3) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
      return RelationTerm::base(static_cast<GeneratorKind>(*param));
    case NodeKind::Complement: return RelationTerm::complement(children[0]);
    case NodeKind::Union: return RelationTerm::unite(children[0], children[1]);
    case NodeKind::Swap: return RelationTerm::swap(children[0], *param);
    case NodeKind::Lift: return RelationTerm::lift(children[0]);
    case NodeKind::Project: return RelationTerm::project(children[0]);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown node kind");
}

namespace {

void render(const RelationTerm& t, std::string& out) {
  out += '(';
  out += node_keyword(t.kind());
  out += ' ';
  switch (t.kind()) {
    case NodeKind::Base: out += generator_name(t.generator()); break;
    case NodeKind::Swap:
      out += std::to_string(t.position());
      out += ' ';
      render(t.child(), out);
      break;
    case NodeKind::Union:
      render(t.left(), out);
      out += ' ';
      render(t.right(), out);
      break;
    default: render(t.child(), out); break;
  }
  out += ')';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  RelationTerm parse_all() {
    RelationTerm t = parse();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "trailing input");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected a keyword");
    return text_.substr(start, pos_ - start);
  }

  RelationTerm parse() {
    expect('(');
    const std::size_t at = pos_;
    const auto kw = word();
    RelationTerm result = RelationTerm::base(GeneratorKind::Add);
    if (kw == "base") {
      const std::size_t gen_at = pos_;
      const auto name = word();
      try {
        result = RelationTerm::base(parse_generator(name));
      } catch (const Error&) {
        throw SyntaxError(gen_at, "unknown generator '" + std::string(name) + "'");
      }
    } else if (kw == "compl") {
      result = RelationTerm::complement(parse());
    } else if (kw == "union") {
      RelationTerm a = parse();
      RelationTerm b = parse();
      result = RelationTerm::unite(a, b);
    } else if (kw == "swap") {
      const std::size_t num_at = pos_;
      const auto num = word();
      unsigned k = 0;
      for (char c : num) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw SyntaxError(num_at, "swap position must be a natural");
        k = k * 10 + static_cast<unsigned>(c - '0');
      }
      result = RelationTerm::swap(parse(), k);
    } else if (kw == "lift") {
      result = RelationTerm::lift(parse());
    } else if (kw == "proj") {
      result = RelationTerm::project(parse());
    } else {
      throw SyntaxError(at, "unknown operation '" + std::string(kw) + "'");
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_term(const RelationTerm& t) {
  std::string out;
  render(t, out);
  return out;
}

RelationTerm parse_term(std::string_view text) { return TermParser(text).parse_all(); }

}  // namespace dforge

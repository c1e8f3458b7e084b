#include "dforge_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "dforge/chaitin.hpp"
#include "dforge/codec.hpp"
#include "dforge/diagonal.hpp"
#include "dforge/digits.hpp"
#include "dforge/enumerator.hpp"
#include "dforge/error.hpp"
#include "dforge/formula.hpp"
#include "dforge/overtake.hpp"
#include "dforge/qe.hpp"

namespace dforge::cli {
namespace {

struct Options {
  std::string generators = "add,mul,nat";
  std::size_t count = 0;
  std::size_t blocks = 2;
  std::string formula;
  std::string term;
  std::string value;
  std::string values;
  std::string poly;
  std::string param_n;
  std::uint64_t bound = 0;
  std::uint64_t cap = 0;
  std::string table;
  std::string format = "text";
  std::string instruction_format = "csv";
  std::string arities;
  std::string indices;
  std::size_t m = 2;
  std::size_t wrap = 0;
  std::size_t search = 1000;
  bool curated = false;
  bool terminated = false;
  bool w = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::string s = text;
  if (!s.empty() && s.front() == '[') s = s.substr(1, s.size() >= 2 ? s.size() - 2 : 0);
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a natural number");
    }
    out.push_back(static_cast<T>(std::stoull(item)));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("--table: cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

VariableNamer namer_of(const ParsedFormula& p) {
  return [&p](std::size_t i) { return p.name_of(i); };
}

AlgebraicNumber value_of(const Options& o) {
  require(o.value.empty() != o.formula.empty(), "give exactly one of --value or --formula");
  if (!o.value.empty()) return parse_algebraic(o.value);
  return definable_number(o.formula);
}

void run_enumerate(const Options& o, std::ostream& out) {
  const auto gens = parse_generator_list(o.generators);
  const auto terms = enumerate(gens, o.count);
  if (o.format == "csv") out << "k,arity,term\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (o.format == "csv") {
      out << i + 1 << ',' << terms[i].arity() << ",\"" << render_term(terms[i]) << "\"\n";
    } else {
      out << i + 1 << ' ' << render_term(terms[i]) << '\n';
    }
  }
}

void run_instructions(const Options& o, std::ostream& out) {
  std::vector<Instruction> list;
  std::size_t first = 1;
  if (!o.arities.empty()) {
    list = instructions_from_arities(parse_list<unsigned>(o.arities, "--arities"));
  } else {
    list = encode_instructions(parse_generator_list(o.generators), o.count);
  }
  if (o.instruction_format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
      rows.push_back({{"k", first + i}, {"opcode", list[i].opcode}, {"a", list[i].a}, {"b", list[i].b},
                      {"arity", list[i].arity}});
    }
    out << nlohmann::json{{"format", "definability-forge instructions v1"}, {"instructions", rows}}.dump(2) << '\n';
  } else if (o.instruction_format == "text") {
    for (std::size_t i = 0; i < list.size(); ++i) out << "b_" << first + i << '=' << to_string(list[i]) << '\n';
  } else {
    out << instructions_csv(list, first);
  }
}

void run_boundaries(const Options& o, std::ostream& out) {
  const auto ks = block_boundaries(parse_generator_list(o.generators), o.blocks);
  if (o.format == "csv") out << "n,k\n";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (o.format == "csv") {
      out << i + 1 << ',' << to_string(ks[i]) << '\n';
    } else {
      out << "k_" << i + 1 << '=' << to_string(ks[i]) << '\n';
    }
  }
}

ParsedFormula formula_of(const Options& o) {
  require(o.formula.empty() != o.term.empty(), "give exactly one of --formula or --term");
  if (!o.formula.empty()) return parse_formula(o.formula);
  ParsedFormula p;
  p.formula = to_poly_formula(parse_term(o.term));
  return p;
}

void run_decide(const Options& o, std::ostream& out) { out << (decide(formula_of(o).formula) ? "true" : "false") << '\n'; }

void run_eliminate(const Options& o, std::ostream& out) {
  const ParsedFormula p = formula_of(o);
  out << render_formula(eliminate(p.formula), namer_of(p)) << '\n';
}

void run_describe(const Options& o, std::ostream& out) {
  const ParsedFormula p = formula_of(o);
  out << describe_unary(p.formula).to_string() << '\n';
}

void run_digits(const Options& o, std::ostream& out) {
  require(o.count > 0, "--count must be positive");
  const auto digits = DigitStream::of(value_of(o)).prefix(o.count);
  out << render_digits(digits, o.wrap) << '\n';
}

void run_interleave(const Options& o, std::ostream& out) {
  require(!o.values.empty(), "--values is required");
  const FiniteSequence seq = parse_sequence(o.values);
  const bool rational = std::all_of(seq.begin(), seq.end(), [](const AlgebraicNumber& a) { return a.is_rational(); });
  if (rational && o.count == 0) {
    std::vector<Rational> rs;
    for (const auto& a : seq) rs.push_back(a.rational_value());
    out << to_string(o.w ? w_encode(rs) : interleave(rs)) << '\n';
    return;
  }
  require(o.count > 0, "--count is required for digit output");
  const DigitStream z = o.w ? w_encode(seq) : interleave(seq);
  out << render_digits(z.prefix(o.count), o.wrap) << '\n';
}

void run_deinterleave(const Options& o, std::ostream& out) {
  require(!o.value.empty(), "--value is required");
  const AlgebraicNumber z = parse_algebraic(o.value);
  if (z.is_rational()) {
    const auto parts = o.w ? w_decode(z.rational_value(), o.m) : deinterleave(z.rational_value(), o.m);
    out << (parts ? render_sequence(*parts) : std::string("none")) << '\n';
    return;
  }
  require(o.count > 0, "--count is required for an irrational value");
  for (const auto& d : deinterleave_prefix(DigitStream::of(z), o.m, o.count)) out << render_digits(d) << '\n';
}

void run_diagonal(const Options& o, std::ostream& out) {
  std::vector<AlgebraicNumber> stream;
  std::vector<std::string> reasons;
  if (o.curated) {
    stream = curated_stream();
  } else {
    for (auto& e : singleton_stream(parse_generator_list(o.generators), o.count)) {
      stream.push_back(e.value);
      reasons.push_back(e.reason);
    }
  }
  const std::size_t N = o.count == 0 ? stream.size() : o.count;
  const auto certs = diagonal_number(stream, N);
  out << render_digits(diagonal_digits(certs)) << '\n';
  for (std::size_t i = 0; i < certs.size(); ++i) {
    out << certs[i].to_string();
    if (i < reasons.size()) out << " term=" << reasons[i];
    out << '\n';
  }
}

void run_overtake(const Options& o, std::ostream& out) {
  require(!o.table.empty(), "--table is required");
  const SequenceTable t = SequenceTable::from_csv(read_file(o.table));
  const std::size_t n = o.count == 0 ? t.n_max() : o.count;
  const auto ys = overtake_sequence(t, n);
  if (o.format == "csv") {
    out << "n,y\n";
    for (std::size_t i = 0; i < ys.size(); ++i) out << i + 1 << ',' << to_string(ys[i]) << '\n';
    return;
  }
  out << '[';
  for (std::size_t i = 0; i < ys.size(); ++i) out << (i ? ", " : "") << to_string(ys[i]);
  out << "]\n";
}

void run_bridge(const Options& o, std::ostream& out) {
  require(o.indices.empty() != o.value.empty(), "give exactly one of --indices or --value");
  if (!o.indices.empty()) {
    require(o.count > 0, "--count must be positive");
    const auto ks = parse_list<std::size_t>(o.indices, "--indices");
    out << render_digits(number_from_indices(ks, o.count, o.terminated), o.wrap) << '\n';
    return;
  }
  const auto ks = indices_from_number(DigitStream::of(parse_algebraic(o.value)), o.count, o.search);
  out << '[';
  for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? ", " : "") << ks[i];
  out << "]\n";
}

void run_omega(const Options& o, std::ostream& out) {
  require(!o.poly.empty(), "--poly is required");
  const DiophantineInstance f = DiophantineInstance::parse(o.poly);
  if (!o.param_n.empty()) {
    const Integer N = parse_integer(o.param_n);
    if (o.cap > 0) {
      const auto m = stabilization_bound(f, N, o.cap);
      out << "M_N=" << (m ? std::to_string(*m) : std::string("none")) << '\n';
      return;
    }
    require(o.bound > 0, "--bound or --cap is required with --param-N");
    const auto r = bounded_bit(f, o.bound, N);
    out << "A=" << (r.bit ? 1 : 0);
    if (r.bit) {
      out << " witness=(";
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << to_string(r.witness[i]);
      out << ')';
    }
    out << '\n';
    return;
  }
  require(o.bound > 0, "--bound is required");
  out << "omega=" << render_dyadic(omega_approx(f, o.bound)) << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Definable relations, quantifier elimination and digit constructions over the reals", "dforge"};
  app.require_subcommand(1);
  Options o;

  const auto gens = [&](CLI::App* c) { c->add_option("--generators", o.generators, "Comma-separated add,mul,leq,nat"); };
  const auto fmt = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format)->check(CLI::IsMember(std::move(allowed)));
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the first terms of the enumeration");
  gens(enumerate_cmd);
  enumerate_cmd->add_option("--count", o.count)->required();
  fmt(enumerate_cmd, {"text", "csv"});

  auto* instructions_cmd = app.add_subcommand("instructions", "Instruction 4-tuples of the enumeration");
  gens(instructions_cmd);
  instructions_cmd->add_option("--count", o.count);
  instructions_cmd->add_option("--arities", o.arities, "One block over these arities instead");
  instructions_cmd->add_option("--format", o.instruction_format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* boundaries_cmd = app.add_subcommand("boundaries", "Block boundaries k_1..k_n");
  gens(boundaries_cmd);
  boundaries_cmd->add_option("--blocks", o.blocks);
  fmt(boundaries_cmd, {"text", "csv"});

  auto* decide_cmd = app.add_subcommand("decide", "Truth of a closed formula");
  auto* eliminate_cmd = app.add_subcommand("eliminate", "Quantifier-free equivalent");
  auto* describe_cmd = app.add_subcommand("describe", "Points and intervals of a one-variable formula");
  for (auto* c : {decide_cmd, eliminate_cmd, describe_cmd}) {
    c->add_option("--formula", o.formula);
    c->add_option("--term", o.term);
  }

  auto* digits_cmd = app.add_subcommand("digits", "Decimal digits of a number in (0,1)");
  digits_cmd->add_option("--value", o.value, "p/q or alg poly=\"...\" interval=(lo,hi)");
  digits_cmd->add_option("--formula", o.formula, "Formula defining a single number");
  digits_cmd->add_option("--count", o.count)->required();
  digits_cmd->add_option("--wrap", o.wrap);

  auto* interleave_cmd = app.add_subcommand("interleave", "Interleave the digits of a sequence");
  interleave_cmd->add_option("--values", o.values, "[a, b, c]")->required();
  interleave_cmd->add_option("--count", o.count, "Emit this many digits instead of an exact value");
  interleave_cmd->add_flag("--w", o.w, "Apply h to every entry first");
  interleave_cmd->add_option("--wrap", o.wrap);

  auto* deinterleave_cmd = app.add_subcommand("deinterleave", "Split a number into m digit streams");
  deinterleave_cmd->add_option("--value", o.value)->required();
  deinterleave_cmd->add_option("--m", o.m)->check(CLI::PositiveNumber);
  deinterleave_cmd->add_option("--count", o.count);
  deinterleave_cmd->add_flag("--w", o.w, "Apply the inverse of h to every stream");

  auto* diagonal_cmd = app.add_subcommand("diagonal", "Diagonal digits against a number stream");
  gens(diagonal_cmd);
  diagonal_cmd->add_option("--count", o.count);
  diagonal_cmd->add_flag("--curated", o.curated, "Use 0, 1, 355/113, sqrt 2, golden mean");

  auto* overtake_cmd = app.add_subcommand("overtake", "Overtaking sequence of a table");
  overtake_cmd->add_option("--table", o.table)->required();
  overtake_cmd->add_option("--count", o.count);
  fmt(overtake_cmd, {"text", "csv"});

  auto* bridge_cmd = app.add_subcommand("bridge", "Index sequences and numbers sum 10^-k");
  bridge_cmd->add_option("--indices", o.indices);
  bridge_cmd->add_option("--value", o.value);
  bridge_cmd->add_option("--count", o.count);
  bridge_cmd->add_option("--search", o.search, "Digits to inspect");
  bridge_cmd->add_flag("--terminated", o.terminated, "The index list is complete");
  bridge_cmd->add_option("--wrap", o.wrap);

  auto* omega_cmd = app.add_subcommand("omega", "Bounded Diophantine search");
  omega_cmd->add_option("--poly", o.poly, "Polynomial in N and search variables")->required();
  omega_cmd->add_option("--param-N", o.param_n);
  omega_cmd->add_option("--bound", o.bound, "M");
  omega_cmd->add_option("--cap", o.cap);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*enumerate_cmd) run_enumerate(o, out);
    if (*instructions_cmd) {
      require(o.count > 0 || !o.arities.empty(), "give --count or --arities");
      run_instructions(o, out);
    }
    if (*boundaries_cmd) run_boundaries(o, out);
    if (*decide_cmd) run_decide(o, out);
    if (*eliminate_cmd) run_eliminate(o, out);
    if (*describe_cmd) run_describe(o, out);
    if (*digits_cmd) run_digits(o, out);
    if (*interleave_cmd) run_interleave(o, out);
    if (*deinterleave_cmd) run_deinterleave(o, out);
    if (*diagonal_cmd) run_diagonal(o, out);
    if (*overtake_cmd) run_overtake(o, out);
    if (*bridge_cmd) run_bridge(o, out);
    if (*omega_cmd) run_omega(o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dforge::cli

#include "dforge/enumerator.hpp"

#include <map>

#include "dforge/error.hpp"

namespace dforge {

std::string to_string(const Instruction& ins) {
  return "(" + std::to_string(ins.opcode) + "," + std::to_string(ins.a) + "," + std::to_string(ins.b) + "," +
         std::to_string(ins.arity) + ")";
}

void for_each_block_instruction(const std::vector<unsigned>& arities,
                                const std::function<bool(const Instruction&)>& sink) {
  const std::size_t n = arities.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!sink({1, i + 1, 0, arities[i]})) return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (arities[i] == arities[j] && !sink({2, i + 1, j + 1, arities[i]})) return;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned p = 1; p < arities[i]; ++p) {
      if (!sink({3, i + 1, p, arities[i]})) return;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!sink({4, i + 1, 0, arities[i] + 1})) return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (arities[i] >= 2 && !sink({5, i + 1, 0, arities[i] - 1})) return;
  }
}

std::vector<Instruction> instructions_from_arities(const std::vector<unsigned>& arities) {
  for (unsigned a : arities) {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "arities must be at least 1");
  }
  std::vector<Instruction> out;
  for_each_block_instruction(arities, [&](const Instruction& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

std::vector<Instruction> encode_instructions(const std::vector<GeneratorKind>& generators, std::size_t count) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "at least one generator is required");
  std::vector<Instruction> out;
  std::vector<unsigned> arities;
  for (auto g : generators) {
    if (out.size() == count) return out;
    out.push_back({0, 0, 0, generator_arity(g)});
    arities.push_back(generator_arity(g));
  }
  while (out.size() < count) {
    const std::vector<unsigned> prior = arities;
    for_each_block_instruction(prior, [&](const Instruction& i) {
      out.push_back(i);
      arities.push_back(i.arity);
      return out.size() < count;
    });
  }
  return out;
}

std::vector<RelationTerm> terms_from_instructions(const std::vector<GeneratorKind>& generators,
                                                  const std::vector<Instruction>& instructions) {
  std::vector<RelationTerm> out;
  out.reserve(instructions.size());
  std::size_t next_generator = 0;
  const auto operand = [&](std::size_t k, std::size_t pos) -> const RelationTerm& {
    if (k == 0 || k > out.size()) {
      throw Error(ErrorCode::InvalidArgument, "instruction " + std::to_string(pos) + " refers to a later relation");
    }
    return out[k - 1];
  };
  for (const auto& ins : instructions) {
    const std::size_t pos = out.size() + 1;
    switch (ins.opcode) {
      case 0:
        if (next_generator >= generators.size()) throw Error(ErrorCode::InvalidArgument, "too many given relations");
        out.push_back(RelationTerm::base(generators[next_generator++]));
        break;
      case 1: out.push_back(RelationTerm::complement(operand(ins.a, pos))); break;
      case 2: out.push_back(RelationTerm::unite(operand(ins.a, pos), operand(ins.b, pos))); break;
      case 3: out.push_back(RelationTerm::swap(operand(ins.a, pos), static_cast<unsigned>(ins.b))); break;
      case 4: out.push_back(RelationTerm::lift(operand(ins.a, pos))); break;
      case 5: out.push_back(RelationTerm::project(operand(ins.a, pos))); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown opcode " + std::to_string(ins.opcode));
    }
    if (out.back().arity() != ins.arity) {
      throw Error(ErrorCode::ArityMismatch, "instruction " + std::to_string(pos) + " declares arity " +
                                                std::to_string(ins.arity) + " but builds " +
                                                std::to_string(out.back().arity()));
    }
  }
  return out;
}

std::vector<RelationTerm> enumerate(const std::vector<GeneratorKind>& generators, std::size_t count) {
  return terms_from_instructions(generators, encode_instructions(generators, count));
}

std::vector<Integer> block_boundaries(const std::vector<GeneratorKind>& generators, std::size_t blocks) {
  if (blocks == 0) throw Error(ErrorCode::InvalidArgument, "blocks must be at least 1");
  std::map<unsigned, Integer> counts;
  for (auto g : generators) counts[generator_arity(g)] += 1;
  std::vector<Integer> out{Integer(static_cast<unsigned long>(generators.size()))};
  while (out.size() < blocks) {
    const Integer k = out.back();
    std::map<unsigned, Integer> fresh;
    Integer added = 0;
    for (const auto& [a, m] : counts) {
      const Integer unions = m * (m - 1) / 2;
      const Integer swaps = m * (a - 1);
      fresh[a] += m + unions + swaps;
      fresh[a + 1] += m;
      added += m + unions + swaps + m;
      if (a >= 2) {
        fresh[a - 1] += m;
        added += m;
      }
    }
    for (const auto& [a, m] : fresh) counts[a] += m;
    out.push_back(k + added);
  }
  return out;
}

std::string instructions_csv(const std::vector<Instruction>& instructions, std::size_t first_k) {
  std::string out = "#definability-forge instructions v1\n";
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto& ins = instructions[i];
    out += std::to_string(first_k + i) + "," + std::to_string(ins.opcode) + "," + std::to_string(ins.a) + "," +
           std::to_string(ins.b) + "," + std::to_string(ins.arity) + "\n";
  }
  return out;
}

}  // namespace dforge

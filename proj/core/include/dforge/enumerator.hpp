#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dforge/rational.hpp"
#include "dforge/term.hpp"

namespace dforge {

/// One enumeration step: opcode 0 given, 1 complement, 2 union, 3 permutation
/// (adjacent transposition at position b), 4 set multiplication, 5 projection.
/// Operand indices are 1-based positions in the stream.
struct Instruction {
  unsigned opcode = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  unsigned arity = 0;
  friend bool operator==(const Instruction&, const Instruction&) = default;
};

std::string to_string(const Instruction& ins);

/// Instructions of one block over relations with the given arities, operand
/// indices referring to positions in `arities`. Stops early once `sink`
/// returns false.
void for_each_block_instruction(const std::vector<unsigned>& arities,
                                const std::function<bool(const Instruction&)>& sink);
std::vector<Instruction> instructions_from_arities(const std::vector<unsigned>& arities);

/// The first `count` instructions of the stream generated from `generators`.
std::vector<Instruction> encode_instructions(const std::vector<GeneratorKind>& generators, std::size_t count);

/// Terms described by an instruction stream.
std::vector<RelationTerm> terms_from_instructions(const std::vector<GeneratorKind>& generators,
                                                  const std::vector<Instruction>& instructions);

/// The first `count` terms of the stream.
std::vector<RelationTerm> enumerate(const std::vector<GeneratorKind>& generators, std::size_t count);

/// k_1, ..., k_blocks, computed from arity counts alone.
std::vector<Integer> block_boundaries(const std::vector<GeneratorKind>& generators, std::size_t blocks);

/// `#definability-forge instructions v1` header, then `k,opcode,a,b,arity`
/// rows numbered from `first_k`.
std::string instructions_csv(const std::vector<Instruction>& instructions, std::size_t first_k = 1);

}  // namespace dforge

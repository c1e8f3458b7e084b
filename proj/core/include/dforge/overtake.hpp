#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dforge/digits.hpp"
#include "dforge/rational.hpp"

namespace dforge {

/// Square table x_{i,j} of naturals: i is the element index, j the sequence index.
class SequenceTable {
 public:
  /// rows[i-1][j-1] = x_{i,j}. Throws InvalidArgument on ragged or negative input.
  explicit SequenceTable(std::vector<std::vector<Integer>> rows);
  /// One row per line, comma separated; blank lines and `#` comments skipped.
  static SequenceTable from_csv(std::string_view text);

  /// Largest n with an n x n leading subtable.
  std::size_t n_max() const noexcept;
  const Integer& at(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// y_n = n + max_{i,j <= n} x_{i,j}. Throws OutOfRange unless 1 <= n <= n_max.
Integer overtake_value(const SequenceTable& t, std::size_t n);
std::vector<Integer> overtake_sequence(const SequenceTable& t, std::size_t n);

/// Strictly increasing positive indices. Throws InvalidArgument otherwise.
void check_index_sequence(const std::vector<std::size_t>& ks);

/// Digits 1..N of sum 10^-k over ks. Unless `terminated`, the list must reach
/// position N (InsufficientIndices otherwise).
std::vector<int> number_from_indices(const std::vector<std::size_t>& ks, std::size_t N, bool terminated = false);
/// The exact value of sum 10^-k over a finite list.
Rational number_value(const std::vector<std::size_t>& ks);

/// Positions of the first `count` ones among digits 1..search_bound. Throws
/// SearchBoundExceeded when fewer are found, InvalidArgument on a digit
/// outside {0,1}.
std::vector<std::size_t> indices_from_number(const DigitStream& d, std::size_t count, std::size_t search_bound);

}  // namespace dforge

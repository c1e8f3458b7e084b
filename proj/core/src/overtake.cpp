#include "dforge/overtake.hpp"

#include <algorithm>
#include <sstream>

#include "dforge/error.hpp"

namespace dforge {

SequenceTable::SequenceTable(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != rows_.front().size()) {
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(i + 1) + " has " +
                                                  std::to_string(rows_[i].size()) + " entries, expected " +
                                                  std::to_string(rows_.front().size()));
    }
    for (const auto& v : rows_[i]) {
      if (sgn(v) < 0) throw Error(ErrorCode::InvalidArgument, "table entries must be naturals");
    }
  }
}

SequenceTable SequenceTable::from_csv(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<Integer> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      const std::string v = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
      if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(lineno) + ": '" + v + "' is not a natural");
      }
      row.emplace_back(v, 10);
    }
    rows.push_back(std::move(row));
  }
  return SequenceTable(std::move(rows));
}

std::size_t SequenceTable::n_max() const noexcept {
  return rows_.empty() ? 0 : std::min(rows_.size(), rows_.front().size());
}

const Integer& SequenceTable::at(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > rows_.size() || j > rows_.front().size()) {
    throw Error(ErrorCode::OutOfRange, "no entry x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  return rows_[i - 1][j - 1];
}

Integer overtake_value(const SequenceTable& t, std::size_t n) {
  if (n == 0 || n > t.n_max()) {
    throw Error(ErrorCode::OutOfRange,
                "n=" + std::to_string(n) + " outside 1.." + std::to_string(t.n_max()) + " for this table");
  }
  Integer m = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) m = std::max(m, t.at(i, j));
  }
  return m + static_cast<unsigned long>(n);
}

std::vector<Integer> overtake_sequence(const SequenceTable& t, std::size_t n) {
  if (n > t.n_max()) throw Error(ErrorCode::OutOfRange, "n exceeds the table size");
  std::vector<Integer> out;
  Integer m = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    // Only the new row and column enter the running maximum.
    for (std::size_t i = 1; i <= k; ++i) m = std::max({m, t.at(i, k), t.at(k, i)});
    out.push_back(m + static_cast<unsigned long>(k));
  }
  return out;
}

void check_index_sequence(const std::vector<std::size_t>& ks) {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] == 0) throw Error(ErrorCode::InvalidArgument, "indices start at 1");
    if (i > 0 && ks[i] <= ks[i - 1]) throw Error(ErrorCode::InvalidArgument, "indices must be strictly increasing");
  }
}

std::vector<int> number_from_indices(const std::vector<std::size_t>& ks, std::size_t N, bool terminated) {
  check_index_sequence(ks);
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "N must be at least 1");
  if (!terminated && (ks.empty() || ks.back() < N)) {
    throw Error(ErrorCode::InsufficientIndices, "indices cover positions up to " +
                                                    std::to_string(ks.empty() ? 0 : ks.back()) + ", need " +
                                                    std::to_string(N));
  }
  std::vector<int> out(N, 0);
  for (auto k : ks) {
    if (k <= N) out[k - 1] = 1;
  }
  return out;
}

Rational number_value(const std::vector<std::size_t>& ks) {
  check_index_sequence(ks);
  Rational v = 0;
  for (auto k : ks) v += Rational(1, pow10(k));
  v.canonicalize();
  return v;
}

std::vector<std::size_t> indices_from_number(const DigitStream& d, std::size_t count, std::size_t search_bound) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= search_bound && out.size() < count; ++k) {
    const int digit = d.digit(k);
    if (digit != 0 && digit != 1) {
      throw Error(ErrorCode::InvalidArgument, "digit " + std::to_string(k) + " is " + std::to_string(digit) +
                                                  ", expected 0 or 1");
    }
    if (digit == 1) out.push_back(k);
  }
  if (out.size() < count) {
    throw Error(ErrorCode::SearchBoundExceeded, "found " + std::to_string(out.size()) + " of " +
                                                    std::to_string(count) + " ones within " +
                                                    std::to_string(search_bound) + " digits");
  }
  return out;
}

}  // namespace dforge

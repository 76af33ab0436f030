// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep {

// Dense 0/1 matrix with bit-packed rows. Rows and columns are 1-based
// throughout, matching the one-line permutation notation used in reports
// (the order "4231" places input column 4 first).
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  // Parses rows joined by '/', e.g. "1010/0110". Throws ParseError on
  // characters outside {0,1} or ragged rows.
  static BinaryMatrix parse_rowspec(std::string_view spec);
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool entry(std::size_t row, std::size_t col) const;
  void set_entry(std::size_t row, std::size_t col, bool value);

  std::string row_string(std::size_t row) const;
  std::string rowspec() const;

  std::size_t row_weight(std::size_t row) const;
  bool row_all_ones(std::size_t row) const;
  bool row_all_zeros(std::size_t row) const;
  bool rows_equal(std::size_t r1, std::size_t r2) const;
  bool cols_equal(std::size_t c1, std::size_t c2) const;

  // Row packed into a word, column j at bit j-1. Requires cols() <= 64.
  std::uint64_t row_bits(std::size_t row) const;

  BinaryMatrix transposed() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b);

 private:
  std::size_t words_per_row() const { return (cols_ + 63) / 64; }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Upper bound on rows*cols of any matrix produced by iterate_morphism.
inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 26;

// k-fold substitution 0 -> a, 1 -> b starting from the 1x1 zero matrix.
// a and b must have equal, nonzero dimensions. Throws BudgetError when an
// intermediate matrix would exceed cell_budget cells.
BinaryMatrix iterate_morphism(const BinaryMatrix& a, const BinaryMatrix& b,
                              unsigned k,
                              std::uint64_t cell_budget = kDefaultCellBudget);

// Reorders columns: result(i, j) = m(i, order[j-1]). order must be a
// permutation of 1..cols.
BinaryMatrix apply_column_order(const BinaryMatrix& m,
                                const std::vector<std::size_t>& order);
// Reorders rows: result(i, j) = m(order[i-1], j).
BinaryMatrix apply_row_order(const BinaryMatrix& m,
                             const std::vector<std::size_t>& order);

// Rows row_ids and columns col_ids of m, both 1-based and strictly
// increasing.
BinaryMatrix submatrix(const BinaryMatrix& m,
                       const std::vector<std::size_t>& row_ids,
                       const std::vector<std::size_t>& col_ids);

}  // namespace wordrep

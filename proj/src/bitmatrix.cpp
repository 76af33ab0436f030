// SPDX-License-Identifier: MIT
#include "bitmatrix.hpp"

#include <bit>
#include <stdexcept>

#include "errors.hpp"

namespace wordrep {

namespace {

void check_index(std::size_t value, std::size_t limit, const char* what) {
  if (value < 1 || value > limit) {
    throw std::out_of_range(std::string(what) + " index " +
                            std::to_string(value) + " outside 1.." +
                            std::to_string(limit));
  }
}

void check_permutation(const std::vector<std::size_t>& order,
                       std::size_t n, const char* what) {
  if (order.size() != n) {
    throw std::invalid_argument(std::string(what) + " order has " +
                                std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(n + 1, 0);
  for (std::size_t v : order) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument(std::string(what) +
                                  " order is not a permutation of 1.." +
                                  std::to_string(n));
    }
    seen[v] = 1;
  }
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

BinaryMatrix BinaryMatrix::parse_rowspec(std::string_view spec) {
  std::vector<std::string> rows;
  std::string current;
  for (char c : spec) {
    if (c == '/') {
      rows.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  rows.push_back(current);
  return from_rows(rows);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) {
    return BinaryMatrix();
  }
  const std::size_t cols = rows.front().size();
  if (cols == 0) {
    throw ParseError("matrix row 1 is empty");
  }
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw ParseError("matrix row " + std::to_string(i + 1) + ", column " +
                         std::to_string(j + 1) + ": expected '0' or '1', got '" +
                         std::string(1, c) + "'");
      }
      if (c == '1') {
        m.set_entry(i + 1, j + 1, true);
      }
    }
  }
  return m;
}

bool BinaryMatrix::entry(std::size_t row, std::size_t col) const {
  check_index(row, rows_, "row");
  check_index(col, cols_, "column");
  const std::size_t bit = col - 1;
  return (bits_[(row - 1) * words_per_row() + bit / 64] >> (bit % 64)) & 1u;
}

void BinaryMatrix::set_entry(std::size_t row, std::size_t col, bool value) {
  check_index(row, rows_, "row");
  check_index(col, cols_, "column");
  const std::size_t bit = col - 1;
  std::uint64_t& word = bits_[(row - 1) * words_per_row() + bit / 64];
  const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

std::string BinaryMatrix::row_string(std::size_t row) const {
  check_index(row, rows_, "row");
  std::string s(cols_, '0');
  for (std::size_t j = 1; j <= cols_; ++j) {
    if (entry(row, j)) {
      s[j - 1] = '1';
    }
  }
  return s;
}

std::string BinaryMatrix::rowspec() const {
  std::string s;
  for (std::size_t i = 1; i <= rows_; ++i) {
    if (i > 1) {
      s.push_back('/');
    }
    s += row_string(i);
  }
  return s;
}

std::size_t BinaryMatrix::row_weight(std::size_t row) const {
  check_index(row, rows_, "row");
  std::size_t total = 0;
  const std::size_t w = words_per_row();
  for (std::size_t k = 0; k < w; ++k) {
    total += std::popcount(bits_[(row - 1) * w + k]);
  }
  return total;
}

bool BinaryMatrix::row_all_ones(std::size_t row) const {
  return row_weight(row) == cols_;
}

bool BinaryMatrix::row_all_zeros(std::size_t row) const {
  return row_weight(row) == 0;
}

bool BinaryMatrix::rows_equal(std::size_t r1, std::size_t r2) const {
  check_index(r1, rows_, "row");
  check_index(r2, rows_, "row");
  const std::size_t w = words_per_row();
  for (std::size_t k = 0; k < w; ++k) {
    if (bits_[(r1 - 1) * w + k] != bits_[(r2 - 1) * w + k]) {
      return false;
    }
  }
  return true;
}

bool BinaryMatrix::cols_equal(std::size_t c1, std::size_t c2) const {
  check_index(c1, cols_, "column");
  check_index(c2, cols_, "column");
  for (std::size_t i = 1; i <= rows_; ++i) {
    if (entry(i, c1) != entry(i, c2)) {
      return false;
    }
  }
  return true;
}

std::uint64_t BinaryMatrix::row_bits(std::size_t row) const {
  check_index(row, rows_, "row");
  if (cols_ > 64) {
    throw std::out_of_range("row_bits requires at most 64 columns");
  }
  return bits_[(row - 1) * words_per_row()];
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = 1; j <= cols_; ++j) {
      if (entry(i, j)) {
        t.set_entry(j, i, true);
      }
    }
  }
  return t;
}

bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
}

BinaryMatrix iterate_morphism(const BinaryMatrix& a, const BinaryMatrix& b,
                              unsigned k, std::uint64_t cell_budget) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("substitution blocks must be nonempty");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("substitution blocks must have equal shape");
  }
  BinaryMatrix m(1, 1);
  const std::uint64_t br = a.rows();
  const std::uint64_t bc = a.cols();
  for (unsigned step = 0; step < k; ++step) {
    const std::uint64_t next_rows = m.rows() * br;
    const std::uint64_t next_cols = m.cols() * bc;
    if (next_rows > cell_budget || next_cols > cell_budget ||
        next_rows * next_cols > cell_budget) {
      throw BudgetError("iteration " + std::to_string(step + 1) + " needs " +
                        std::to_string(next_rows) + "x" +
                        std::to_string(next_cols) +
                        " cells, over the budget of " +
                        std::to_string(cell_budget));
    }
    BinaryMatrix next(next_rows, next_cols);
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      for (std::size_t j = 1; j <= m.cols(); ++j) {
        const BinaryMatrix& block = m.entry(i, j) ? b : a;
        for (std::size_t bi = 1; bi <= block.rows(); ++bi) {
          for (std::size_t bj = 1; bj <= block.cols(); ++bj) {
            if (block.entry(bi, bj)) {
              next.set_entry((i - 1) * br + bi, (j - 1) * bc + bj, true);
            }
          }
        }
      }
    }
    m = std::move(next);
  }
  return m;
}

BinaryMatrix apply_column_order(const BinaryMatrix& m,
                                const std::vector<std::size_t>& order) {
  check_permutation(order, m.cols(), "column");
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (m.entry(i, order[j - 1])) {
        out.set_entry(i, j, true);
      }
    }
  }
  return out;
}

BinaryMatrix apply_row_order(const BinaryMatrix& m,
                             const std::vector<std::size_t>& order) {
  check_permutation(order, m.rows(), "row");
  BinaryMatrix out(m.rows(), m.cols());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (m.entry(order[i - 1], j)) {
        out.set_entry(i, j, true);
      }
    }
  }
  return out;
}

BinaryMatrix submatrix(const BinaryMatrix& m,
                       const std::vector<std::size_t>& row_ids,
                       const std::vector<std::size_t>& col_ids) {
  auto check_ids = [](const std::vector<std::size_t>& ids, std::size_t limit,
                      const char* what) {
    std::size_t prev = 0;
    for (std::size_t v : ids) {
      if (v < 1 || v > limit || v <= prev) {
        throw std::invalid_argument(std::string(what) +
                                    " ids must be strictly increasing within "
                                    "1.." + std::to_string(limit));
      }
      prev = v;
    }
  };
  check_ids(row_ids, m.rows(), "row");
  check_ids(col_ids, m.cols(), "column");
  BinaryMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    for (std::size_t j = 0; j < col_ids.size(); ++j) {
      if (m.entry(row_ids[i], col_ids[j])) {
        out.set_entry(i + 1, j + 1, true);
      }
    }
  }
  return out;
}

}  // namespace wordrep

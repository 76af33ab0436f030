// SPDX-License-Identifier: MIT
#include "splitgraph.hpp"

#include <numeric>
#include <stdexcept>

namespace wordrep {

Adjacency::Adjacency(std::size_t order) : matrix_(order, order) {}

bool Adjacency::adjacent(std::size_t u, std::size_t v) const {
  return matrix_.entry(u, v);
}

void Adjacency::add_edge(std::size_t u, std::size_t v) {
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
  matrix_.set_entry(u, v, true);
  matrix_.set_entry(v, u, true);
}

std::size_t Adjacency::degree(std::size_t v) const {
  return matrix_.row_weight(v);
}

std::size_t Adjacency::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 1; v <= order(); ++v) {
    total += degree(v);
  }
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Adjacency::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 1; u <= order(); ++u) {
    for (std::size_t v = u + 1; v <= order(); ++v) {
      if (adjacent(u, v)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

SplitGraph from_matrix(const BinaryMatrix& m) { return SplitGraph{m}; }

Adjacency split_adjacency(const BinaryMatrix& m) {
  const std::size_t n = m.cols();
  Adjacency g(n + m.rows());
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      g.add_edge(u, v);
    }
  }
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (m.entry(i, j)) {
        g.add_edge(n + i, j);
      }
    }
  }
  return g;
}

namespace {

// One normalization step: deletes row `row` and appends a zero column.
void drop_all_one_row(BinaryMatrix& m, std::vector<std::size_t>& row_ids,
                      std::vector<std::size_t>& col_ids, std::size_t row) {
  BinaryMatrix next(m.rows() - 1, m.cols() + 1);
  std::size_t out = 0;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (i == row) {
      continue;
    }
    ++out;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (m.entry(i, j)) {
        next.set_entry(out, j, true);
      }
    }
  }
  m = std::move(next);
  row_ids.erase(row_ids.begin() + (row - 1));
  col_ids.push_back(0);
}

// One pass of the degree and duplicate rules. Returns true when something
// was removed.
bool reduce_pass(BinaryMatrix& m, std::vector<std::size_t>& row_ids,
                 std::vector<std::size_t>& col_ids) {
  std::vector<std::size_t> keep_rows;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (m.row_weight(i) <= 1) {
      continue;
    }
    bool duplicate = false;
    for (std::size_t prev : keep_rows) {
      if (m.rows_equal(prev, i)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      keep_rows.push_back(i);
    }
  }
  std::vector<std::size_t> keep_cols;
  for (std::size_t j = 1; j <= m.cols(); ++j) {
    bool duplicate = false;
    for (std::size_t prev : keep_cols) {
      if (m.cols_equal(prev, j)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      keep_cols.push_back(j);
    }
  }
  if (keep_rows.size() == m.rows() && keep_cols.size() == m.cols()) {
    return false;
  }
  std::vector<std::size_t> next_row_ids, next_col_ids;
  for (std::size_t i : keep_rows) {
    next_row_ids.push_back(row_ids[i - 1]);
  }
  for (std::size_t j : keep_cols) {
    next_col_ids.push_back(col_ids[j - 1]);
  }
  m = submatrix(m, keep_rows, keep_cols);
  row_ids = std::move(next_row_ids);
  col_ids = std::move(next_col_ids);
  return true;
}

std::size_t find_all_one_row(const BinaryMatrix& m) {
  if (m.cols() == 0) {
    return 0;
  }
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (m.row_all_ones(i)) {
      return i;
    }
  }
  return 0;
}

Reduction run(const BinaryMatrix& m, bool with_normalization) {
  BinaryMatrix work = m;
  std::vector<std::size_t> row_ids(m.rows()), col_ids(m.cols());
  std::iota(row_ids.begin(), row_ids.end(), 1);
  std::iota(col_ids.begin(), col_ids.end(), 1);
  for (;;) {
    if (with_normalization) {
      if (std::size_t row = find_all_one_row(work); row != 0) {
        drop_all_one_row(work, row_ids, col_ids, row);
        continue;
      }
    }
    if (!reduce_pass(work, row_ids, col_ids)) {
      break;
    }
  }
  return Reduction{std::move(work), std::move(row_ids), std::move(col_ids)};
}

}  // namespace

BinaryMatrix normalize_all_one_rows(BinaryMatrix m) {
  std::vector<std::size_t> row_ids(m.rows()), col_ids(m.cols());
  std::iota(row_ids.begin(), row_ids.end(), 1);
  std::iota(col_ids.begin(), col_ids.end(), 1);
  while (std::size_t row = find_all_one_row(m)) {
    drop_all_one_row(m, row_ids, col_ids, row);
  }
  return m;
}

Reduction reduce(const BinaryMatrix& m) { return run(m, false); }

Reduction normalize_and_reduce(const BinaryMatrix& m) { return run(m, true); }

}  // namespace wordrep

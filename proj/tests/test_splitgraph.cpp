// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "bitmatrix.hpp"
#include "semitransitive.hpp"
#include "splitgraph.hpp"

using namespace wordrep;

namespace {

BinaryMatrix mat(const char* spec) { return BinaryMatrix::parse_rowspec(spec); }

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Every m x n matrix enumerated by the binary digits of a counter.
BinaryMatrix matrix_from_index(unsigned index, std::size_t rows,
                               std::size_t cols) {
  BinaryMatrix m(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      if (index & 1u) m.set_entry(i, j, true);
      index >>= 1;
    }
  return m;
}

bool oracle_representable(const BinaryMatrix& m) {
  return exists_semi_transitive(split_adjacency(m), 64).has_value();
}

}  // namespace

TEST_CASE("adjacency basics") {
  Adjacency g(4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(1, 3);
  g.add_edge(4, 2);
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 1));
  CHECK(g.adjacent(2, 4));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(3) == 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == EdgeList{{1, 3}, {2, 4}});

  Adjacency h(4);
  h.add_edge(2, 4);
  h.add_edge(3, 1);
  CHECK(g == h);
}

TEST_CASE("split graph of the worked 4x4 example") {
  const BinaryMatrix m = mat("1010/0110/1000/0001");
  const SplitGraph g = from_matrix(m);
  CHECK(g.clique_size() == 4);
  CHECK(g.indep_size() == 4);
  CHECK(g.order() == 8);
  CHECK(g.bipartite == m);

  const Adjacency adj = split_adjacency(m);
  CHECK(adj.matrix() ==
        mat("01111010/10110100/11011100/11100001/"
            "10100000/01100000/10000000/00010000"));
}

TEST_CASE("split adjacency structure") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const BinaryMatrix m = matrix_from_index(rng(), rows, cols);
    const Adjacency g = split_adjacency(m);
    CHECK(g.order() == rows + cols);
    for (std::size_t u = 1; u <= g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (std::size_t v = 1; v <= g.order(); ++v) {
        if (u == v) continue;
        bool expected;
        if (u <= cols && v <= cols)
          expected = true;  // clique
        else if (u > cols && v > cols)
          expected = false;  // independent set
        else {
          const std::size_t row = std::max(u, v) - cols;
          const std::size_t col = std::min(u, v);
          expected = m.entry(row, col);
        }
        CHECK(g.adjacent(u, v) == expected);
      }
    }
  }
}

TEST_CASE("full rows are absorbed into the clique") {
  CHECK(normalize_all_one_rows(mat("11/10")) == mat("100"));
  CHECK(normalize_all_one_rows(mat("11/11")) == mat("110"));
  CHECK(normalize_all_one_rows(mat("10/01")) == mat("10/01"));

  // Absorbing a full row relabels the graph without changing it.
  CHECK(split_adjacency(mat("11/10")).edges() ==
        split_adjacency(mat("100")).edges());
  CHECK(split_adjacency(mat("11/11")).edges() ==
        split_adjacency(mat("110")).edges());

  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const BinaryMatrix m = matrix_from_index(rng(), 1 + rng() % 3,
                                             1 + rng() % 3);
    const BinaryMatrix n = normalize_all_one_rows(m);
    for (std::size_t i = 1; i <= n.rows(); ++i) CHECK_FALSE(n.row_all_ones(i));
    CHECK(n.rows() + n.cols() == m.rows() + m.cols());
    CHECK(oracle_representable(m) == oracle_representable(n));
  }
}

TEST_CASE("reduction drops light rows and duplicates") {
  const Reduction r = reduce(mat("1010/0110/1010/0000"));
  CHECK(r.matrix == mat("1010/0110"));
  CHECK(r.row_origin == std::vector<std::size_t>{1, 2});
  CHECK(r.col_origin == std::vector<std::size_t>{1, 2, 3, 4});

  const Reduction dup_cols = reduce(mat("110011/101101"));
  CHECK(dup_cols.matrix == mat("110/101"));
  CHECK(dup_cols.col_origin == std::vector<std::size_t>{1, 2, 3});

  // With no surviving rows, every column looks alike and one remains.
  const Reduction empty = reduce(mat("100/010"));
  CHECK(empty.matrix.rows() == 0);
  CHECK(empty.matrix.cols() == 1);
  CHECK(empty.row_origin.empty());
  CHECK(empty.col_origin == std::vector<std::size_t>{1});
}

TEST_CASE("reduction origins trace back to the input") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const BinaryMatrix m = matrix_from_index(rng(), rows, cols);
    const Reduction r = reduce(m);
    CHECK(r.row_origin.size() == r.matrix.rows());
    CHECK(r.col_origin.size() == r.matrix.cols());
    for (std::size_t i = 1; i <= r.matrix.rows(); ++i) {
      CHECK(r.matrix.row_weight(i) >= 2);
      for (std::size_t j = 1; j <= r.matrix.cols(); ++j)
        CHECK(r.matrix.entry(i, j) ==
              m.entry(r.row_origin[i - 1], r.col_origin[j - 1]));
    }
    for (std::size_t i = 1; i <= r.matrix.rows(); ++i)
      for (std::size_t j = i + 1; j <= r.matrix.rows(); ++j)
        CHECK_FALSE(r.matrix.rows_equal(i, j));
    for (std::size_t i = 1; i <= r.matrix.cols(); ++i)
      for (std::size_t j = i + 1; j <= r.matrix.cols(); ++j)
        CHECK_FALSE(r.matrix.cols_equal(i, j));
  }
}

TEST_CASE("reduction preserves representability of the split graph") {
  // Exhaustive over all 3x3 matrices: removing light rows and duplicates
  // never changes the answer of the orientation search.
  for (unsigned index = 0; index < 512; ++index) {
    const BinaryMatrix m = matrix_from_index(index, 3, 3);
    CHECK(oracle_representable(m) == oracle_representable(reduce(m).matrix));
  }
}

TEST_CASE("normalize_and_reduce reaches a stable matrix") {
  const Reduction degenerate = normalize_and_reduce(mat("1100011/1110011"));
  CHECK(degenerate.matrix.rows() == 0);
  CHECK(degenerate.matrix.cols() == 1);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + rng() % 3;
    const std::size_t cols = 1 + rng() % 3;
    const BinaryMatrix m = matrix_from_index(rng(), rows, cols);
    const Reduction r = normalize_and_reduce(m);
    for (std::size_t i = 1; i <= r.matrix.rows(); ++i) {
      CHECK_FALSE(r.matrix.row_all_ones(i));
      CHECK(r.matrix.row_weight(i) >= 2);
    }
    // Entries at surviving positions trace back; appended columns are zero.
    for (std::size_t j = 1; j <= r.matrix.cols(); ++j) {
      if (r.col_origin[j - 1] == 0) {
        for (std::size_t i = 1; i <= r.matrix.rows(); ++i)
          CHECK_FALSE(r.matrix.entry(i, j));
      } else {
        for (std::size_t i = 1; i <= r.matrix.rows(); ++i)
          CHECK(r.matrix.entry(i, j) ==
                m.entry(r.row_origin[i - 1], r.col_origin[j - 1]));
      }
    }
    CHECK(oracle_representable(m) == oracle_representable(r.matrix));
    // A second pass changes nothing.
    const Reduction again = normalize_and_reduce(r.matrix);
    CHECK(again.matrix == r.matrix);
  }
}

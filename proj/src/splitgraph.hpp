// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bitmatrix.hpp"

namespace wordrep {

// Simple undirected graph on vertices 1..order with an adjacency-matrix
// backing store.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(std::size_t order);

  std::size_t order() const { return matrix_.rows(); }
  bool adjacent(std::size_t u, std::size_t v) const;
  void add_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  const BinaryMatrix& matrix() const { return matrix_; }

  friend bool operator==(const Adjacency& a, const Adjacency& b) = default;

 private:
  BinaryMatrix matrix_;
};

// Split graph G(M): columns of M are the clique vertices 1..n, rows of M
// are the independent vertices n+1..n+m, and independent vertex n+i is
// adjacent to clique vertex j iff M(i, j) = 1.
struct SplitGraph {
  BinaryMatrix bipartite;

  std::size_t clique_size() const { return bipartite.cols(); }
  std::size_t indep_size() const { return bipartite.rows(); }
  std::size_t order() const { return clique_size() + indep_size(); }
};

SplitGraph from_matrix(const BinaryMatrix& m);

// The full adjacency of G(M), order cols + rows.
Adjacency split_adjacency(const BinaryMatrix& m);

// While the matrix has an all-ones row, removes one and appends an all-zeros
// column; the split graph is unchanged up to isomorphism (the removed
// independent vertex joins the clique). The result has no all-ones row.
BinaryMatrix normalize_all_one_rows(BinaryMatrix m);

// A reduced matrix together with the surviving indices of the input matrix.
// col_origin entries of 0 mark columns appended by all-ones-row
// normalization.
struct Reduction {
  BinaryMatrix matrix;
  std::vector<std::size_t> row_origin;
  std::vector<std::size_t> col_origin;
};

// Removes independent vertices of degree 0 or 1, duplicate rows and
// duplicate columns until a fixed point. Word-representability of the split
// graph is preserved.
Reduction reduce(const BinaryMatrix& m);

// Interleaves normalize_all_one_rows with reduce until neither applies.
Reduction normalize_and_reduce(const BinaryMatrix& m);

}  // namespace wordrep

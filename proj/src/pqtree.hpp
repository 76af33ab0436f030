// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace wordrep {

// PQ-tree over leaves 1..n. The frontiers of the trees reachable by
// permuting the children of P nodes and reversing the children of Q nodes
// form a set of leaf orders; reduce(s) restricts that set to the orders in
// which the leaves of s appear consecutively.
class PQTree {
 public:
  explicit PQTree(std::size_t leaves);
  PQTree(PQTree&&) noexcept = default;
  PQTree& operator=(PQTree&&) noexcept = default;
  ~PQTree();

  // Restricts to orders keeping s consecutive. Returns false when no such
  // order remains; the tree is unusable afterwards.
  bool reduce(const std::vector<std::size_t>& s);

  // One represented order: the leaves in tree order.
  std::vector<std::size_t> frontier() const;

  bool valid() const { return valid_; }
  std::size_t leaves() const { return leaves_; }

  struct Node;

 private:
  std::size_t leaves_ = 0;
  bool valid_ = true;
  std::unique_ptr<Node> root_;
};

}  // namespace wordrep

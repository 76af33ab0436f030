// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bitmatrix.hpp"
#include "splitgraph.hpp"

namespace wordrep {

// An orientation of a simple graph: every edge {u, v} is directed one way.
class Orientation {
 public:
  // forward[i] orients edges()[i] = (u, v) with u < v as u -> v when true,
  // v -> u when false.
  Orientation(Adjacency graph, std::vector<bool> forward);

  const Adjacency& graph() const { return graph_; }
  bool oriented_towards(std::size_t u, std::size_t v) const;
  // Directed edges (tail, head), in the order of graph().edges().
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

 private:
  Adjacency graph_;
  BinaryMatrix towards_;  // towards_(u, v) = 1 iff the edge runs u -> v
};

bool is_acyclic(const Orientation& o);

// Acyclic and shortcut-free: along every directed path whose endpoints are
// adjacent, all vertex pairs are adjacent.
bool is_semi_transitive(const Orientation& o);

inline constexpr std::size_t kDefaultEdgeBudget = 24;

// Searches for a semi-transitive orientation by backtracking over edge
// directions, pruning on cycles and shortcuts. Returns the lexicographically
// first witness over the edge list of g.edges() with "forward" tried before
// "backward", or nullopt if none exists. Throws BudgetError when g has more
// than edge_budget edges.
std::optional<Orientation> exists_semi_transitive(
    const Adjacency& g, std::size_t edge_budget = kDefaultEdgeBudget);

// Independent-vertex classes relative to the clique's unique topological
// order p_1 -> ... -> p_n: type A vertices direct all their clique edges
// outward and cover an interval of positions, type B direct them all inward
// and cover an interval, type C receive from a prefix and send to a suffix.
enum class VertexClass { kTypeA, kTypeB, kTypeC };

// Classifies independent vertex v (cols(m) < v <= cols(m)+rows(m)) of the
// split graph of m under o. Requires the clique tournament to be acyclic.
// Returns nullopt when v fits no class.
std::optional<VertexClass> classify_vertex(const BinaryMatrix& m,
                                           const Orientation& o,
                                           std::size_t v);

// Checks the split-graph characterization of semi-transitivity for an
// orientation of split_adjacency(m): the clique is oriented acyclically,
// every independent vertex falls into class A, B or C, and no wrap pair is
// blocked by a vertex covering both of its boundary positions. Agrees with
// is_semi_transitive on split graphs.
bool check_split_orientation(const BinaryMatrix& m, const Orientation& o);

}  // namespace wordrep

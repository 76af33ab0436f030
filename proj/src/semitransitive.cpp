// SPDX-License-Identifier: MIT
#include "semitransitive.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "errors.hpp"

namespace wordrep {

Orientation::Orientation(Adjacency graph, std::vector<bool> forward)
    : graph_(std::move(graph)), towards_(graph_.order(), graph_.order()) {
  const auto edge_list = graph_.edges();
  if (forward.size() != edge_list.size()) {
    throw std::invalid_argument("orientation has " +
                                std::to_string(forward.size()) +
                                " directions for " +
                                std::to_string(edge_list.size()) + " edges");
  }
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const auto [a, b] = edge_list[i];
    if (forward[i]) {
      towards_.set_entry(a, b, true);
    } else {
      towards_.set_entry(b, a, true);
    }
  }
}

bool Orientation::oriented_towards(std::size_t u, std::size_t v) const {
  return towards_.entry(u, v);
}

std::vector<std::pair<std::size_t, std::size_t>> Orientation::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto edge_list = graph_.edges();
  out.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (towards_.entry(a, b)) {
      out.emplace_back(a, b);
    } else {
      out.emplace_back(b, a);
    }
  }
  return out;
}

namespace {

// Width-strided bitset rows over vertices 1..n, bit v-1 for vertex v.
struct BitRows {
  explicit BitRows(std::size_t n)
      : words((n + 63) / 64), bits(n * words, 0) {}

  std::uint64_t* row(std::size_t v) { return bits.data() + (v - 1) * words; }
  const std::uint64_t* row(std::size_t v) const {
    return bits.data() + (v - 1) * words;
  }
  void set(std::size_t v, std::size_t u) {
    row(v)[(u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
  }
  bool get(std::size_t v, std::size_t u) const {
    return (row(v)[(u - 1) / 64] >> ((u - 1) % 64)) & 1u;
  }
  void merge(std::size_t v, const BitRows& other, std::size_t u) {
    const std::uint64_t* src = other.row(u);
    std::uint64_t* dst = row(v);
    for (std::size_t k = 0; k < words; ++k) {
      dst[k] |= src[k];
    }
  }

  std::size_t words;
  std::vector<std::uint64_t> bits;
};

// Topological order of the arcs, or empty when there is a directed cycle.
std::vector<std::size_t> topological_order(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::size_t>> out(n + 1);
  std::vector<std::size_t> indeg(n + 1, 0);
  for (const auto& [t, h] : arcs) {
    out[t].push_back(h);
    ++indeg[h];
  }
  std::vector<std::size_t> stack, order;
  for (std::size_t v = 1; v <= n; ++v) {
    if (indeg[v] == 0) {
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t w : out[v]) {
      if (--indeg[w] == 0) {
        stack.push_back(w);
      }
    }
  }
  if (order.size() != n) {
    order.clear();
  }
  return order;
}

}  // namespace

bool is_acyclic(const Orientation& o) {
  return !topological_order(o.graph().order(), o.arcs()).empty() ||
         o.graph().order() == 0;
}

bool is_semi_transitive(const Orientation& o) {
  const std::size_t n = o.graph().order();
  if (n == 0) {
    return true;
  }
  const auto arcs = o.arcs();
  const auto order = topological_order(n, arcs);
  if (order.empty()) {
    return false;
  }
  std::vector<std::vector<std::size_t>> out(n + 1), in(n + 1);
  for (const auto& [t, h] : arcs) {
    out[t].push_back(h);
    in[h].push_back(t);
  }
  // desc(v): vertices reachable from v; asc(v): vertices reaching v.
  BitRows desc(n), asc(n), adj(n);
  for (std::size_t v = 1; v <= n; ++v) {
    for (std::size_t u = 1; u <= n; ++u) {
      if (o.graph().adjacent(v, u)) {
        adj.set(v, u);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t w : out[*it]) {
      desc.set(*it, w);
      desc.merge(*it, desc, w);
    }
  }
  for (std::size_t v : order) {
    for (std::size_t u : in[v]) {
      asc.set(v, u);
      asc.merge(v, asc, u);
    }
  }
  const std::size_t words = desc.words;
  std::vector<std::uint64_t> s(words);
  for (const auto& [u, v] : arcs) {
    for (std::size_t k = 0; k < words; ++k) {
      s[k] = desc.row(u)[k] & asc.row(v)[k];
    }
    s[(u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
    s[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    // A shortcut is a non-adjacent pair w -> w' with both on a u-to-v path.
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t rest = s[k];
      while (rest != 0) {
        const std::size_t w = k * 64 + std::countr_zero(rest) + 1;
        rest &= rest - 1;
        for (std::size_t k2 = 0; k2 < words; ++k2) {
          if ((desc.row(w)[k2] & s[k2] & ~adj.row(w)[k2]) != 0) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

// Backtracking search state over a graph compressed to its non-isolated
// vertices, at most 64 of them.
struct OrientationSearch {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // compressed ids
  std::vector<std::uint64_t> adj;
  std::vector<std::uint64_t> out;
  std::vector<bool> forward;

  bool valid_partial(std::size_t assigned) const {
    // Kahn's algorithm over the partial digraph.
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < assigned; ++i) {
      indeg[head(i)]++;
    }
    std::vector<std::size_t> stack, order;
    for (std::size_t v = 0; v < n; ++v) {
      if (indeg[v] == 0) {
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      order.push_back(v);
      std::uint64_t rest = out[v];
      while (rest != 0) {
        const std::size_t w = std::countr_zero(rest);
        rest &= rest - 1;
        if (--indeg[w] == 0) {
          stack.push_back(w);
        }
      }
    }
    if (order.size() != n) {
      return false;
    }
    std::vector<std::uint64_t> desc(n, 0), asc(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::uint64_t rest = out[*it];
      while (rest != 0) {
        const std::size_t w = std::countr_zero(rest);
        rest &= rest - 1;
        desc[*it] |= (std::uint64_t{1} << w) | desc[w];
      }
    }
    for (std::size_t v : order) {
      std::uint64_t rest = out[v];
      while (rest != 0) {
        const std::size_t w = std::countr_zero(rest);
        rest &= rest - 1;
        asc[w] |= (std::uint64_t{1} << v) | asc[v];
      }
    }
    for (std::size_t i = 0; i < assigned; ++i) {
      const std::size_t u = tail(i), v = head(i);
      std::uint64_t s = (desc[u] & asc[v]) | (std::uint64_t{1} << u) |
                        (std::uint64_t{1} << v);
      std::uint64_t rest = s;
      while (rest != 0) {
        const std::size_t w = std::countr_zero(rest);
        rest &= rest - 1;
        if ((desc[w] & s & ~adj[w]) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t tail(std::size_t i) const {
    return forward[i] ? edges[i].first : edges[i].second;
  }
  std::size_t head(std::size_t i) const {
    return forward[i] ? edges[i].second : edges[i].first;
  }

  bool search(std::size_t i) {
    if (i == edges.size()) {
      return true;
    }
    // Reversing every edge preserves the property, so the first edge only
    // needs one direction; the result is still the lexicographically first
    // witness.
    const int directions = (i == 0) ? 1 : 2;
    for (int d = 0; d < directions; ++d) {
      forward[i] = (d == 0);
      out[tail(i)] |= std::uint64_t{1} << head(i);
      if (valid_partial(i + 1) && search(i + 1)) {
        return true;
      }
      out[tail(i)] &= ~(std::uint64_t{1} << head(i));
    }
    return false;
  }
};

}  // namespace

std::optional<Orientation> exists_semi_transitive(const Adjacency& g,
                                                  std::size_t edge_budget) {
  const auto edge_list = g.edges();
  if (edge_list.size() > edge_budget) {
    throw BudgetError("graph has " + std::to_string(edge_list.size()) +
                      " edges, over the search budget of " +
                      std::to_string(edge_budget));
  }
  std::vector<std::size_t> compressed(g.order() + 1, 0);
  std::size_t next_id = 0;
  for (const auto& [u, v] : edge_list) {
    for (std::size_t x : {u, v}) {
      if (compressed[x] == 0) {
        compressed[x] = ++next_id;
      }
    }
  }
  if (next_id > 64) {
    throw BudgetError("search supports at most 64 non-isolated vertices, got " +
                      std::to_string(next_id));
  }
  OrientationSearch search;
  search.n = next_id;
  search.adj.assign(next_id, 0);
  search.out.assign(next_id, 0);
  search.forward.assign(edge_list.size(), true);
  for (const auto& [u, v] : edge_list) {
    const std::size_t cu = compressed[u] - 1, cv = compressed[v] - 1;
    search.edges.emplace_back(cu, cv);
    search.adj[cu] |= std::uint64_t{1} << cv;
    search.adj[cv] |= std::uint64_t{1} << cu;
  }
  if (!search.search(0)) {
    return std::nullopt;
  }
  return Orientation(g, std::move(search.forward));
}

namespace {

// Clique vertices in topological order of the tournament induced by o, or
// empty when that tournament has a cycle.
std::vector<std::size_t> clique_topological_order(const BinaryMatrix& m,
                                                  const Orientation& o) {
  const std::size_t n = m.cols();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      arcs.emplace_back(o.oriented_towards(u, v) ? std::make_pair(u, v)
                                                 : std::make_pair(v, u));
    }
  }
  return topological_order(n, arcs);
}

struct ClassifiedVertex {
  VertexClass cls;
  // Type C: in-edges from positions 1..prefix, out-edges to suffix..n.
  std::size_t prefix = 0;
  std::size_t suffix = 0;
  // Position set of the neighborhood, for types A and B.
  std::vector<std::size_t> positions;
};

std::optional<ClassifiedVertex> classify_against(
    const BinaryMatrix& m, const Orientation& o,
    const std::vector<std::size_t>& position_of, std::size_t v) {
  const std::size_t n = m.cols();
  const std::size_t row = v - n;
  std::vector<std::size_t> in_pos, out_pos;
  for (std::size_t j = 1; j <= n; ++j) {
    if (!m.entry(row, j)) {
      continue;
    }
    if (o.oriented_towards(v, j)) {
      out_pos.push_back(position_of[j]);
    } else {
      in_pos.push_back(position_of[j]);
    }
  }
  auto is_interval = [](const std::vector<std::size_t>& pos) {
    if (pos.empty()) {
      return true;
    }
    const auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
    return *hi - *lo + 1 == pos.size();
  };
  if (in_pos.empty()) {
    if (!is_interval(out_pos)) {
      return std::nullopt;
    }
    return ClassifiedVertex{VertexClass::kTypeA, 0, 0, std::move(out_pos)};
  }
  if (out_pos.empty()) {
    if (!is_interval(in_pos)) {
      return std::nullopt;
    }
    return ClassifiedVertex{VertexClass::kTypeB, 0, 0, std::move(in_pos)};
  }
  const std::size_t prefix = in_pos.size();
  const std::size_t suffix = n + 1 - out_pos.size();
  if (*std::max_element(in_pos.begin(), in_pos.end()) != prefix) {
    return std::nullopt;
  }
  if (*std::min_element(out_pos.begin(), out_pos.end()) != suffix) {
    return std::nullopt;
  }
  if (prefix >= suffix) {
    return std::nullopt;
  }
  return ClassifiedVertex{VertexClass::kTypeC, prefix, suffix, {}};
}

}  // namespace

std::optional<VertexClass> classify_vertex(const BinaryMatrix& m,
                                           const Orientation& o,
                                           std::size_t v) {
  const std::size_t n = m.cols();
  if (v <= n || v > n + m.rows()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " is not an independent vertex");
  }
  const auto order = clique_topological_order(m, o);
  if (order.empty() && n > 0) {
    return std::nullopt;
  }
  std::vector<std::size_t> position_of(n + 1, 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    position_of[order[p]] = p + 1;
  }
  auto classified = classify_against(m, o, position_of, v);
  if (!classified) {
    return std::nullopt;
  }
  return classified->cls;
}

bool check_split_orientation(const BinaryMatrix& m, const Orientation& o) {
  const std::size_t n = m.cols();
  if (o.graph().order() != n + m.rows()) {
    throw std::invalid_argument("orientation order does not match the split "
                                "graph of the matrix");
  }
  const auto order = clique_topological_order(m, o);
  if (order.empty() && n > 0) {
    return false;
  }
  std::vector<std::size_t> position_of(n + 1, 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    position_of[order[p]] = p + 1;
  }
  std::vector<ClassifiedVertex> classes;
  classes.reserve(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    auto classified = classify_against(m, o, position_of, n + i);
    if (!classified) {
      return false;
    }
    classes.push_back(std::move(*classified));
  }
  // No other vertex may cover both boundary positions of a type C vertex
  // with a single contiguous block of neighbors.
  for (std::size_t x = 0; x < classes.size(); ++x) {
    if (classes[x].cls != VertexClass::kTypeC) {
      continue;
    }
    const std::size_t p = classes[x].prefix;
    const std::size_t q = classes[x].suffix;
    for (std::size_t y = 0; y < classes.size(); ++y) {
      if (y == x) {
        continue;
      }
      const ClassifiedVertex& c = classes[y];
      if (c.cls == VertexClass::kTypeC) {
        if (c.prefix >= q || c.suffix <= p) {
          return false;
        }
      } else {
        const bool covers_p =
            std::find(c.positions.begin(), c.positions.end(), p) !=
            c.positions.end();
        const bool covers_q =
            std::find(c.positions.begin(), c.positions.end(), q) !=
            c.positions.end();
        if (covers_p && covers_q) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace wordrep

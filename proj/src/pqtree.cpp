// SPDX-License-Identifier: MIT
#include "pqtree.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace wordrep {

struct PQTree::Node {
  enum class Kind { kLeaf, kP, kQ };

  explicit Node(std::size_t leaf_id) : kind(Kind::kLeaf), leaf(leaf_id) {}
  Node(Kind k, std::vector<std::unique_ptr<Node>> children)
      : kind(k), kids(std::move(children)) {}

  Kind kind;
  std::size_t leaf = 0;
  std::vector<std::unique_ptr<Node>> kids;
};

namespace {

using Node = PQTree::Node;
using NodePtr = std::unique_ptr<Node>;
using Kind = Node::Kind;

// Classification of a reduced non-root node with respect to the current
// leaf set: no leaf, every leaf, or a proper boundary mix.
enum class Mark { kEmpty, kFull, kPartial };

struct Reduced {
  Mark mark;
  NodePtr node;
};

std::size_t count_in(const Node& node, const std::vector<char>& in_s) {
  if (node.kind == Kind::kLeaf) {
    return in_s[node.leaf] ? 1 : 0;
  }
  std::size_t total = 0;
  for (const auto& kid : node.kids) {
    total += count_in(*kid, in_s);
  }
  return total;
}

// Wraps nodes into a single child: one node stays as is, several become a
// new P node.
NodePtr group(std::vector<NodePtr> nodes) {
  assert(!nodes.empty());
  if (nodes.size() == 1) {
    return std::move(nodes.front());
  }
  return std::make_unique<Node>(Kind::kP, std::move(nodes));
}

void append(std::vector<NodePtr>& to, std::vector<NodePtr> from) {
  for (auto& n : from) {
    to.push_back(std::move(n));
  }
}

// Reduces a node that is not the pertinent root. A partial result is always
// a Q node whose children run from the empty side to the full side.
std::optional<Reduced> reduce_non_root(NodePtr node,
                                       const std::vector<char>& in_s);

struct SplitKids {
  std::vector<NodePtr> empties;
  std::vector<NodePtr> fulls;
  std::vector<NodePtr> partials;  // each a canonical Q node
};

std::optional<SplitKids> split_children(std::vector<NodePtr> kids,
                                        const std::vector<char>& in_s,
                                        std::size_t partial_limit) {
  SplitKids out;
  for (auto& kid : kids) {
    auto r = reduce_non_root(std::move(kid), in_s);
    if (!r) {
      return std::nullopt;
    }
    switch (r->mark) {
      case Mark::kEmpty:
        out.empties.push_back(std::move(r->node));
        break;
      case Mark::kFull:
        out.fulls.push_back(std::move(r->node));
        break;
      case Mark::kPartial:
        if (out.partials.size() == partial_limit) {
          return std::nullopt;
        }
        out.partials.push_back(std::move(r->node));
        break;
    }
  }
  return out;
}

std::optional<Reduced> reduce_non_root(NodePtr node,
                                       const std::vector<char>& in_s) {
  if (node->kind == Kind::kLeaf) {
    const Mark mark = in_s[node->leaf] ? Mark::kFull : Mark::kEmpty;
    return Reduced{mark, std::move(node)};
  }

  if (node->kind == Kind::kP) {
    auto split = split_children(std::move(node->kids), in_s, 1);
    if (!split) {
      return std::nullopt;
    }
    if (split->partials.empty() && split->fulls.empty()) {
      node->kids = std::move(split->empties);
      return Reduced{Mark::kEmpty, std::move(node)};
    }
    if (split->partials.empty() && split->empties.empty()) {
      node->kids = std::move(split->fulls);
      return Reduced{Mark::kFull, std::move(node)};
    }
    // Mixed: build the canonical partial Q node, empty side first.
    std::vector<NodePtr> qkids;
    if (!split->empties.empty()) {
      qkids.push_back(group(std::move(split->empties)));
    }
    if (!split->partials.empty()) {
      append(qkids, std::move(split->partials.front()->kids));
    }
    if (!split->fulls.empty()) {
      qkids.push_back(group(std::move(split->fulls)));
    }
    return Reduced{Mark::kPartial,
                   std::make_unique<Node>(Kind::kQ, std::move(qkids))};
  }

  // Q node: children marks must read E* [partial] F*, in the stored order or
  // reversed; the result keeps that orientation with empties first.
  std::vector<NodePtr> kids = std::move(node->kids);
  std::vector<Mark> marks;
  for (auto& kid : kids) {
    auto r = reduce_non_root(std::move(kid), in_s);
    if (!r) {
      return std::nullopt;
    }
    marks.push_back(r->mark);
    kid = std::move(r->node);
  }
  if (std::none_of(marks.begin(), marks.end(),
                   [](Mark m) { return m != Mark::kEmpty; })) {
    node->kids = std::move(kids);
    return Reduced{Mark::kEmpty, std::move(node)};
  }
  if (std::none_of(marks.begin(), marks.end(),
                   [](Mark m) { return m != Mark::kFull; })) {
    node->kids = std::move(kids);
    return Reduced{Mark::kFull, std::move(node)};
  }
  auto matches_forward = [](const std::vector<Mark>& ms) {
    std::size_t i = 0;
    while (i < ms.size() && ms[i] == Mark::kEmpty) {
      ++i;
    }
    if (i < ms.size() && ms[i] == Mark::kPartial) {
      ++i;
    }
    while (i < ms.size() && ms[i] == Mark::kFull) {
      ++i;
    }
    return i == ms.size();
  };
  std::vector<Mark> reversed(marks.rbegin(), marks.rend());
  if (matches_forward(reversed)) {
    std::reverse(kids.begin(), kids.end());
    marks = std::move(reversed);
  } else if (!matches_forward(marks)) {
    return std::nullopt;
  }
  std::vector<NodePtr> qkids;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (marks[i] == Mark::kPartial) {
      append(qkids, std::move(kids[i]->kids));
    } else {
      qkids.push_back(std::move(kids[i]));
    }
  }
  return Reduced{Mark::kPartial,
                 std::make_unique<Node>(Kind::kQ, std::move(qkids))};
}

// Reduces the pertinent root, the deepest node containing all of s. Unlike
// the non-root case the leaves of s only need to be consecutive inside this
// node, with empty children allowed on both sides.
bool reduce_root(NodePtr& slot, const std::vector<char>& in_s) {
  Node* node = slot.get();
  if (node->kind == Kind::kLeaf) {
    return true;
  }

  if (node->kind == Kind::kP) {
    auto split = split_children(std::move(node->kids), in_s, 2);
    if (!split) {
      return false;
    }
    if (split->partials.empty()) {
      if (split->empties.empty() || split->fulls.empty()) {
        node->kids = split->empties.empty() ? std::move(split->fulls)
                                            : std::move(split->empties);
        return true;
      }
      node->kids = std::move(split->empties);
      node->kids.push_back(group(std::move(split->fulls)));
      return true;
    }
    // Chain the full children and the partial children into one Q node.
    std::vector<NodePtr> qkids = std::move(split->partials.front()->kids);
    if (!split->fulls.empty()) {
      qkids.push_back(group(std::move(split->fulls)));
    }
    if (split->partials.size() == 2) {
      auto& other = split->partials.back()->kids;
      for (auto it = other.rbegin(); it != other.rend(); ++it) {
        qkids.push_back(std::move(*it));
      }
    }
    auto q = std::make_unique<Node>(Kind::kQ, std::move(qkids));
    if (split->empties.empty()) {
      slot = std::move(q);
      return true;
    }
    node->kids = std::move(split->empties);
    node->kids.push_back(std::move(q));
    return true;
  }

  // Q root: the non-empty children must be consecutive, full inside, with at
  // most one partial child at each end of the run.
  std::vector<NodePtr> kids = std::move(node->kids);
  std::vector<Mark> marks;
  for (auto& kid : kids) {
    auto r = reduce_non_root(std::move(kid), in_s);
    if (!r) {
      return false;
    }
    marks.push_back(r->mark);
    kid = std::move(r->node);
  }
  std::size_t first = marks.size(), last = marks.size();
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i] != Mark::kEmpty) {
      if (first == marks.size()) {
        first = i;
      }
      last = i;
    }
  }
  // The descent guarantees no single child holds all of s, so the non-empty
  // run spans at least two children.
  assert(first < last);
  for (std::size_t i = first; i <= last; ++i) {
    if (marks[i] == Mark::kEmpty) {
      return false;
    }
    if (marks[i] == Mark::kPartial && i != first && i != last) {
      return false;
    }
  }
  std::vector<NodePtr> qkids;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (marks[i] != Mark::kPartial) {
      qkids.push_back(std::move(kids[i]));
      continue;
    }
    // Splice with the full side facing the interior of the run.
    auto& inner = kids[i]->kids;
    if (i == first) {
      append(qkids, std::move(inner));
    } else {
      for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
        qkids.push_back(std::move(*it));
      }
    }
  }
  node->kids = std::move(qkids);
  return true;
}

// Descends to the pertinent root and reduces there.
bool reduce_at_pertinent_root(NodePtr& slot, const std::vector<char>& in_s,
                              std::size_t total) {
  Node* node = slot.get();
  if (node->kind != Kind::kLeaf) {
    for (auto& kid : node->kids) {
      if (count_in(*kid, in_s) == total) {
        return reduce_at_pertinent_root(kid, in_s, total);
      }
    }
  }
  return reduce_root(slot, in_s);
}

void collect_frontier(const Node& node, std::vector<std::size_t>& out) {
  if (node.kind == Kind::kLeaf) {
    out.push_back(node.leaf);
    return;
  }
  for (const auto& kid : node.kids) {
    collect_frontier(*kid, out);
  }
}

}  // namespace

PQTree::PQTree(std::size_t leaves) : leaves_(leaves) {
  if (leaves == 1) {
    root_ = std::make_unique<Node>(1);
  } else if (leaves >= 2) {
    std::vector<NodePtr> kids;
    kids.reserve(leaves);
    for (std::size_t i = 1; i <= leaves; ++i) {
      kids.push_back(std::make_unique<Node>(i));
    }
    root_ = std::make_unique<Node>(Kind::kP, std::move(kids));
  }
}

PQTree::~PQTree() = default;

bool PQTree::reduce(const std::vector<std::size_t>& s) {
  if (!valid_) {
    return false;
  }
  std::vector<char> in_s(leaves_ + 1, 0);
  std::size_t total = 0;
  for (std::size_t leaf : s) {
    if (leaf < 1 || leaf > leaves_) {
      throw std::out_of_range("leaf " + std::to_string(leaf) + " outside 1.." +
                              std::to_string(leaves_));
    }
    if (!in_s[leaf]) {
      in_s[leaf] = 1;
      ++total;
    }
  }
  if (total <= 1 || total == leaves_) {
    return true;
  }
  valid_ = reduce_at_pertinent_root(root_, in_s, total);
  return valid_;
}

std::vector<std::size_t> PQTree::frontier() const {
  std::vector<std::size_t> out;
  if (root_) {
    collect_frontier(*root_, out);
  }
  return out;
}

}  // namespace wordrep

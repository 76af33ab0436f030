// SPDX-License-Identifier: MIT
#include "wrdecision.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "pqtree.hpp"

namespace wordrep {

namespace {

bool contiguous_ones(std::uint64_t v) {
  v >>= std::countr_zero(v);
  return (v & (v + 1)) == 0;
}

// Row forms of m under the given column order. Throws when some row has
// neither form; callers use this only on orders already known to be valid.
std::vector<RowForm> forms_under(const BinaryMatrix& m,
                                 const std::vector<std::size_t>& order) {
  const BinaryMatrix permuted = apply_column_order(m, order);
  std::vector<RowForm> forms(permuted.rows());
  for (std::size_t i = 1; i <= permuted.rows(); ++i) {
    auto form = classify_row_form(permuted, i);
    if (!form)
      throw std::logic_error("forms_under: row has neither interval nor wrap form");
    forms[i - 1] = *form;
  }
  return forms;
}

// First pair (x, y) of 0-based row indices violating the boundary-position
// check: row x has wrap form 1^a 0^b 1^c and row y covers both position a
// and position a+b+1 with an interval or with a single block of a wrap.
std::optional<std::pair<std::size_t, std::size_t>> wrap_conflict(
    const std::vector<RowForm>& forms, std::size_t cols) {
  for (std::size_t x = 0; x < forms.size(); ++x) {
    if (!forms[x].wrap) continue;
    const std::size_t p = forms[x].prefix;
    const std::size_t q = forms[x].prefix + forms[x].gap + 1;
    for (std::size_t y = 0; y < forms.size(); ++y) {
      if (y == x) continue;
      const RowForm& g = forms[y];
      if (!g.wrap) {
        if (g.lo != 0 && g.lo <= p && q <= g.hi) return std::make_pair(x, y);
      } else if (g.prefix >= q || cols - g.suffix + 1 <= p) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string wr_status_name(WrStatus status) {
  switch (status) {
    case WrStatus::kWordRepresentable: return "word_representable";
    case WrStatus::kNonWordRepresentable: return "non_word_representable";
    case WrStatus::kUndecided: return "undecided";
  }
  return "undecided";
}

std::string obstruction_kind_name(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::kNoCircularOrder: return "no_circular_order";
    case ObstructionKind::kWrapConflict: return "wrap_conflict";
    case ObstructionKind::kForbiddenConfiguration: return "forbidden_configuration";
    case ObstructionKind::kOrientationsExhausted: return "orientations_exhausted";
  }
  return "unknown";
}

std::optional<RowForm> classify_row_form(std::uint64_t bits, std::size_t cols) {
  if (cols > 64)
    throw std::invalid_argument("classify_row_form: more than 64 columns");
  const std::uint64_t mask =
      cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
  bits &= mask;
  RowForm form;
  if (bits == 0) return form;
  if (contiguous_ones(bits)) {
    form.lo = static_cast<std::size_t>(std::countr_zero(bits)) + 1;
    form.hi = static_cast<std::size_t>(std::bit_width(bits));
    return form;
  }
  const std::uint64_t comp = ~bits & mask;
  if ((bits & 1) != 0 && (bits >> (cols - 1)) != 0 && contiguous_ones(comp)) {
    form.wrap = true;
    form.prefix = static_cast<std::size_t>(std::countr_zero(comp));
    form.gap = static_cast<std::size_t>(std::popcount(comp));
    form.suffix = cols - form.prefix - form.gap;
    return form;
  }
  return std::nullopt;
}

std::optional<RowForm> classify_row_form(const BinaryMatrix& m,
                                         std::size_t row) {
  const std::size_t n = m.cols();
  if (n == 0) return RowForm{};
  if (n <= 64) return classify_row_form(m.row_bits(row), n);
  // Wide rows: collect the maximal blocks of ones.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t start = 0;
  bool in_block = false;
  for (std::size_t j = 1; j <= n; ++j) {
    if (m.entry(row, j)) {
      if (!in_block) {
        start = j;
        in_block = true;
      }
    } else if (in_block) {
      blocks.emplace_back(start, j - 1);
      in_block = false;
    }
  }
  if (in_block) blocks.emplace_back(start, n);
  RowForm form;
  if (blocks.empty()) return form;
  if (blocks.size() == 1) {
    form.lo = blocks[0].first;
    form.hi = blocks[0].second;
    return form;
  }
  if (blocks.size() == 2 && blocks[0].first == 1 && blocks[1].second == n) {
    form.wrap = true;
    form.prefix = blocks[0].second;
    form.gap = blocks[1].first - blocks[0].second - 1;
    form.suffix = n - blocks[1].first + 1;
    return form;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> c1p_order(const BinaryMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 1);
  // Rows of weight <= 1 or weight n are intervals under every order.
  std::set<std::vector<std::size_t>> sets;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    const std::size_t w = m.row_weight(i);
    if (w <= 1 || w == n) continue;
    std::vector<std::size_t> s;
    s.reserve(w);
    for (std::size_t j = 1; j <= n; ++j)
      if (m.entry(i, j)) s.push_back(j);
    sets.insert(std::move(s));
  }
  if (sets.empty()) return identity;
  PQTree tree(n);
  for (const auto& s : sets)
    if (!tree.reduce(s)) return std::nullopt;
  std::vector<std::size_t> order = tree.frontier();
  // Cross-check the frontier against every row before returning it.
  std::vector<std::size_t> position(n + 1, 0);
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = p + 1;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    std::size_t lo = n + 1, hi = 0, w = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (!m.entry(i, j)) continue;
      ++w;
      lo = std::min(lo, position[j]);
      hi = std::max(hi, position[j]);
    }
    if (w != 0 && hi - lo + 1 != w)
      throw std::logic_error("c1p_order: frontier violates a row interval");
  }
  return order;
}

std::optional<std::vector<std::size_t>> circular_ones_order(
    const BinaryMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return std::vector<std::size_t>{};
  // Complementing every row with a one in a fixed pivot column turns the
  // circular-interval property into the plain interval property under
  // exactly the same column orders.
  BinaryMatrix flattened = m;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (!m.entry(i, 1)) continue;
    for (std::size_t j = 1; j <= n; ++j)
      flattened.set_entry(i, j, !m.entry(i, j));
  }
  auto order = c1p_order(flattened);
  if (!order) return std::nullopt;
  const BinaryMatrix permuted = apply_column_order(m, *order);
  for (std::size_t i = 1; i <= permuted.rows(); ++i)
    if (!classify_row_form(permuted, i))
      throw std::logic_error("circular_ones_order: order violates a row");
  return order;
}

bool condition_ii_holds(const BinaryMatrix& m_star) {
  std::vector<RowForm> forms(m_star.rows());
  for (std::size_t i = 1; i <= m_star.rows(); ++i) {
    auto form = classify_row_form(m_star, i);
    if (!form)
      throw std::invalid_argument("condition_ii_holds: row " +
                                  std::to_string(i) +
                                  " is neither an interval nor a wrap");
    forms[i - 1] = *form;
  }
  return !wrap_conflict(forms, m_star.cols()).has_value();
}

std::optional<ForbiddenWitness> detect_forbidden_4col(const BinaryMatrix& m) {
  if (m.cols() != 4)
    throw std::invalid_argument(
        "detect_forbidden_4col: matrix must have exactly 4 columns");
  std::unordered_map<std::uint64_t, std::size_t> first_row;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (m.row_all_ones(i))
      throw std::invalid_argument(
          "detect_forbidden_4col: all-ones rows are not allowed");
    first_row.emplace(m.row_bits(i), i);
  }
  struct Config {
    const char* tag;
    std::vector<std::uint64_t> rows;
  };
  // Column j of a configuration row is bit j-1.
  static const std::vector<Config> configs = {
      {"T1", {0b0011, 0b0101, 0b0110}},
      {"T2", {0b0011, 0b0101, 0b1001}},
      {"T3", {0b1101, 0b1011, 0b0111}},
      {"T4", {0b0111, 0b0011, 0b1001, 0b1101}},
  };
  std::vector<std::size_t> sigma = {1, 2, 3, 4};
  do {
    for (const auto& config : configs) {
      std::vector<std::size_t> rows;
      for (std::uint64_t pattern : config.rows) {
        std::uint64_t image = 0;
        for (std::size_t j = 1; j <= 4; ++j)
          if (pattern & (std::uint64_t{1} << (j - 1)))
            image |= std::uint64_t{1} << (sigma[j - 1] - 1);
        auto it = first_row.find(image);
        if (it == first_row.end()) break;
        rows.push_back(it->second);
      }
      if (rows.size() == config.rows.size())
        return ForbiddenWitness{config.tag, std::move(rows), sigma};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  // A row covering exactly three columns can also serve as a fourth clique
  // vertex: moving it into the clique and dropping the column it misses
  // leaves the split graph unchanged up to isomorphism. Only T1 has a
  // clique vertex with no independent neighbors, so the configurations gain
  // exactly one extra embedding form: some column triple carries row
  // restrictions 111, 110, 101 and 011 (the bits the rows have outside the
  // triple are irrelevant, because the dropped column is not part of the
  // embedded copy).
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<std::size_t> triple;
    for (std::size_t j = 1; j <= 4; ++j)
      if (j != d) triple.push_back(j);
    std::size_t cover = 0, first_two = 0, outer_two = 0, last_two = 0;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      unsigned bits = 0;
      for (unsigned t = 0; t < 3; ++t)
        if (m.entry(i, triple[t])) bits |= 1u << t;
      if (bits == 0b111 && cover == 0) cover = i;
      if (bits == 0b011 && first_two == 0) first_two = i;
      if (bits == 0b101 && outer_two == 0) outer_two = i;
      if (bits == 0b110 && last_two == 0) last_two = i;
    }
    if (cover && first_two && outer_two && last_two)
      return ForbiddenWitness{
          "T1", {cover, first_two, outer_two, last_two}, triple};
  }
  return std::nullopt;
}

namespace {

// Stage 3: try every column order of the reduced matrix. A matrix without
// all-ones rows is word-representable exactly when some order gives every
// row interval or wrap form and passes the boundary-position check, so an
// exhausted search is a proof either way.
WrVerdict search_orders(WrVerdict verdict) {
  const BinaryMatrix& r = verdict.reduction.matrix;
  const std::size_t n = r.cols();
  std::vector<std::uint64_t> row_masks(r.rows());
  for (std::size_t i = 1; i <= r.rows(); ++i) row_masks[i - 1] = r.row_bits(i);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::size_t> first_shaped;
  std::vector<RowForm> first_shaped_forms;
  std::vector<RowForm> forms(row_masks.size());
  do {
    bool shaped = true;
    for (std::size_t i = 0; i < row_masks.size() && shaped; ++i) {
      std::uint64_t permuted = 0;
      for (std::size_t p = 0; p < n; ++p)
        permuted |= ((row_masks[i] >> (perm[p] - 1)) & std::uint64_t{1}) << p;
      auto form = classify_row_form(permuted, n);
      if (form)
        forms[i] = *form;
      else
        shaped = false;
    }
    if (!shaped) continue;
    if (first_shaped.empty()) {
      first_shaped = perm;
      first_shaped_forms = forms;
    }
    if (!wrap_conflict(forms, n)) {
      verdict.status = WrStatus::kWordRepresentable;
      verdict.column_order = perm;
      verdict.row_forms = forms;
      return verdict;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // The circular screen passed, so some shaped order exists and the failure
  // is a wrap conflict on every one of them.
  assert(!first_shaped.empty());
  verdict.status = WrStatus::kNonWordRepresentable;
  Obstruction obstruction{ObstructionKind::kWrapConflict, {}, first_shaped, ""};
  if (auto pair = wrap_conflict(first_shaped_forms, n))
    obstruction.rows = {pair->first + 1, pair->second + 1};
  if (n == 4) {
    if (auto witness = detect_forbidden_4col(r)) {
      obstruction.kind = ObstructionKind::kForbiddenConfiguration;
      obstruction.rows = witness->rows;
      obstruction.columns = witness->column_order;
      obstruction.configuration = witness->tag;
    }
  }
  verdict.obstruction = std::move(obstruction);
  return verdict;
}

}  // namespace

WrVerdict decide_split(const BinaryMatrix& m, const DecideOptions& options) {
  WrVerdict verdict;
  verdict.reduction = normalize_and_reduce(m);
  const BinaryMatrix& r = verdict.reduction.matrix;

  verdict.stage = 1;
  if (auto order = c1p_order(r)) {
    verdict.status = WrStatus::kWordRepresentable;
    verdict.column_order = std::move(*order);
    verdict.row_forms = forms_under(r, verdict.column_order);
    return verdict;
  }

  verdict.stage = 2;
  if (!circular_ones_order(r)) {
    verdict.status = WrStatus::kNonWordRepresentable;
    verdict.obstruction =
        Obstruction{ObstructionKind::kNoCircularOrder, {}, {}, ""};
    return verdict;
  }

  if (r.cols() <= options.search_cols_max && r.cols() <= 64) {
    verdict.stage = 3;
    return search_orders(std::move(verdict));
  }

  verdict.stage = 4;
  const Adjacency g = split_adjacency(r);
  std::size_t non_isolated = 0;
  for (std::size_t v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 0) ++non_isolated;
  if (g.edge_count() > options.oracle_edge_budget || non_isolated > 64) {
    verdict.status = WrStatus::kUndecided;
    return verdict;
  }
  auto orientation = exists_semi_transitive(g, options.oracle_edge_budget);
  if (!orientation) {
    verdict.status = WrStatus::kNonWordRepresentable;
    verdict.obstruction =
        Obstruction{ObstructionKind::kOrientationsExhausted, {}, {}, ""};
    return verdict;
  }
  verdict.status = WrStatus::kWordRepresentable;
  // The clique part of a semi-transitive orientation is a transitive
  // tournament; its topological order is a valid witness order.
  std::vector<std::size_t> order(r.cols());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    return orientation->oriented_towards(u, v);
  });
  verdict.column_order = order;
  verdict.row_forms = forms_under(r, order);
  if (wrap_conflict(verdict.row_forms, r.cols()))
    throw std::logic_error("decide_split: oracle witness fails the boundary check");
  return verdict;
}

bool verify_word(const std::vector<std::size_t>& word, const Adjacency& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t x : word) {
    if (x < 1 || x > n)
      throw std::invalid_argument("verify_word: letter out of range");
    seen[x] = true;
  }
  for (std::size_t v = 1; v <= n; ++v)
    if (!seen[v])
      throw std::invalid_argument("verify_word: vertex " + std::to_string(v) +
                                  " never occurs in the word");
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      bool alternating = true;
      std::size_t prev = 0;
      for (std::size_t x : word) {
        if (x != u && x != v) continue;
        if (x == prev) {
          alternating = false;
          break;
        }
        prev = x;
      }
      if (alternating != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace wordrep

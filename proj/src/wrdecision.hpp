// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "semitransitive.hpp"
#include "splitgraph.hpp"

namespace wordrep {

enum class WrStatus { kWordRepresentable, kNonWordRepresentable, kUndecided };

std::string wr_status_name(WrStatus status);

// The shape of a binary row under a fixed column order. A row is either a
// single block of ones (interval form) or a block of ones at each end with
// zeros in between (wrap form).
struct RowForm {
  bool wrap = false;
  // Interval form: ones exactly at positions lo..hi (1-based); lo = hi = 0
  // for an all-zero row.
  std::size_t lo = 0;
  std::size_t hi = 0;
  // Wrap form: 1^prefix 0^gap 1^suffix with prefix, gap, suffix >= 1.
  std::size_t prefix = 0;
  std::size_t gap = 0;
  std::size_t suffix = 0;

  friend bool operator==(const RowForm& a, const RowForm& b) = default;
};

// Classifies the low `cols` bits of `bits` (bit j-1 = column j), or a row of
// a matrix of any width. Returns nullopt when the row has neither form.
std::optional<RowForm> classify_row_form(std::uint64_t bits, std::size_t cols);
std::optional<RowForm> classify_row_form(const BinaryMatrix& m,
                                         std::size_t row);

enum class ObstructionKind {
  kNoCircularOrder,
  kWrapConflict,
  kForbiddenConfiguration,
  kOrientationsExhausted,
};

std::string obstruction_kind_name(ObstructionKind kind);

// Evidence that the reduced matrix is not word-representable.
struct Obstruction {
  ObstructionKind kind;
  // Offending rows of the reduced matrix (1-based); for a wrap conflict, the
  // wrap row followed by the row covering both of its boundary positions.
  std::vector<std::size_t> rows;
  // For a wrap conflict, the column order on which the conflict was found;
  // for a forbidden configuration, the columns in configuration order (four
  // of them, or three for the clique-row form of T1).
  std::vector<std::size_t> columns;
  // "T1".."T4" when kind is kForbiddenConfiguration, empty otherwise.
  std::string configuration;
};

struct DecideOptions {
  // Exhaustive column-order search runs when the reduced matrix has at most
  // this many columns.
  std::size_t search_cols_max = 10;
  // The orientation oracle runs when the reduced split graph has at most
  // this many edges.
  std::size_t oracle_edge_budget = kDefaultEdgeBudget;
};

// Outcome of decide_split. Stages: 1 = every row an interval under some
// column order, 2 = circular-interval screen, 3 = exhaustive column-order
// search, 4 = orientation oracle. When the status is decided at stage 1, 3
// or 4 as word-representable, column_order is a witness order on the reduced
// matrix under which row i has shape row_forms[i], and the wrap rows pass
// the boundary-position check.
struct WrVerdict {
  WrStatus status = WrStatus::kUndecided;
  int stage = 0;
  std::vector<std::size_t> column_order;
  std::vector<RowForm> row_forms;
  std::optional<Obstruction> obstruction;
  Reduction reduction;
};

// A column order under which every row of m is an interval of ones, when
// one exists. Rows of weight <= 1 and full rows never constrain the order.
std::optional<std::vector<std::size_t>> c1p_order(const BinaryMatrix& m);

// A column order under which every row is an interval or a wrap (ones
// consecutive around the circle), when one exists. Reduces to c1p_order by
// complementing every row with a one in the first column: a row and its
// complement occupy circular intervals under exactly the same orders.
std::optional<std::vector<std::size_t>> circular_ones_order(
    const BinaryMatrix& m);

// The boundary-position check for a matrix whose rows all have interval or
// wrap form under the current column order. For a wrap row 1^a 0^b 1^c, no
// other row may cover both position a and position a+b+1: an interval row
// covers them when it contains both; a wrap row blocks only when one of its
// two blocks of ones contains both. Throws std::invalid_argument when some
// row has neither form.
bool condition_ii_holds(const BinaryMatrix& m_star);

// A forbidden configuration found in a 4-column matrix: tag identifies the
// configuration, rows lists the matching rows of m in configuration order,
// and column_order maps configuration columns to columns of m. Two witness
// shapes exist. With four column_order entries, the configuration matrix
// embeds over all four columns. With three entries (the clique-row form,
// tag "T1" only), rows[0] covers exactly those three columns and acts as a
// fourth clique vertex, and rows[1..3] restrict to 110, 101 and 011 on
// them.
struct ForbiddenWitness {
  std::string tag;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> column_order;
};

// Searches an m with exactly 4 columns and no all-ones row for one of the
// four minimal non-representable configurations T1..T4, either embedded
// over all four columns (up to row and column permutation) or, for T1, in
// the clique-row form where a row covering exactly three columns serves as
// a fourth clique vertex. Presence of one is equivalent to G(m) not being
// word-representable. Throws std::invalid_argument on other widths or when
// an all-ones row is present.
std::optional<ForbiddenWitness> detect_forbidden_4col(const BinaryMatrix& m);

// Decides word-representability of the split graph G(m). The matrix is
// first normalized (all-ones rows absorbed into the clique) and reduced
// (rows of weight <= 1, duplicate rows, duplicate columns dropped), then:
// stage 1 accepts when every row is an interval under some column order;
// stage 2 rejects when no column order makes every row circular; stage 3
// searches all column orders of the reduced matrix for one giving every row
// interval or wrap form and passing the boundary-position check, which is
// exact; stage 4 asks the orientation oracle when the reduced split graph
// is within the edge budget. Returns kUndecided when every in-budget stage
// is exhausted without a decision.
WrVerdict decide_split(const BinaryMatrix& m, const DecideOptions& options = {});

// Whether the word represents g: every vertex of g occurs in the word, and
// two vertices alternate in the word exactly when they are adjacent.
// Letters are vertices 1..order. Throws std::invalid_argument on letters
// outside 1..order or when some vertex never occurs.
bool verify_word(const std::vector<std::size_t>& word, const Adjacency& g);

}  // namespace wordrep

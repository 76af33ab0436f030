// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bitmatrix.hpp"

namespace wordrep {

// A finite 0/1 string, typically one row of a matrix. Patterns of equal
// length are partially ordered by inclusion of their 1-position sets.
class RowPattern {
 public:
  RowPattern() = default;
  // Throws ParseError on characters outside {0,1}.
  explicit RowPattern(std::string_view bits);

  std::size_t length() const { return bits_.size(); }
  bool bit(std::size_t pos) const;  // 1-based
  const std::string& str() const { return bits_; }
  RowPattern complement() const;

  friend bool operator==(const RowPattern& a, const RowPattern& b) = default;
  friend auto operator<=>(const RowPattern& a, const RowPattern& b) = default;

 private:
  std::string bits_;
};

using RowPatternSet = std::set<RowPattern>;

// 1-based positions of the 1s.
std::vector<std::size_t> gamma(const RowPattern& p);

// Inclusion order: every 1 of x is a 1 of y. Lengths must match.
bool pattern_leq(const RowPattern& x, const RowPattern& y);

// True when every two elements are comparable under pattern_leq.
bool is_total_order(const RowPatternSet& s);

RowPattern row_pattern(const BinaryMatrix& m, std::size_t row);

// The set of distinct rows of m.
RowPatternSet row_patterns(const BinaryMatrix& m);

// Letterwise expansions for 2x2 substitution blocks: expand_u maps each 0 to
// the top row of a and each 1 to the top row of b; expand_l uses the bottom
// rows. Applied k times to "0" they generate exactly the rows of the k-th
// substitution iterate.
RowPattern expand_u(const RowPattern& p, const BinaryMatrix& a,
                    const BinaryMatrix& b);
RowPattern expand_l(const RowPattern& p, const BinaryMatrix& a,
                    const BinaryMatrix& b);

}  // namespace wordrep

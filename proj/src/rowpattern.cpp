// SPDX-License-Identifier: MIT
#include "rowpattern.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace wordrep {

RowPattern::RowPattern(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw ParseError("pattern character '" + std::string(1, c) +
                       "' is not '0' or '1'");
    }
  }
}

bool RowPattern::bit(std::size_t pos) const {
  if (pos < 1 || pos > bits_.size()) {
    throw std::out_of_range("pattern position " + std::to_string(pos) +
                            " outside 1.." + std::to_string(bits_.size()));
  }
  return bits_[pos - 1] == '1';
}

RowPattern RowPattern::complement() const {
  RowPattern out;
  out.bits_ = bits_;
  for (char& c : out.bits_) {
    c = (c == '0') ? '1' : '0';
  }
  return out;
}

std::vector<std::size_t> gamma(const RowPattern& p) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    if (p.bit(i)) {
      positions.push_back(i);
    }
  }
  return positions;
}

bool pattern_leq(const RowPattern& x, const RowPattern& y) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("pattern lengths differ: " +
                                std::to_string(x.length()) + " vs " +
                                std::to_string(y.length()));
  }
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (x.str()[i] == '1' && y.str()[i] == '0') {
      return false;
    }
  }
  return true;
}

bool is_total_order(const RowPatternSet& s) {
  for (auto i = s.begin(); i != s.end(); ++i) {
    for (auto j = std::next(i); j != s.end(); ++j) {
      if (!pattern_leq(*i, *j) && !pattern_leq(*j, *i)) {
        return false;
      }
    }
  }
  return true;
}

RowPattern row_pattern(const BinaryMatrix& m, std::size_t row) {
  return RowPattern(m.row_string(row));
}

RowPatternSet row_patterns(const BinaryMatrix& m) {
  RowPatternSet s;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    s.insert(row_pattern(m, i));
  }
  return s;
}

namespace {

RowPattern expand_with(const RowPattern& p, const BinaryMatrix& a,
                       const BinaryMatrix& b, std::size_t source_row) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw std::invalid_argument("row expansion is defined for 2x2 blocks");
  }
  std::string out;
  out.reserve(2 * p.length());
  for (char c : p.str()) {
    const BinaryMatrix& block = (c == '1') ? b : a;
    out += block.row_string(source_row);
  }
  return RowPattern(out);
}

}  // namespace

RowPattern expand_u(const RowPattern& p, const BinaryMatrix& a,
                    const BinaryMatrix& b) {
  return expand_with(p, a, b, 1);
}

RowPattern expand_l(const RowPattern& p, const BinaryMatrix& a,
                    const BinaryMatrix& b) {
  return expand_with(p, a, b, 2);
}

}  // namespace wordrep

// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace wordrep {

// Thrown when an operation would exceed its configured size or search budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown on malformed textual input: matrix files, row specs, words, CSV.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wordrep

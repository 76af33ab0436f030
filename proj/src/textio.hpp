// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bitmatrix.hpp"
#include "iwr.hpp"
#include "wrdecision.hpp"

namespace wordrep {

// Reads a matrix written one row per line over {0,1}; a blank line or end
// of input terminates it. Leading blank lines are skipped. Throws
// ParseError naming the offending line and column.
BinaryMatrix parse_matrix_text(std::istream& in);
BinaryMatrix parse_matrix_text(const std::string& text);

// One row per line, with a trailing newline.
std::string format_matrix_text(const BinaryMatrix& m);

// Parses a word over vertices: either one digit per letter ("14213243") or
// integers separated by commas or spaces ("1,4,2,13"). Throws ParseError on
// anything else.
std::vector<std::size_t> parse_word(const std::string& text);

std::string wr_status_short(WrStatus status);  // "WR", "NWR", "UND"

nlohmann::json row_form_json(const RowForm& form);
nlohmann::json verdict_json(const WrVerdict& verdict);
nlohmann::json iwr_json(const IwrReport& report);
nlohmann::json classification_json(const Classification& classification);

// The per-iterate trail as "0:WR;1:WR;2:NWR".
std::string per_k_string(const IwrReport& report);

// CSV with header case,A,B,result,certificate_or_witness_kind,per_k_verdicts
// and one row per table case.
std::string classification_csv(const Classification& classification);

struct ExpectedRow {
  int case_number = 0;
  std::string a_spec;
  std::string b_spec;
  std::string iwr;  // "2".."5" or "inf"
};

// Loads a CSV with header case,a,b,iwr. Throws ParseError on malformed
// rows.
std::vector<ExpectedRow> load_expected_csv(std::istream& in);
std::vector<ExpectedRow> load_expected_csv_file(const std::string& path);

// Mismatch messages between a computed classification and the expected
// table; empty when they agree on every case.
std::vector<std::string> diff_against_expected(
    const Classification& classification,
    const std::vector<ExpectedRow>& expected);

}  // namespace wordrep

// SPDX-License-Identifier: MIT
#include "textio.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "errors.hpp"

namespace wordrep {

BinaryMatrix parse_matrix_text(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (rows.empty()) continue;  // leading blank lines
      break;
    }
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] != '0' && line[i] != '1')
        throw ParseError("line " + std::to_string(line_number) + ", column " +
                         std::to_string(i + 1) + ": expected '0' or '1', got '" +
                         std::string(1, line[i]) + "'");
    if (!rows.empty() && line.size() != rows.front().size())
      throw ParseError("line " + std::to_string(line_number) + ": row of length " +
                       std::to_string(line.size()) + " after rows of length " +
                       std::to_string(rows.front().size()));
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("no matrix rows in input");
  return BinaryMatrix::from_rows(rows);
}

BinaryMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_text(in);
}

std::string format_matrix_text(const BinaryMatrix& m) {
  std::string out;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    out += m.row_string(i);
    out += '\n';
  }
  return out;
}

std::vector<std::size_t> parse_word(const std::string& text) {
  std::vector<std::size_t> word;
  if (text.find_first_of(", \t") != std::string::npos) {
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      for (char c : token)
        if (c < '0' || c > '9')
          throw ParseError("word token '" + token + "' is not a number");
      word.push_back(static_cast<std::size_t>(std::stoull(token)));
      token.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ' || c == '\t')
        flush();
      else
        token += c;
    }
    flush();
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw ParseError(std::string("word letter '") + c +
                         "' is not a digit 1-9; use comma-separated letters "
                         "for larger vertex numbers");
      word.push_back(static_cast<std::size_t>(c - '0'));
    }
  }
  if (word.empty()) throw ParseError("empty word");
  return word;
}

std::string wr_status_short(WrStatus status) {
  switch (status) {
    case WrStatus::kWordRepresentable: return "WR";
    case WrStatus::kNonWordRepresentable: return "NWR";
    case WrStatus::kUndecided: return "UND";
  }
  return "UND";
}

nlohmann::json row_form_json(const RowForm& form) {
  if (form.wrap)
    return {{"shape", "wrap"},
            {"prefix", form.prefix},
            {"gap", form.gap},
            {"suffix", form.suffix}};
  return {{"shape", "interval"}, {"lo", form.lo}, {"hi", form.hi}};
}

nlohmann::json verdict_json(const WrVerdict& verdict) {
  nlohmann::json out;
  out["status"] = wr_status_name(verdict.status);
  out["stage"] = verdict.stage;
  const Reduction& reduction = verdict.reduction;
  out["reduced"] = {{"rows", reduction.matrix.rows()},
                    {"cols", reduction.matrix.cols()},
                    {"rowspec", reduction.matrix.rowspec()},
                    {"row_origin", reduction.row_origin},
                    {"col_origin", reduction.col_origin}};
  if (verdict.status == WrStatus::kWordRepresentable) {
    nlohmann::json witness;
    witness["column_order"] = verdict.column_order;
    std::vector<std::size_t> column_origin;
    column_origin.reserve(verdict.column_order.size());
    for (std::size_t col : verdict.column_order)
      column_origin.push_back(reduction.col_origin[col - 1]);
    witness["column_origin"] = column_origin;
    nlohmann::json forms = nlohmann::json::array();
    for (const RowForm& form : verdict.row_forms)
      forms.push_back(row_form_json(form));
    witness["row_forms"] = forms;
    out["witness"] = witness;
  }
  if (verdict.obstruction) {
    const Obstruction& obstruction = *verdict.obstruction;
    nlohmann::json node;
    node["kind"] = obstruction_kind_name(obstruction.kind);
    node["rows"] = obstruction.rows;
    node["columns"] = obstruction.columns;
    if (!obstruction.configuration.empty())
      node["configuration"] = obstruction.configuration;
    out["obstruction"] = node;
  }
  return out;
}

nlohmann::json iwr_json(const IwrReport& report) {
  nlohmann::json out;
  out["a"] = report.pair.a.rowspec();
  out["b"] = report.pair.b.rowspec();
  out["cap"] = report.cap;
  out["orbit"] = report.orbit_id;
  nlohmann::json result;
  switch (report.result.kind) {
    case IwrKind::kFinite:
      result["kind"] = "finite";
      result["value"] = report.result.value;
      if (!report.result.witness_kind.empty())
        result["witness_kind"] = report.result.witness_kind;
      break;
    case IwrKind::kInfinite: {
      result["kind"] = "infinite";
      const InfinityCertificate& certificate = *report.result.certificate;
      result["certificate"] = {
          {"kind", certificate_kind_name(certificate.kind)},
          {"patterns", certificate.patterns},
          {"detail", certificate.detail}};
      break;
    }
    case IwrKind::kLowerBound:
      result["kind"] = "lower_bound";
      result["value"] = report.result.value;
      break;
  }
  out["result"] = result;
  nlohmann::json trail = nlohmann::json::array();
  for (const PerKVerdict& v : report.per_k)
    trail.push_back({{"k", v.k},
                     {"status", wr_status_name(v.status)},
                     {"stage", v.stage},
                     {"chain", v.chain}});
  out["per_k"] = trail;
  return out;
}

std::string per_k_string(const IwrReport& report) {
  std::string out;
  for (const PerKVerdict& v : report.per_k) {
    if (!out.empty()) out += ';';
    out += std::to_string(v.k) + ":" + wr_status_short(v.status);
  }
  return out;
}

nlohmann::json classification_json(const Classification& classification) {
  nlohmann::json out;
  out["cap"] = classification.cap;
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseEntry& entry : classification.cases)
    cases.push_back({{"case", entry.case_number},
                     {"a", entry.a_spec},
                     {"b", entry.b_spec},
                     {"result", entry.result_string},
                     {"kind", entry.kind_string},
                     {"per_k", per_k_string(entry.report)}});
  out["cases"] = cases;
  out["inconsistencies"] = classification.inconsistencies;
  return out;
}

std::string classification_csv(const Classification& classification) {
  std::string out = "case,A,B,result,certificate_or_witness_kind,per_k_verdicts\n";
  for (const CaseEntry& entry : classification.cases) {
    out += std::to_string(entry.case_number) + ',' + entry.a_spec + ',' +
           entry.b_spec + ',' + entry.result_string + ',' +
           entry.kind_string + ',' + per_k_string(entry.report) + '\n';
  }
  return out;
}

std::vector<ExpectedRow> load_expected_csv(std::istream& in) {
  std::vector<ExpectedRow> rows;
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    if (!header_seen) {
      if (fields.size() < 4 || fields[0] != "case")
        throw ParseError("expected CSV header case,a,b,iwr");
      header_seen = true;
      continue;
    }
    if (fields.size() != 4)
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    ExpectedRow row;
    try {
      row.case_number = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": bad case number '" + fields[0] + "'");
    }
    row.a_spec = fields[1];
    row.b_spec = fields[2];
    row.iwr = fields[3];
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError("empty expected CSV");
  return rows;
}

std::vector<ExpectedRow> load_expected_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open expected CSV: " + path);
  return load_expected_csv(in);
}

std::vector<std::string> diff_against_expected(
    const Classification& classification,
    const std::vector<ExpectedRow>& expected) {
  std::vector<std::string> diffs;
  if (classification.cases.size() != expected.size())
    diffs.push_back("case count " + std::to_string(classification.cases.size()) +
                    " differs from expected " + std::to_string(expected.size()));
  const std::size_t n = std::min(classification.cases.size(), expected.size());
  for (std::size_t i = 0; i < n; ++i) {
    const CaseEntry& entry = classification.cases[i];
    const ExpectedRow& row = expected[i];
    if (entry.case_number != row.case_number) {
      diffs.push_back("row " + std::to_string(i + 1) + ": case " +
                      std::to_string(entry.case_number) + " vs expected " +
                      std::to_string(row.case_number));
      continue;
    }
    if (entry.a_spec != row.a_spec || entry.b_spec != row.b_spec)
      diffs.push_back("case " + std::to_string(entry.case_number) +
                      ": pair " + entry.a_spec + "," + entry.b_spec +
                      " vs expected " + row.a_spec + "," + row.b_spec);
    if (entry.result_string != row.iwr)
      diffs.push_back("case " + std::to_string(entry.case_number) +
                      ": result " + entry.result_string + " vs expected " +
                      row.iwr);
  }
  for (const std::string& inconsistency : classification.inconsistencies)
    diffs.push_back("inconsistency: " + inconsistency);
  return diffs;
}

}  // namespace wordrep

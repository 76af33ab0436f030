// SPDX-License-Identifier: MIT
//
// Command-line front end over the C API: decide word-representability of
// split graphs, iterate two-letter matrix substitutions, compute the index
// of word-representability, classify all 2x2 pairs, verify words, and
// cross-check against the orientation oracle.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordrep/wordrep.h"

#ifndef WORDREP_DEFAULT_EXPECTED_CSV
#define WORDREP_DEFAULT_EXPECTED_CSV ""
#endif

namespace {

using nlohmann::json;

constexpr int kExitRepresentable = 0;
constexpr int kExitNonRepresentable = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitError = 3;

struct MatrixHandle {
  wr_matrix* ptr = nullptr;
  MatrixHandle() = default;
  explicit MatrixHandle(wr_matrix* p) : ptr(p) {}
  MatrixHandle(const MatrixHandle&) = delete;
  MatrixHandle& operator=(const MatrixHandle&) = delete;
  ~MatrixHandle() { wr_matrix_free(ptr); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  wr_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// One matrix argument: either an inline '/'-separated rowspec or a file
// (with '-' for standard input).
struct MatrixArg {
  std::string inline_spec;
  std::string file;

  void add_to(CLI::App* cmd, const std::string& name,
              const std::string& what) {
    auto* spec = cmd->add_option("--" + name, inline_spec,
                                 what + " as a rowspec, e.g. 10/01");
    auto* path = cmd->add_option("--" + name + "-file", file,
                                 what + " file, one row per line ('-' for stdin)");
    spec->excludes(path);
  }

  wr_matrix* parse(const std::string& what) const {
    if (inline_spec.empty() && file.empty())
      throw std::runtime_error("missing " + what + ": pass an inline rowspec or a file");
    const std::string text = !inline_spec.empty() ? inline_spec : slurp(file);
    wr_matrix* m = wr_matrix_parse(text.c_str());
    if (!m) throw std::runtime_error(wr_last_error());
    return m;
  }
};

std::string form_text(const json& form) {
  if (form["shape"] == "wrap") {
    return "wrap 1^" + form["prefix"].dump() + " 0^" + form["gap"].dump() +
           " 1^" + form["suffix"].dump();
  }
  if (form["lo"].get<std::size_t>() == 0) return "empty";
  return "interval [" + form["lo"].dump() + "," + form["hi"].dump() + "]";
}

std::string join(const json& numbers) {
  std::string out;
  for (const auto& x : numbers) {
    if (!out.empty()) out += ' ';
    out += x.dump();
  }
  return out;
}

void print_verdict_text(const json& verdict, std::ostream& out) {
  out << "status: " << verdict["status"].get<std::string>() << " (stage "
      << verdict["stage"] << ")\n";
  const json& reduced = verdict["reduced"];
  out << "reduced matrix: " << reduced["rows"] << "x" << reduced["cols"];
  const std::string rowspec = reduced["rowspec"].get<std::string>();
  if (!rowspec.empty()) out << " [" << rowspec << "]";
  out << "\n";
  if (verdict.contains("witness")) {
    const json& witness = verdict["witness"];
    out << "witness column order: " << join(witness["column_order"]) << "\n";
    std::string forms;
    for (const auto& form : witness["row_forms"]) {
      if (!forms.empty()) forms += "; ";
      forms += form_text(form);
    }
    if (!forms.empty()) out << "row forms: " << forms << "\n";
  }
  if (verdict.contains("obstruction")) {
    const json& obstruction = verdict["obstruction"];
    out << "obstruction: " << obstruction["kind"].get<std::string>();
    if (obstruction.contains("configuration"))
      out << " " << obstruction["configuration"].get<std::string>();
    if (!obstruction["rows"].empty())
      out << ", rows " << join(obstruction["rows"]);
    if (!obstruction["columns"].empty())
      out << ", columns " << join(obstruction["columns"]);
    out << "\n";
  }
}

int status_exit_code(const std::string& status) {
  if (status == "word_representable") return kExitRepresentable;
  if (status == "non_word_representable") return kExitNonRepresentable;
  return kExitUndecided;
}

std::string iwr_result_text(const json& result) {
  const std::string kind = result["kind"].get<std::string>();
  if (kind == "finite") {
    std::string out = "IWR = " + result["value"].dump();
    if (result.contains("witness_kind"))
      out += " (" + result["witness_kind"].get<std::string>() + ")";
    return out;
  }
  if (kind == "infinite") {
    const json& certificate = result["certificate"];
    return "IWR = inf (certificate: " +
           certificate["kind"].get<std::string>() + ": " +
           certificate["detail"].get<std::string>() + ")";
  }
  return "IWR >= " + result["value"].dump() +
         " (lower bound; increase --cap to decide)";
}

void print_iwr_text(const json& report, std::ostream& out) {
  out << "pair: a=" << report["a"].get<std::string>()
      << " b=" << report["b"].get<std::string>() << " (cap "
      << report["cap"] << ")\n";
  for (const auto& v : report["per_k"]) {
    const std::string status = v["status"].get<std::string>();
    out << "k=" << v["k"] << ": " << status;
    if (v["k"].get<std::size_t>() > 0) out << " (stage " << v["stage"] << ")";
    if (v["chain"].get<bool>()) out << " [chain]";
    out << "\n";
  }
  out << iwr_result_text(report["result"]) << "\n";
}

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitError;
}

int fail_api() { return fail(wr_last_error()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word-representability of split graphs and matrix morphisms"};
  app.require_subcommand(1);

  std::size_t n_max = 10;
  std::size_t edge_budget = 24;
  app.add_option("--n-max", n_max,
                 "column budget for the exhaustive order search")
      ->capture_default_str();
  app.add_option("--edge-budget", edge_budget,
                 "edge budget for the orientation oracle")
      ->capture_default_str();

  // decide
  auto* decide = app.add_subcommand(
      "decide", "decide word-representability of a split graph G(M)");
  MatrixArg decide_matrix;
  decide_matrix.add_to(decide, "matrix", "matrix M");
  std::string decide_format = "text";
  decide->add_option("--format", decide_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // iterate
  auto* iterate = app.add_subcommand(
      "iterate", "apply the substitution 0->A, 1->B k times to [0]");
  MatrixArg iterate_a, iterate_b;
  iterate_a.add_to(iterate, "a", "block A");
  iterate_b.add_to(iterate, "b", "block B");
  unsigned iterate_k = 1;
  iterate->add_option("-k,--k", iterate_k, "number of substitution steps")
      ->capture_default_str();
  std::string iterate_format = "text";
  iterate->add_option("--format", iterate_format, "text, rowspec or json")
      ->check(CLI::IsMember({"text", "rowspec", "json"}))
      ->capture_default_str();

  // iwr
  auto* iwr_cmd = app.add_subcommand(
      "iwr", "index of word-representability of the pair (A, B)");
  MatrixArg iwr_a, iwr_b;
  iwr_a.add_to(iwr_cmd, "a", "block A");
  iwr_b.add_to(iwr_cmd, "b", "block B");
  std::size_t iwr_cap = 6;
  iwr_cmd->add_option("--cap", iwr_cap, "largest iterate to evaluate")
      ->capture_default_str();
  std::string iwr_format = "text";
  iwr_cmd->add_option("--format", iwr_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // classify
  auto* classify = app.add_subcommand(
      "classify", "classify all 2x2 pairs into the 129 table cases");
  std::size_t classify_cap = 6;
  classify->add_option("--cap", classify_cap, "largest iterate to evaluate")
      ->capture_default_str();
  unsigned jobs = 1;
  classify->add_option("--jobs", jobs, "parallel workers")
      ->capture_default_str();
  std::string classify_format = "csv";
  classify->add_option("--format", classify_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  std::string out_path;
  classify->add_option("--out", out_path,
                       "write the table here instead of stdout");
  std::string expected_path = WORDREP_DEFAULT_EXPECTED_CSV;
  classify->add_option("--expected", expected_path,
                       "expected-results CSV to diff against ('' to skip)")
      ->capture_default_str();

  // verify-word
  auto* verify = app.add_subcommand(
      "verify-word", "check whether a word represents a graph");
  std::string word;
  verify->add_option("--word", word,
                     "word: digits (14213243) or comma-separated letters")
      ->required();
  MatrixArg verify_matrix;
  verify_matrix.add_to(verify, "matrix", "adjacency matrix of the graph");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "compare the staged decision with the orientation oracle");
  MatrixArg oracle_matrix;
  oracle_matrix.add_to(oracle, "matrix", "matrix M");
  std::string oracle_format = "text";
  oracle->add_option("--format", oracle_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (decide->parsed()) {
      MatrixHandle m(decide_matrix.parse("matrix"));
      int status = 0;
      char* verdict_text = nullptr;
      if (wr_decide(m.ptr, n_max, edge_budget, &status, &verdict_text) != WR_OK)
        return fail_api();
      const std::string verdict = take_string(verdict_text);
      if (decide_format == "json")
        std::cout << verdict << "\n";
      else
        print_verdict_text(json::parse(verdict), std::cout);
      return status;
    }

    if (iterate->parsed()) {
      MatrixHandle a(iterate_a.parse("block A"));
      MatrixHandle b(iterate_b.parse("block B"));
      wr_matrix* out = nullptr;
      if (wr_iterate(a.ptr, b.ptr, iterate_k, &out) != WR_OK)
        return fail_api();
      MatrixHandle m(out);
      if (iterate_format == "rowspec") {
        std::cout << take_string(wr_matrix_rowspec(m.ptr)) << "\n";
      } else if (iterate_format == "json") {
        json j{{"rows", wr_matrix_rows(m.ptr)},
               {"cols", wr_matrix_cols(m.ptr)},
               {"rowspec", take_string(wr_matrix_rowspec(m.ptr))}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << take_string(wr_matrix_text(m.ptr));
      }
      return 0;
    }

    if (iwr_cmd->parsed()) {
      MatrixHandle a(iwr_a.parse("block A"));
      MatrixHandle b(iwr_b.parse("block B"));
      char* report_text = nullptr;
      if (wr_iwr(a.ptr, b.ptr, iwr_cap, n_max, edge_budget, &report_text) !=
          WR_OK)
        return fail_api();
      const std::string report = take_string(report_text);
      if (iwr_format == "json")
        std::cout << report << "\n";
      else
        print_iwr_text(json::parse(report), std::cout);
      return 0;
    }

    if (classify->parsed()) {
      char* table_text = nullptr;
      char* diff_text = nullptr;
      const char* expected =
          expected_path.empty() ? nullptr : expected_path.c_str();
      if (wr_classify(classify_cap, jobs, n_max, edge_budget,
                      classify_format == "csv" ? 0 : 1, expected, &table_text,
                      &diff_text) != WR_OK)
        return fail_api();
      const std::string table = take_string(table_text);
      const std::string diffs = take_string(diff_text);
      if (out_path.empty()) {
        std::cout << table;
      } else {
        std::ofstream out(out_path);
        if (!out) return fail("cannot write " + out_path);
        out << table;
        if (!out.flush()) return fail("cannot write " + out_path);
      }
      if (expected) {
        std::size_t count = 0;
        std::istringstream lines(diffs);
        for (std::string line; std::getline(lines, line);) {
          std::cerr << "diff: " << line << "\n";
          ++count;
        }
        std::cerr << (count == 0 ? "table matches the expected results"
                                 : "diffs against expected results: " +
                                       std::to_string(count))
                  << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      MatrixHandle m(verify_matrix.parse("adjacency matrix"));
      int result = 0;
      if (wr_verify_word(word.c_str(), m.ptr, &result) != WR_OK)
        return fail_api();
      std::cout << (result ? "true" : "false") << "\n";
      return result ? 0 : 1;
    }

    if (oracle->parsed()) {
      MatrixHandle m(oracle_matrix.parse("matrix"));
      char* report_text = nullptr;
      if (wr_oracle(m.ptr, n_max, edge_budget, &report_text) != WR_OK)
        return fail_api();
      const std::string report_string = take_string(report_text);
      const json report = json::parse(report_string);
      if (oracle_format == "json") {
        std::cout << report_string << "\n";
      } else {
        print_verdict_text(report["decide"], std::cout);
        const json& oracle_part = report["oracle"];
        std::cout << "oracle: " << oracle_part["status"].get<std::string>();
        if (oracle_part.contains("reason"))
          std::cout << " (" << oracle_part["reason"].get<std::string>() << ")";
        std::cout << "\n";
        if (report["agree"].is_null())
          std::cout << "agree: unknown\n";
        else
          std::cout << "agree: " << (report["agree"].get<bool>() ? "yes" : "no")
                    << "\n";
      }
      return status_exit_code(report["decide"]["status"].get<std::string>());
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return kExitError;
}

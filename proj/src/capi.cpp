// SPDX-License-Identifier: MIT
#include "wordrep/wordrep.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "errors.hpp"
#include "iwr.hpp"
#include "semitransitive.hpp"
#include "splitgraph.hpp"
#include "textio.hpp"
#include "wrdecision.hpp"

namespace {

thread_local std::string g_last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int set_error(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions into error codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const wordrep::ParseError& e) {
    return set_error(WR_ERR_PARSE, e.what());
  } catch (const wordrep::BudgetError& e) {
    return set_error(WR_ERR_BUDGET, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(WR_ERR_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(WR_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return set_error(WR_ERR_INTERNAL, e.what());
  }
}

wordrep::DecideOptions make_options(size_t search_cols_max,
                                    size_t oracle_edge_budget) {
  wordrep::DecideOptions options;
  if (search_cols_max != 0) options.search_cols_max = search_cols_max;
  if (oracle_edge_budget != 0) options.oracle_edge_budget = oracle_edge_budget;
  return options;
}

int status_code(wordrep::WrStatus status) {
  switch (status) {
    case wordrep::WrStatus::kWordRepresentable: return WR_STATUS_REPRESENTABLE;
    case wordrep::WrStatus::kNonWordRepresentable:
      return WR_STATUS_NON_REPRESENTABLE;
    case wordrep::WrStatus::kUndecided: return WR_STATUS_UNDECIDED;
  }
  return WR_STATUS_UNDECIDED;
}

wordrep::Adjacency adjacency_from(const wordrep::BinaryMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("adjacency matrix must be square");
  wordrep::Adjacency g(m.rows());
  for (std::size_t u = 1; u <= m.rows(); ++u) {
    if (m.entry(u, u))
      throw std::invalid_argument("adjacency matrix must have a zero diagonal");
    for (std::size_t v = u + 1; v <= m.cols(); ++v) {
      if (m.entry(u, v) != m.entry(v, u))
        throw std::invalid_argument("adjacency matrix must be symmetric");
      if (m.entry(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

struct wr_matrix {
  wordrep::BinaryMatrix m;
};

extern "C" {

const char* wr_last_error(void) { return g_last_error.c_str(); }

const char* wr_version(void) { return "1.0.0"; }

void wr_string_free(char* s) { std::free(s); }

wr_matrix* wr_matrix_parse(const char* text) {
  if (!text) {
    set_error(WR_ERR_INVALID, "null matrix text");
    return nullptr;
  }
  wr_matrix* out = nullptr;
  const std::string input(text);
  const int code = guarded([&] {
    wordrep::BinaryMatrix m =
        input.find('\n') != std::string::npos
            ? wordrep::parse_matrix_text(input)
            : wordrep::BinaryMatrix::parse_rowspec(input);
    out = new wr_matrix{std::move(m)};
    return WR_OK;
  });
  return code == WR_OK ? out : nullptr;
}

void wr_matrix_free(wr_matrix* m) { delete m; }

size_t wr_matrix_rows(const wr_matrix* m) { return m ? m->m.rows() : 0; }

size_t wr_matrix_cols(const wr_matrix* m) { return m ? m->m.cols() : 0; }

int wr_matrix_entry(const wr_matrix* m, size_t row, size_t col) {
  if (!m || row < 1 || row > m->m.rows() || col < 1 || col > m->m.cols()) {
    set_error(WR_ERR_INVALID, "matrix entry out of range");
    return -1;
  }
  return m->m.entry(row, col) ? 1 : 0;
}

char* wr_matrix_rowspec(const wr_matrix* m) {
  return m ? duplicate(m->m.rowspec()) : nullptr;
}

char* wr_matrix_text(const wr_matrix* m) {
  return m ? duplicate(wordrep::format_matrix_text(m->m)) : nullptr;
}

int wr_iterate(const wr_matrix* a, const wr_matrix* b, unsigned k,
               wr_matrix** out) {
  if (!a || !b || !out) return set_error(WR_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new wr_matrix{wordrep::iterate_morphism(a->m, b->m, k)};
    return WR_OK;
  });
}

int wr_decide(const wr_matrix* m, size_t search_cols_max,
              size_t oracle_edge_budget, int* status, char** verdict_json) {
  if (!m || !status) return set_error(WR_ERR_INVALID, "null argument");
  return guarded([&] {
    const wordrep::WrVerdict verdict =
        wordrep::decide_split(m->m, make_options(search_cols_max,
                                                 oracle_edge_budget));
    *status = status_code(verdict.status);
    if (verdict_json)
      *verdict_json = duplicate(wordrep::verdict_json(verdict).dump(2));
    return WR_OK;
  });
}

int wr_iwr(const wr_matrix* a, const wr_matrix* b, size_t cap,
           size_t search_cols_max, size_t oracle_edge_budget,
           char** report_json) {
  if (!a || !b || !report_json)
    return set_error(WR_ERR_INVALID, "null argument");
  return guarded([&] {
    const wordrep::IwrReport report =
        wordrep::iwr(wordrep::MorphismPair{a->m, b->m}, cap == 0 ? 6 : cap,
                     make_options(search_cols_max, oracle_edge_budget));
    *report_json = duplicate(wordrep::iwr_json(report).dump(2));
    return WR_OK;
  });
}

int wr_classify(size_t cap, unsigned jobs, size_t search_cols_max,
                size_t oracle_edge_budget, int format,
                const char* expected_csv_path, char** table_out,
                char** diff_out) {
  if (!table_out) return set_error(WR_ERR_INVALID, "null argument");
  if (format != 0 && format != 1)
    return set_error(WR_ERR_INVALID, "format must be 0 (csv) or 1 (json)");
  return guarded([&] {
    const wordrep::Classification classification = wordrep::classify_all_2x2(
        cap == 0 ? 6 : cap, jobs == 0 ? 1 : jobs,
        make_options(search_cols_max, oracle_edge_budget));
    *table_out = duplicate(
        format == 0 ? wordrep::classification_csv(classification)
                    : wordrep::classification_json(classification).dump(2));
    if (diff_out) *diff_out = nullptr;
    if (expected_csv_path) {
      const auto expected = wordrep::load_expected_csv_file(expected_csv_path);
      const auto diffs =
          wordrep::diff_against_expected(classification, expected);
      std::string text;
      for (const std::string& d : diffs) {
        text += d;
        text += '\n';
      }
      if (diff_out) *diff_out = duplicate(text);
    }
    return WR_OK;
  });
}

int wr_verify_word(const char* word, const wr_matrix* adjacency, int* result) {
  if (!word || !adjacency || !result)
    return set_error(WR_ERR_INVALID, "null argument");
  return guarded([&] {
    const wordrep::Adjacency g = adjacency_from(adjacency->m);
    *result = wordrep::verify_word(wordrep::parse_word(word), g) ? 1 : 0;
    return WR_OK;
  });
}

int wr_oracle(const wr_matrix* m, size_t search_cols_max,
              size_t oracle_edge_budget, char** report_json) {
  if (!m || !report_json) return set_error(WR_ERR_INVALID, "null argument");
  return guarded([&] {
    const wordrep::DecideOptions options =
        make_options(search_cols_max, oracle_edge_budget);
    const wordrep::WrVerdict verdict = wordrep::decide_split(m->m, options);
    nlohmann::json out;
    out["decide"] = wordrep::verdict_json(verdict);
    const wordrep::Adjacency g =
        wordrep::split_adjacency(verdict.reduction.matrix);
    nlohmann::json oracle;
    bool agree_known = false;
    bool agree = false;
    if (g.edge_count() > options.oracle_edge_budget) {
      oracle["status"] = "declined";
      oracle["reason"] = "the reduced split graph has " +
                         std::to_string(g.edge_count()) +
                         " edges, over the budget of " +
                         std::to_string(options.oracle_edge_budget);
    } else {
      const auto orientation =
          wordrep::exists_semi_transitive(g, options.oracle_edge_budget);
      if (orientation) {
        oracle["status"] = wr_status_name(wordrep::WrStatus::kWordRepresentable);
        nlohmann::json arcs = nlohmann::json::array();
        for (const auto& [tail, head] : orientation->arcs())
          arcs.push_back({tail, head});
        oracle["arcs"] = arcs;
      } else {
        oracle["status"] =
            wr_status_name(wordrep::WrStatus::kNonWordRepresentable);
      }
      if (verdict.status != wordrep::WrStatus::kUndecided) {
        agree_known = true;
        agree = (verdict.status == wordrep::WrStatus::kWordRepresentable) ==
                orientation.has_value();
      }
    }
    out["oracle"] = oracle;
    if (agree_known)
      out["agree"] = agree;
    else
      out["agree"] = nullptr;
    *report_json = duplicate(out.dump(2));
    return WR_OK;
  });
}

}  // extern "C"

/* SPDX-License-Identifier: MIT */
#ifndef WORDREP_WORDREP_H
#define WORDREP_WORDREP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the word-representability library. Matrices are opaque
 * handles; calls return WR_OK or an error code, with a human-readable
 * message available from wr_last_error(). Strings returned through out
 * parameters are heap-allocated and must be released with wr_string_free;
 * matrices with wr_matrix_free.
 */

typedef struct wr_matrix wr_matrix;

enum {
  WR_OK = 0,
  WR_ERR_PARSE = 1,    /* malformed input text */
  WR_ERR_INVALID = 2,  /* arguments violate a precondition */
  WR_ERR_BUDGET = 3,   /* a size or search budget was exceeded */
  WR_ERR_INTERNAL = 4, /* unexpected failure */
};

enum {
  WR_STATUS_REPRESENTABLE = 0,
  WR_STATUS_NON_REPRESENTABLE = 1,
  WR_STATUS_UNDECIDED = 2,
};

/* Message describing the most recent failure on this thread. */
const char* wr_last_error(void);

const char* wr_version(void);

void wr_string_free(char* s);

/*
 * Parses either a '/'-separated rowspec ("1010/0110") or matrix text with
 * one row per line. Returns NULL on parse failure.
 */
wr_matrix* wr_matrix_parse(const char* text);
void wr_matrix_free(wr_matrix* m);

size_t wr_matrix_rows(const wr_matrix* m);
size_t wr_matrix_cols(const wr_matrix* m);
/* 1-based; returns 0 or 1, or -1 on out-of-range indices. */
int wr_matrix_entry(const wr_matrix* m, size_t row, size_t col);
/* Rows joined by '/'. */
char* wr_matrix_rowspec(const wr_matrix* m);
/* One row per line with a trailing newline. */
char* wr_matrix_text(const wr_matrix* m);

/*
 * k-fold substitution 0 -> a, 1 -> b starting from the 1x1 zero matrix.
 * a and b must have equal nonzero dimensions.
 */
int wr_iterate(const wr_matrix* a, const wr_matrix* b, unsigned k,
               wr_matrix** out);

/*
 * Decides word-representability of the split graph of m. status receives a
 * WR_STATUS_* value; verdict_json (optional, may be NULL) receives the full
 * verdict: status, deciding stage, the reduced matrix, and a witness column
 * order or an obstruction. search_cols_max bounds the exhaustive
 * column-order stage, oracle_edge_budget the orientation oracle; pass 0 for
 * the defaults (10 and 24).
 */
int wr_decide(const wr_matrix* m, size_t search_cols_max,
              size_t oracle_edge_budget, int* status, char** verdict_json);

/*
 * Index of word-representability of the pair (a, b) up to cap iterations.
 * report_json receives per-iterate verdicts and the result: a finite index,
 * an infinity certificate, or a lower bound.
 */
int wr_iwr(const wr_matrix* a, const wr_matrix* b, size_t cap,
           size_t search_cols_max, size_t oracle_edge_budget,
           char** report_json);

/*
 * Classifies all 2x2 morphism pairs into the 129 table cases. format 0
 * writes CSV, 1 writes JSON, into table_out. When expected_csv_path is not
 * NULL, the table is compared against that file and diff_out (when not
 * NULL) receives one mismatch per line, empty on agreement.
 */
int wr_classify(size_t cap, unsigned jobs, size_t search_cols_max,
                size_t oracle_edge_budget, int format,
                const char* expected_csv_path, char** table_out,
                char** diff_out);

/*
 * Whether the word represents the graph given by a square symmetric 0/1
 * adjacency matrix with a zero diagonal. The word is one digit per letter,
 * or comma-separated numbers. result receives 1 or 0.
 */
int wr_verify_word(const char* word, const wr_matrix* adjacency, int* result);

/*
 * Runs the orientation oracle on the reduced split graph of m and compares
 * it with the staged decision procedure. report_json receives both
 * verdicts, the oracle's orientation when one exists, and an agreement
 * flag; the oracle declines (without error) when the graph exceeds the
 * edge budget.
 */
int wr_oracle(const wr_matrix* m, size_t search_cols_max,
              size_t oracle_edge_budget, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* WORDREP_WORDREP_H */

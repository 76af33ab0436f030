// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "wrdecision.hpp"

namespace wordrep {

// A two-letter substitution on binary matrices: 0 expands to block a, 1 to
// block b. Both blocks must have the same shape.
struct MorphismPair {
  BinaryMatrix a;
  BinaryMatrix b;

  friend bool operator==(const MorphismPair& x, const MorphismPair& y) = default;
};

// Structural reasons why every iterate of a pair stays word-representable.
enum class CertificateKind {
  // a is the zero matrix: every iterate is a zero matrix.
  kAZero,
  // Every row of a and b is constant: so is every row of every iterate.
  kAllZeroOrOneRows,
  // Every column of a and b is constant: all rows of every iterate coincide.
  kAllZeroOrOneCols,
  // a = b with rows + cols <= 6: iterates collapse to blocks of a, and split
  // graphs this small are always word-representable.
  kEqualSmall,
  // a = b and G(a) is word-representable, which settles every iterate.
  kEqualDecided,
  // 2x2 only: the four expansions u(100), l(100), u(101), l(101) are
  // pairwise comparable, forcing every iterate's row set into a chain.
  kComparable100_101,
  // 2x2 only: u(0) = l(1), u(1) = l(0), and each is the complement of its
  // counterpart; every iterate has exactly one complementary row pair.
  kComplementaryPair,
  // 2x2 only: up to simultaneous row/column swaps the pair is
  // a = [[1,0],[0,0]], b = [[1,0],[0,1]]; iterate rows split into blocks
  // with pairwise disjoint supports.
  kConstantUpperDelayLower,
};

std::string certificate_kind_name(CertificateKind kind);

struct InfinityCertificate {
  CertificateKind kind;
  // Supporting data, as row patterns (for example the four compared
  // expansions of kComparable100_101).
  std::vector<std::string> patterns;
  std::string detail;
};

// The first applicable certificate, in the declaration order of
// CertificateKind, or nullopt when none applies.
std::optional<InfinityCertificate> infinity_certificate(
    const MorphismPair& pair, const DecideOptions& options = {});

// Re-checks the premise of a certificate against the pair.
bool validate_certificate(const InfinityCertificate& certificate,
                          const MorphismPair& pair,
                          const DecideOptions& options = {});

// Whether the distinct rows of the k-th iterate form a chain under the
// inclusion order; a chain implies word-representability of that iterate.
// 2x2 pairs only. Throws BudgetError when the iterate exceeds the budget.
bool total_order_check(const MorphismPair& pair, std::size_t k,
                       std::uint64_t cell_budget = kDefaultCellBudget);

struct PerKVerdict {
  std::size_t k = 0;
  WrStatus status = WrStatus::kUndecided;
  int stage = 0;
  // Distinct rows of the iterate form a chain (recorded for 2x2 pairs).
  bool chain = false;
};

enum class IwrKind { kFinite, kInfinite, kLowerBound };

struct IwrResult {
  IwrKind kind = IwrKind::kLowerBound;
  // kFinite: the first k whose iterate is not word-representable.
  // kLowerBound: the index is at least this value.
  std::size_t value = 0;
  std::optional<InfinityCertificate> certificate;  // set for kInfinite
  // Obstruction kind at the failing iterate, for kFinite.
  std::string witness_kind;
};

std::string iwr_result_string(const IwrResult& result);

struct IwrReport {
  MorphismPair pair;
  std::size_t cap = 0;
  std::vector<PerKVerdict> per_k;
  IwrResult result;
  // Canonical orbit representative, serialized as "a rowspec|b rowspec".
  std::string orbit_id;
};

// The index of word-representability: iterates are decided for k = 1..cap
// in order (k = 0 is a one-vertex graph, always representable). The result
// is Finite at the first non-representable k; otherwise Infinite when a
// certificate fires; otherwise a lower bound of cap+1. When the bottom-left
// entry of a is 1, iterates are not nested, so every k <= cap is evaluated
// even after a failure; when it is 0, evaluation stops at the first failure.
// An undecided iterate before any failure downgrades the result to a lower
// bound at that k.
IwrReport iwr(const MorphismPair& pair, std::size_t cap = 6,
              const DecideOptions& options = {});

// The lexicographically least pair reachable by one simultaneous row
// permutation and one simultaneous column permutation. The index of
// word-representability is constant on these orbits. Throws BudgetError
// beyond 6 rows or columns.
MorphismPair equivalence_orbit(const MorphismPair& pair);

std::string pair_key(const MorphismPair& pair);

// The table case number (1..129) of a 2x2 pair: case 1 when a is zero,
// otherwise the case of the pair itself when a is one of the eight listed
// blocks, otherwise the least case among its simultaneous-swap images.
int case_number_for(const MorphismPair& pair);

// The listed representative pair of a case number; case 1 uses b = zero.
MorphismPair case_pair(int case_number);

struct CaseEntry {
  int case_number = 0;
  std::string a_spec;
  std::string b_spec;  // "*" for case 1, where b is arbitrary
  IwrReport report;
  std::string result_string;
  // Certificate name for infinite results, obstruction kind of the failing
  // iterate for finite ones, "none" otherwise.
  std::string kind_string;
};

struct Classification {
  std::size_t cap = 0;
  std::vector<CaseEntry> cases;         // the 129 cases in order
  std::vector<IwrReport> pair_reports;  // all 256 pairs, index a*16 + b
  std::vector<int> pair_case;           // case number per pair index
  // Disagreements between pairs of the same case, or certificates firing on
  // pairs with a finite result. Empty on a clean run.
  std::vector<std::string> inconsistencies;
};

// Nibble encoding of 2x2 matrices used for pair indices: bit 3 = entry
// (1,1), bit 2 = (1,2), bit 1 = (2,1), bit 0 = (2,2).
unsigned nibble_of(const BinaryMatrix& m);
BinaryMatrix matrix_of_nibble(unsigned nibble);

// Evaluates iwr for all 256 pairs of 2x2 matrices and groups them into the
// 129 table cases. jobs > 1 distributes pairs over threads; the result is
// assembled deterministically either way.
Classification classify_all_2x2(std::size_t cap = 6, unsigned jobs = 1,
                                const DecideOptions& options = {});

// An aligned 2x2 subpair with a finite index at most k, if any: choosing
// rows r1 < r2 and columns c1 < c2 of both matrices yields a pair whose
// iterate at some l <= k is non-representable, which makes the k-th iterate
// of the full pair non-representable as well.
struct SubpairWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  MorphismPair sub;
  std::size_t failing_k = 0;
};

std::optional<SubpairWitness> screen_by_submatrices(
    const MorphismPair& pair, std::size_t k, const DecideOptions& options = {});

}  // namespace wordrep

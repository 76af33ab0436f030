// SPDX-License-Identifier: MIT
#include "iwr.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "errors.hpp"
#include "rowpattern.hpp"

namespace wordrep {

namespace {

void check_pair(const MorphismPair& pair) {
  if (pair.a.rows() != pair.b.rows() || pair.a.cols() != pair.b.cols())
    throw std::invalid_argument("morphism pair blocks must have equal shapes");
  if (pair.a.empty())
    throw std::invalid_argument("morphism pair blocks must be nonempty");
}

bool is_2x2(const MorphismPair& pair) {
  return pair.a.rows() == 2 && pair.a.cols() == 2;
}

bool all_rows_constant(const BinaryMatrix& m) {
  for (std::size_t i = 1; i <= m.rows(); ++i)
    if (!m.row_all_zeros(i) && !m.row_all_ones(i)) return false;
  return true;
}

bool is_zero(const BinaryMatrix& m) {
  for (std::size_t i = 1; i <= m.rows(); ++i)
    if (!m.row_all_zeros(i)) return false;
  return true;
}

BinaryMatrix swapped(const BinaryMatrix& m, bool swap_rows, bool swap_cols) {
  BinaryMatrix out = m;
  if (swap_rows) {
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 1);
    std::reverse(order.begin(), order.end());
    out = apply_row_order(out, order);
  }
  if (swap_cols) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 1);
    std::reverse(order.begin(), order.end());
    out = apply_column_order(out, order);
  }
  return out;
}

// The four letterwise expansions whose comparability forces every iterate's
// row set into a chain.
std::array<RowPattern, 4> boundary_expansions(const MorphismPair& pair) {
  const RowPattern s100("100");
  const RowPattern s101("101");
  return {expand_u(s100, pair.a, pair.b), expand_l(s100, pair.a, pair.b),
          expand_u(s101, pair.a, pair.b), expand_l(s101, pair.a, pair.b)};
}

bool premise_a_zero(const MorphismPair& pair) { return is_zero(pair.a); }

bool premise_rows_constant(const MorphismPair& pair) {
  return all_rows_constant(pair.a) && all_rows_constant(pair.b);
}

bool premise_cols_constant(const MorphismPair& pair) {
  return all_rows_constant(pair.a.transposed()) &&
         all_rows_constant(pair.b.transposed());
}

bool premise_equal_small(const MorphismPair& pair) {
  return pair.a == pair.b && pair.a.rows() + pair.a.cols() <= 6;
}

bool premise_equal_decided(const MorphismPair& pair,
                           const DecideOptions& options) {
  return pair.a == pair.b &&
         decide_split(pair.a, options).status == WrStatus::kWordRepresentable;
}

bool premise_comparable(const MorphismPair& pair) {
  if (!is_2x2(pair)) return false;
  const auto four = boundary_expansions(pair);
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j)
      if (!pattern_leq(four[i], four[j]) && !pattern_leq(four[j], four[i]))
        return false;
  return true;
}

bool premise_complementary(const MorphismPair& pair) {
  if (!is_2x2(pair)) return false;
  const RowPattern u0 = row_pattern(pair.a, 1);
  const RowPattern l0 = row_pattern(pair.a, 2);
  const RowPattern u1 = row_pattern(pair.b, 1);
  const RowPattern l1 = row_pattern(pair.b, 2);
  return u0 == l1 && u1 == l0 && u0 == l0.complement() &&
         u1 == l1.complement();
}

// The transform, if any, taking the pair onto a = [[1,0],[0,0]],
// b = [[1,0],[0,1]].
std::optional<std::pair<bool, bool>> delay_transform(const MorphismPair& pair) {
  if (!is_2x2(pair)) return std::nullopt;
  static const BinaryMatrix target_a = BinaryMatrix::parse_rowspec("10/00");
  static const BinaryMatrix target_b = BinaryMatrix::parse_rowspec("10/01");
  for (bool swap_rows : {false, true})
    for (bool swap_cols : {false, true})
      if (swapped(pair.a, swap_rows, swap_cols) == target_a &&
          swapped(pair.b, swap_rows, swap_cols) == target_b)
        return std::make_pair(swap_rows, swap_cols);
  return std::nullopt;
}

std::string swap_name(bool swap_rows, bool swap_cols) {
  if (swap_rows && swap_cols) return "row and column swap";
  if (swap_rows) return "row swap";
  if (swap_cols) return "column swap";
  return "identity";
}

}  // namespace

std::string certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kAZero: return "a_zero";
    case CertificateKind::kAllZeroOrOneRows: return "all_zero_or_one_rows";
    case CertificateKind::kAllZeroOrOneCols: return "all_zero_or_one_cols";
    case CertificateKind::kEqualSmall: return "equal_small";
    case CertificateKind::kEqualDecided: return "equal_decided";
    case CertificateKind::kComparable100_101: return "comparable_100_101";
    case CertificateKind::kComplementaryPair: return "complementary_pair";
    case CertificateKind::kConstantUpperDelayLower:
      return "constant_upper_delay_lower";
  }
  return "unknown";
}

std::optional<InfinityCertificate> infinity_certificate(
    const MorphismPair& pair, const DecideOptions& options) {
  check_pair(pair);
  if (premise_a_zero(pair))
    return InfinityCertificate{CertificateKind::kAZero, {},
                               "every iterate is a zero matrix"};
  if (premise_rows_constant(pair))
    return InfinityCertificate{CertificateKind::kAllZeroOrOneRows, {},
                               "every row of both blocks is constant"};
  if (premise_cols_constant(pair))
    return InfinityCertificate{CertificateKind::kAllZeroOrOneCols, {},
                               "every column of both blocks is constant"};
  if (premise_equal_small(pair))
    return InfinityCertificate{
        CertificateKind::kEqualSmall, {},
        "blocks are equal with at most 6 rows and columns combined"};
  if (premise_equal_decided(pair, options))
    return InfinityCertificate{
        CertificateKind::kEqualDecided, {},
        "blocks are equal and the block's split graph is word-representable"};
  if (premise_comparable(pair)) {
    const auto four = boundary_expansions(pair);
    InfinityCertificate certificate{CertificateKind::kComparable100_101, {},
                                    "u(100), l(100), u(101), l(101) form a chain"};
    for (const RowPattern& p : four) certificate.patterns.push_back(p.str());
    return certificate;
  }
  if (premise_complementary(pair)) {
    InfinityCertificate certificate{
        CertificateKind::kComplementaryPair, {},
        "expansions pair up as complements; every iterate has one "
        "complementary row pair"};
    certificate.patterns = {row_pattern(pair.a, 1).str(),
                            row_pattern(pair.a, 2).str(),
                            row_pattern(pair.b, 1).str(),
                            row_pattern(pair.b, 2).str()};
    return certificate;
  }
  if (auto transform = delay_transform(pair))
    return InfinityCertificate{
        CertificateKind::kConstantUpperDelayLower, {},
        "matches a = 10/00, b = 10/01 under " +
            swap_name(transform->first, transform->second)};
  return std::nullopt;
}

bool validate_certificate(const InfinityCertificate& certificate,
                          const MorphismPair& pair,
                          const DecideOptions& options) {
  check_pair(pair);
  switch (certificate.kind) {
    case CertificateKind::kAZero: return premise_a_zero(pair);
    case CertificateKind::kAllZeroOrOneRows: return premise_rows_constant(pair);
    case CertificateKind::kAllZeroOrOneCols: return premise_cols_constant(pair);
    case CertificateKind::kEqualSmall: return premise_equal_small(pair);
    case CertificateKind::kEqualDecided:
      return premise_equal_decided(pair, options);
    case CertificateKind::kComparable100_101: return premise_comparable(pair);
    case CertificateKind::kComplementaryPair: return premise_complementary(pair);
    case CertificateKind::kConstantUpperDelayLower:
      return delay_transform(pair).has_value();
  }
  return false;
}

bool total_order_check(const MorphismPair& pair, std::size_t k,
                       std::uint64_t cell_budget) {
  check_pair(pair);
  if (!is_2x2(pair))
    throw std::invalid_argument("total_order_check: pair must be 2x2");
  const BinaryMatrix m =
      iterate_morphism(pair.a, pair.b, static_cast<unsigned>(k), cell_budget);
  return is_total_order(row_patterns(m));
}

std::string iwr_result_string(const IwrResult& result) {
  switch (result.kind) {
    case IwrKind::kFinite: return std::to_string(result.value);
    case IwrKind::kInfinite: return "inf";
    case IwrKind::kLowerBound:
      return "lower_bound(" + std::to_string(result.value) + ")";
  }
  return "unknown";
}

std::string pair_key(const MorphismPair& pair) {
  return pair.a.rowspec() + "|" + pair.b.rowspec();
}

MorphismPair equivalence_orbit(const MorphismPair& pair) {
  check_pair(pair);
  const std::size_t rows = pair.a.rows();
  const std::size_t cols = pair.a.cols();
  if (rows > 6 || cols > 6)
    throw BudgetError("equivalence_orbit: matrices larger than 6x6");
  std::vector<std::size_t> row_order(rows);
  std::iota(row_order.begin(), row_order.end(), 1);
  std::optional<MorphismPair> best;
  std::string best_key;
  do {
    std::vector<std::size_t> col_order(cols);
    std::iota(col_order.begin(), col_order.end(), 1);
    do {
      MorphismPair image{
          apply_column_order(apply_row_order(pair.a, row_order), col_order),
          apply_column_order(apply_row_order(pair.b, row_order), col_order)};
      std::string key = pair_key(image);
      if (!best || key < best_key) {
        best_key = std::move(key);
        best = std::move(image);
      }
    } while (std::next_permutation(col_order.begin(), col_order.end()));
  } while (std::next_permutation(row_order.begin(), row_order.end()));
  return *best;
}

IwrReport iwr(const MorphismPair& pair, std::size_t cap,
              const DecideOptions& options) {
  check_pair(pair);
  if (cap < 1) throw std::invalid_argument("iwr: cap must be at least 1");
  IwrReport report;
  report.pair = pair;
  report.cap = cap;
  report.orbit_id = (pair.a.rows() <= 6 && pair.a.cols() <= 6)
                        ? pair_key(equivalence_orbit(pair))
                        : pair_key(pair);

  const bool two_by_two = is_2x2(pair);
  // When the bottom-left entry of a is 0, each iterate is an induced
  // subgraph of the next, so the first failure settles every later k.
  const bool nested = !pair.a.entry(pair.a.rows(), 1);

  report.per_k.push_back({0, WrStatus::kWordRepresentable, 0, true});
  std::optional<std::size_t> first_fail;
  std::optional<std::size_t> first_undecided;
  std::string witness_kind;
  for (std::size_t k = 1; k <= cap; ++k) {
    const BinaryMatrix m =
        iterate_morphism(pair.a, pair.b, static_cast<unsigned>(k));
    const WrVerdict verdict = decide_split(m, options);
    const bool chain = two_by_two && is_total_order(row_patterns(m));
    report.per_k.push_back({k, verdict.status, verdict.stage, chain});
    if (verdict.status == WrStatus::kNonWordRepresentable) {
      if (!first_fail) {
        first_fail = k;
        witness_kind = verdict.obstruction
                           ? obstruction_kind_name(verdict.obstruction->kind)
                           : "";
      }
    } else if (verdict.status == WrStatus::kUndecided) {
      if (!first_fail && !first_undecided) first_undecided = k;
    }
    if (first_fail && nested) break;
  }

  if (first_undecided) {
    report.result.kind = IwrKind::kLowerBound;
    report.result.value = *first_undecided;
  } else if (first_fail) {
    report.result.kind = IwrKind::kFinite;
    report.result.value = *first_fail;
    report.result.witness_kind = witness_kind;
  } else if (auto certificate = infinity_certificate(pair, options)) {
    report.result.kind = IwrKind::kInfinite;
    report.result.certificate = std::move(certificate);
  } else {
    report.result.kind = IwrKind::kLowerBound;
    report.result.value = cap + 1;
  }
  return report;
}

namespace {

constexpr std::array<unsigned, 8> kABlocks = {8, 4, 1, 12, 9, 5, 13, 15};
constexpr std::array<unsigned, 16> kBOrder = {0, 8,  4,  2, 1, 12, 10, 9,
                                              6, 5, 3, 14, 13, 11, 7, 15};

unsigned swap_rows_nibble(unsigned v) { return ((v & 3u) << 2) | ((v & 12u) >> 2); }
unsigned swap_cols_nibble(unsigned v) { return ((v & 5u) << 1) | ((v & 10u) >> 1); }

std::optional<int> listed_case(unsigned a_nibble, unsigned b_nibble) {
  for (std::size_t i = 0; i < kABlocks.size(); ++i) {
    if (kABlocks[i] != a_nibble) continue;
    for (std::size_t j = 0; j < kBOrder.size(); ++j)
      if (kBOrder[j] == b_nibble) return 2 + static_cast<int>(i * 16 + j);
  }
  return std::nullopt;
}

}  // namespace

unsigned nibble_of(const BinaryMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("nibble_of: matrix must be 2x2");
  return (m.entry(1, 1) ? 8u : 0u) | (m.entry(1, 2) ? 4u : 0u) |
         (m.entry(2, 1) ? 2u : 0u) | (m.entry(2, 2) ? 1u : 0u);
}

BinaryMatrix matrix_of_nibble(unsigned nibble) {
  if (nibble > 15) throw std::invalid_argument("matrix_of_nibble: value > 15");
  BinaryMatrix m(2, 2);
  m.set_entry(1, 1, nibble & 8);
  m.set_entry(1, 2, nibble & 4);
  m.set_entry(2, 1, nibble & 2);
  m.set_entry(2, 2, nibble & 1);
  return m;
}

int case_number_for(const MorphismPair& pair) {
  check_pair(pair);
  if (!is_2x2(pair))
    throw std::invalid_argument("case_number_for: pair must be 2x2");
  const unsigned a_nibble = nibble_of(pair.a);
  const unsigned b_nibble = nibble_of(pair.b);
  if (a_nibble == 0) return 1;
  if (auto c = listed_case(a_nibble, b_nibble)) return *c;
  // The first block is not among the listed eight; its simultaneous-swap
  // orbit contains listed blocks, and the least such case number is used.
  int best = 0;
  for (bool swap_rows : {false, true}) {
    for (bool swap_cols : {false, true}) {
      unsigned a_image = a_nibble, b_image = b_nibble;
      if (swap_rows) {
        a_image = swap_rows_nibble(a_image);
        b_image = swap_rows_nibble(b_image);
      }
      if (swap_cols) {
        a_image = swap_cols_nibble(a_image);
        b_image = swap_cols_nibble(b_image);
      }
      if (auto c = listed_case(a_image, b_image))
        if (best == 0 || *c < best) best = *c;
    }
  }
  if (best == 0)
    throw std::logic_error("case_number_for: no listed image in the orbit");
  return best;
}

MorphismPair case_pair(int case_number) {
  if (case_number < 1 || case_number > 129)
    throw std::invalid_argument("case_pair: case number out of range");
  if (case_number == 1)
    return MorphismPair{matrix_of_nibble(0), matrix_of_nibble(0)};
  const int index = case_number - 2;
  return MorphismPair{matrix_of_nibble(kABlocks[index / 16]),
                      matrix_of_nibble(kBOrder[index % 16])};
}

namespace {

std::string result_kind_string(const IwrResult& result) {
  if (result.kind == IwrKind::kInfinite && result.certificate)
    return certificate_kind_name(result.certificate->kind);
  if (result.kind == IwrKind::kFinite && !result.witness_kind.empty())
    return result.witness_kind;
  return "none";
}

}  // namespace

Classification classify_all_2x2(std::size_t cap, unsigned jobs,
                                const DecideOptions& options) {
  Classification out;
  out.cap = cap;
  out.pair_reports.resize(256);
  out.pair_case.resize(256, 0);

  std::atomic<unsigned> next{0};
  auto worker = [&out, cap, &options, &next] {
    for (unsigned index = next.fetch_add(1); index < 256;
         index = next.fetch_add(1)) {
      const MorphismPair pair{matrix_of_nibble(index / 16),
                              matrix_of_nibble(index % 16)};
      out.pair_reports[index] = iwr(pair, cap, options);
      out.pair_case[index] = case_number_for(pair);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }

  out.cases.reserve(129);
  for (int c = 1; c <= 129; ++c) {
    const MorphismPair representative = case_pair(c);
    const unsigned index =
        nibble_of(representative.a) * 16 + nibble_of(representative.b);
    CaseEntry entry;
    entry.case_number = c;
    entry.a_spec = representative.a.rowspec();
    entry.b_spec = c == 1 ? "*" : representative.b.rowspec();
    entry.report = out.pair_reports[index];
    entry.result_string = iwr_result_string(entry.report.result);
    entry.kind_string = result_kind_string(entry.report.result);
    out.cases.push_back(std::move(entry));
  }

  for (unsigned index = 0; index < 256; ++index) {
    const IwrReport& report = out.pair_reports[index];
    const CaseEntry& entry = out.cases[out.pair_case[index] - 1];
    const std::string result = iwr_result_string(report.result);
    if (result != entry.result_string)
      out.inconsistencies.push_back(
          "pair " + pair_key(report.pair) + " has result " + result +
          " but case " + std::to_string(entry.case_number) + " has " +
          entry.result_string);
    if (report.result.kind == IwrKind::kFinite)
      if (infinity_certificate(report.pair, options))
        out.inconsistencies.push_back("certificate fires on finite pair " +
                                      pair_key(report.pair));
  }
  return out;
}

std::optional<SubpairWitness> screen_by_submatrices(
    const MorphismPair& pair, std::size_t k, const DecideOptions& options) {
  check_pair(pair);
  if (pair.a.rows() < 2 || pair.a.cols() < 2)
    throw std::invalid_argument(
        "screen_by_submatrices: pair must be at least 2x2");
  if (k == 0) return std::nullopt;
  // Caps beyond 12 would blow the iterate cell budget for 2x2 subpairs.
  const std::size_t cap = std::min<std::size_t>(k, 12);
  for (std::size_t r1 = 1; r1 <= pair.a.rows(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 <= pair.a.rows(); ++r2)
      for (std::size_t c1 = 1; c1 <= pair.a.cols(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 <= pair.a.cols(); ++c2) {
          const MorphismPair sub{submatrix(pair.a, {r1, r2}, {c1, c2}),
                                 submatrix(pair.b, {r1, r2}, {c1, c2})};
          const IwrReport report = iwr(sub, cap, options);
          if (report.result.kind == IwrKind::kFinite &&
              report.result.value <= k)
            return SubpairWitness{{r1, r2}, {c1, c2}, sub,
                                  report.result.value};
        }
  return std::nullopt;
}

}  // namespace wordrep

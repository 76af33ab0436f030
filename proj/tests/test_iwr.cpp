// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "errors.hpp"
#include "iwr.hpp"
#include "wrdecision.hpp"

using namespace wordrep;

namespace {

BinaryMatrix mat(const char* spec) { return BinaryMatrix::parse_rowspec(spec); }

MorphismPair pair_of(const char* a, const char* b) {
  return MorphismPair{mat(a), mat(b)};
}

std::vector<WrStatus> statuses(const IwrReport& report) {
  std::vector<WrStatus> out;
  for (const PerKVerdict& v : report.per_k) out.push_back(v.status);
  return out;
}

constexpr WrStatus WR = WrStatus::kWordRepresentable;
constexpr WrStatus NWR = WrStatus::kNonWordRepresentable;

// The 56 cases whose iterates stay representable forever.
const std::set<int> kInfiniteCases = {
    1,   2,   3,   7,   8,   9,   13,  18,  20,  23,  26,  27,  30,  34,
    38,  41,  43,  44,  48,  50,  51,  52,  55,  56,  59,  60,  61,  62,
    65,  73,  74,  82,  84,  86,  87,  88,  91,  92,  94,  96,  97,  100,
    103, 107, 110, 113, 114, 119, 120, 123, 124, 125, 126, 127, 128, 129};

// Which structural certificate settles each infinite case.
const std::map<std::string, std::set<int>> kCertificateCases = {
    {"a_zero", {1}},
    {"all_zero_or_one_rows", {50, 55, 60, 65, 114, 119, 124, 129}},
    {"all_zero_or_one_cols", {82, 88, 91, 97, 120, 123}},
    {"equal_small", {3, 20, 38, 73, 110}},
    {"comparable_100_101",
     {2,  7,  8,  13, 18, 23, 27, 30,  34,  43,  44,  48,  51,  52,  56, 59,
      61, 62, 84, 86, 87, 92, 94, 96, 100, 103, 107, 113, 125, 126, 127, 128}},
    {"complementary_pair", {74}},
    {"constant_upper_delay_lower", {9, 26, 41}},
};

}  // namespace

TEST_CASE("certificate names and result strings") {
  CHECK(certificate_kind_name(CertificateKind::kAZero) == "a_zero");
  CHECK(certificate_kind_name(CertificateKind::kAllZeroOrOneRows) ==
        "all_zero_or_one_rows");
  CHECK(certificate_kind_name(CertificateKind::kAllZeroOrOneCols) ==
        "all_zero_or_one_cols");
  CHECK(certificate_kind_name(CertificateKind::kEqualSmall) == "equal_small");
  CHECK(certificate_kind_name(CertificateKind::kEqualDecided) ==
        "equal_decided");
  CHECK(certificate_kind_name(CertificateKind::kComparable100_101) ==
        "comparable_100_101");
  CHECK(certificate_kind_name(CertificateKind::kComplementaryPair) ==
        "complementary_pair");
  CHECK(certificate_kind_name(CertificateKind::kConstantUpperDelayLower) ==
        "constant_upper_delay_lower");

  CHECK(iwr_result_string({IwrKind::kFinite, 3, std::nullopt, ""}) == "3");
  CHECK(iwr_result_string({IwrKind::kInfinite, 0, std::nullopt, ""}) == "inf");
  CHECK(iwr_result_string({IwrKind::kLowerBound, 7, std::nullopt, ""}) ==
        "lower_bound(7)");
}

TEST_CASE("case numbering round trips") {
  for (int n = 1; n <= 129; ++n) {
    CHECK(case_number_for(case_pair(n)) == n);
  }
  CHECK(case_pair(1) == pair_of("00/00", "00/00"));
  CHECK(case_pair(4) == pair_of("10/00", "01/00"));
  CHECK(case_pair(6) == pair_of("10/00", "00/01"));
  CHECK(case_pair(9) == pair_of("10/00", "10/01"));
  CHECK(case_pair(16) == pair_of("10/00", "01/11"));
  CHECK(case_pair(26) == pair_of("01/00", "01/10"));
  CHECK(case_pair(41) == pair_of("00/01", "10/01"));
  CHECK(case_pair(68) == pair_of("10/01", "01/00"));
  CHECK(case_pair(69) == pair_of("10/01", "00/10"));
  CHECK(case_pair(71) == pair_of("10/01", "11/00"));
  CHECK(case_pair(74) == pair_of("10/01", "01/10"));
  CHECK(case_pair(87) == pair_of("01/01", "11/00"));
  CHECK(case_pair(92) == pair_of("01/01", "00/11"));
  CHECK(case_pair(117) == pair_of("11/11", "00/10"));
  CHECK(case_pair(121) == pair_of("11/11", "10/01"));

  // Any pair with a zero left block is case 1.
  CHECK(case_number_for(pair_of("00/00", "10/01")) == 1);

  CHECK(pair_key(case_pair(4)) == "10/00|01/00");
}

TEST_CASE("nibble encoding of 2x2 matrices") {
  for (unsigned n = 0; n < 16; ++n) {
    const BinaryMatrix m = matrix_of_nibble(n);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(nibble_of(m) == n);
  }
  CHECK(matrix_of_nibble(8).rowspec() == "10/00");
  CHECK(matrix_of_nibble(4).rowspec() == "01/00");
  CHECK(matrix_of_nibble(2).rowspec() == "00/10");
  CHECK(matrix_of_nibble(1).rowspec() == "00/01");
  CHECK(matrix_of_nibble(9).rowspec() == "10/01");
  CHECK(matrix_of_nibble(15).rowspec() == "11/11");
}

TEST_CASE("index fixtures with nested iterates") {
  const IwrReport four = iwr(case_pair(4));
  CHECK(four.result.kind == IwrKind::kFinite);
  CHECK(four.result.value == 3);
  CHECK(four.result.witness_kind == "no_circular_order");
  CHECK(iwr_result_string(four.result) == "3");
  CHECK(statuses(four) == std::vector<WrStatus>{WR, WR, WR, NWR});
  CHECK(four.cap == 6);
  CHECK(four.pair == case_pair(4));

  const IwrReport six = iwr(case_pair(6));
  CHECK(six.result.kind == IwrKind::kFinite);
  CHECK(six.result.value == 4);
  CHECK(statuses(six) == std::vector<WrStatus>{WR, WR, WR, WR, NWR});

  const IwrReport sixteen = iwr(case_pair(16));
  CHECK(sixteen.result.kind == IwrKind::kFinite);
  CHECK(sixteen.result.value == 2);
  CHECK(statuses(sixteen) == std::vector<WrStatus>{WR, WR, NWR});
}

TEST_CASE("index fixtures that evaluate beyond the first failure") {
  // The left block has a 1 in its bottom-left corner, so iterates are not
  // nested and every k up to the cap is decided.
  const IwrReport report = iwr(case_pair(121));
  CHECK(report.result.kind == IwrKind::kFinite);
  CHECK(report.result.value == 3);
  CHECK(report.result.witness_kind == "forbidden_configuration");
  CHECK(statuses(report) ==
        std::vector<WrStatus>{WR, WR, WR, NWR, NWR, NWR, NWR});
  CHECK(report.per_k[3].stage == 3);
  CHECK(report.per_k[4].stage == 2);

  const IwrReport tall = iwr(case_pair(117));
  CHECK(tall.result.kind == IwrKind::kFinite);
  CHECK(tall.result.value == 5);
  CHECK(tall.result.witness_kind == "no_circular_order");
  CHECK(statuses(tall) ==
        std::vector<WrStatus>{WR, WR, WR, WR, WR, NWR, NWR});
}

TEST_CASE("a small cap yields a lower bound") {
  const IwrReport report = iwr(case_pair(117), 4);
  CHECK(report.result.kind == IwrKind::kLowerBound);
  CHECK(report.result.value == 5);
  CHECK(iwr_result_string(report.result) == "lower_bound(5)");
  CHECK(statuses(report) == std::vector<WrStatus>{WR, WR, WR, WR, WR});
}

TEST_CASE("infinite cases carry validated certificates") {
  const struct {
    int case_number;
    CertificateKind kind;
  } table[] = {
      {1, CertificateKind::kAZero},
      {3, CertificateKind::kEqualSmall},
      {9, CertificateKind::kConstantUpperDelayLower},
      {26, CertificateKind::kConstantUpperDelayLower},
      {41, CertificateKind::kConstantUpperDelayLower},
      {50, CertificateKind::kAllZeroOrOneRows},
      {74, CertificateKind::kComplementaryPair},
      {82, CertificateKind::kAllZeroOrOneCols},
      {87, CertificateKind::kComparable100_101},
      {92, CertificateKind::kComparable100_101},
  };
  for (const auto& row : table) {
    const MorphismPair pair = case_pair(row.case_number);
    const IwrReport report = iwr(pair);
    CHECK(report.result.kind == IwrKind::kInfinite);
    REQUIRE(report.result.certificate.has_value());
    CHECK(report.result.certificate->kind == row.kind);
    CHECK(validate_certificate(*report.result.certificate, pair));
    for (const PerKVerdict& v : report.per_k) CHECK(v.status == WR);

    const auto direct = infinity_certificate(pair);
    REQUIRE(direct.has_value());
    CHECK(direct->kind == row.kind);
  }
}

TEST_CASE("chain tracking across iterates") {
  const IwrReport comparable = iwr(case_pair(87));
  for (const PerKVerdict& v : comparable.per_k) CHECK(v.chain);

  const IwrReport complementary = iwr(case_pair(74));
  REQUIRE(complementary.per_k.size() == 7);
  CHECK(complementary.per_k[0].chain);
  for (std::size_t k = 1; k <= 6; ++k)
    CHECK_FALSE(complementary.per_k[k].chain);
}

TEST_CASE("no certificate fires on finite cases") {
  // This pair shares the complementary-expansion shape with an infinite
  // case but fails at k = 3; no structural certificate may apply.
  CHECK_FALSE(infinity_certificate(case_pair(71)).has_value());
  const IwrReport report = iwr(case_pair(71));
  CHECK(report.result.kind == IwrKind::kFinite);
  CHECK(report.result.value == 3);
  CHECK(report.result.witness_kind == "forbidden_configuration");

  for (const int finite_case : {4, 6, 16, 68, 69, 117, 121})
    CHECK_FALSE(infinity_certificate(case_pair(finite_case)).has_value());
}

TEST_CASE("certificates for equal blocks beyond 2x2") {
  const MorphismPair decided{mat("1100/0110/0011"), mat("1100/0110/0011")};
  const auto cert = infinity_certificate(decided);
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::kEqualDecided);
  CHECK(validate_certificate(*cert, decided));

  // Equal blocks whose split graph is blocked get no certificate.
  const MorphismPair blocked{mat("1100/1010/0110"), mat("1100/1010/0110")};
  CHECK_FALSE(infinity_certificate(blocked).has_value());

  const MorphismPair constant_rows{mat("11/11/00"), mat("00/11/00")};
  const auto rows_cert = infinity_certificate(constant_rows);
  REQUIRE(rows_cert.has_value());
  CHECK(rows_cert->kind == CertificateKind::kAllZeroOrOneRows);
  CHECK(validate_certificate(*rows_cert, constant_rows));
}

TEST_CASE("certificates do not validate against other pairs") {
  const auto cert = infinity_certificate(case_pair(9));
  REQUIRE(cert.has_value());
  CHECK_FALSE(validate_certificate(*cert, case_pair(4)));
}

TEST_CASE("chain detection on iterates") {
  const MorphismPair nested = pair_of("11/00", "10/10");
  CHECK(total_order_check(nested, 0));
  CHECK(total_order_check(nested, 2));
  CHECK(total_order_check(nested, 3));

  const MorphismPair involutive = pair_of("10/01", "01/10");
  CHECK_FALSE(total_order_check(involutive, 1));
  CHECK_FALSE(total_order_check(involutive, 2));

  CHECK_THROWS_AS(total_order_check(nested, 14), BudgetError);
  CHECK_THROWS_AS(
      total_order_check(MorphismPair{mat("100/010/001"), mat("100/010/001")},
                        1),
      std::invalid_argument);
}

TEST_CASE("equivalence orbits") {
  CHECK(equivalence_orbit(case_pair(26)) == equivalence_orbit(case_pair(9)));
  CHECK(equivalence_orbit(case_pair(41)) == equivalence_orbit(case_pair(9)));
  CHECK(equivalence_orbit(case_pair(69)) == equivalence_orbit(case_pair(68)));
  CHECK(equivalence_orbit(case_pair(92)) == equivalence_orbit(case_pair(87)));
  CHECK(pair_key(equivalence_orbit(case_pair(4))) == "00/01|00/10");
  CHECK(pair_key(equivalence_orbit(case_pair(117))) == "11/11|00/01");

  std::mt19937 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const MorphismPair pair{matrix_of_nibble(rng() % 16),
                            matrix_of_nibble(rng() % 16)};
    const MorphismPair orbit = equivalence_orbit(pair);
    CHECK(equivalence_orbit(orbit) == orbit);
    CHECK(pair_key(orbit) <= pair_key(pair));
    CHECK(iwr(orbit).result.kind == iwr(pair).result.kind);
  }

  BinaryMatrix tall(7, 2);
  CHECK_THROWS_AS(equivalence_orbit(MorphismPair{tall, tall}), BudgetError);
}

TEST_CASE("submatrix screening") {
  // The pair embeds the blocks of a known finite case in its top-left
  // corner, so some aligned subpair must fail by k = 2.
  const MorphismPair embedded{mat("100/000/000"), mat("011/111/000")};
  const auto witness = screen_by_submatrices(embedded, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->failing_k <= 2);
  REQUIRE(witness->rows.size() == 2);
  REQUIRE(witness->cols.size() == 2);
  CHECK(submatrix(embedded.a, witness->rows, witness->cols) == witness->sub.a);
  CHECK(submatrix(embedded.b, witness->rows, witness->cols) == witness->sub.b);
  const BinaryMatrix failing = iterate_morphism(
      witness->sub.a, witness->sub.b, static_cast<unsigned>(witness->failing_k));
  CHECK(decide_split(failing).status == WrStatus::kNonWordRepresentable);

  // A pair is an aligned subpair of itself.
  const auto self = screen_by_submatrices(case_pair(16), 2);
  REQUIRE(self.has_value());
  CHECK(self->failing_k == 2);
  CHECK(self->sub == case_pair(16));

  CHECK_FALSE(screen_by_submatrices(case_pair(16), 0).has_value());
  const MorphismPair zero{mat("000/000/000"), mat("000/000/000")};
  CHECK_FALSE(screen_by_submatrices(zero, 3).has_value());
}

TEST_CASE("classification of all 2x2 pairs") {
  const Classification result = classify_all_2x2();
  CHECK(result.cap == 6);
  REQUIRE(result.cases.size() == 129);
  REQUIRE(result.pair_reports.size() == 256);
  REQUIRE(result.pair_case.size() == 256);
  CHECK(result.inconsistencies.empty());

  std::map<std::string, int> histogram;
  std::set<int> infinite_cases;
  for (const CaseEntry& entry : result.cases) {
    ++histogram[entry.result_string];
    if (entry.result_string == "inf")
      infinite_cases.insert(entry.case_number);
  }
  CHECK(histogram ==
        std::map<std::string, int>{
            {"2", 5}, {"3", 49}, {"4", 15}, {"5", 4}, {"inf", 56}});
  CHECK(infinite_cases == kInfiniteCases);

  std::set<int> two_cases, five_cases;
  for (const CaseEntry& entry : result.cases) {
    if (entry.result_string == "2") two_cases.insert(entry.case_number);
    if (entry.result_string == "5") five_cases.insert(entry.case_number);
  }
  CHECK(two_cases == std::set<int>{16, 31, 45, 81, 101});
  CHECK(five_cases == std::set<int>{115, 116, 117, 118});

  for (const auto& [name, cases] : kCertificateCases) {
    for (const int n : cases) {
      CAPTURE(n);
      CHECK(result.cases[n - 1].kind_string == name);
    }
  }

  for (int n = 1; n <= 129; ++n) {
    const CaseEntry& entry = result.cases[n - 1];
    CHECK(entry.case_number == n);
    if (n == 1) {
      CHECK(entry.b_spec == "*");
    } else {
      const MorphismPair expected = case_pair(n);
      CHECK(entry.a_spec == expected.a.rowspec());
      CHECK(entry.b_spec == expected.b.rowspec());
    }
  }
  CHECK(result.cases[4 - 1].result_string == "3");
  CHECK(result.cases[68 - 1].result_string == "4");
  CHECK(result.cases[69 - 1].result_string == "4");
  CHECK(result.cases[87 - 1].result_string == "inf");
  CHECK(result.cases[92 - 1].result_string == "inf");
  CHECK(result.cases[121 - 1].kind_string == "forbidden_configuration");
}

TEST_CASE("classification covers every pair consistently") {
  const Classification result = classify_all_2x2();
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      const std::size_t index = a * 16 + b;
      const MorphismPair pair{matrix_of_nibble(a), matrix_of_nibble(b)};
      const int case_number = result.pair_case[index];
      CHECK(case_number == case_number_for(pair));
      if (a == 0) CHECK(case_number == 1);
      CHECK(iwr_result_string(result.pair_reports[index].result) ==
            result.cases[case_number - 1].result_string);
    }
  }
}

TEST_CASE("classification is deterministic across thread counts") {
  const Classification one = classify_all_2x2(2, 1);
  const Classification two = classify_all_2x2(2, 2);
  REQUIRE(one.cases.size() == two.cases.size());
  std::set<int> finite_at_two;
  for (std::size_t i = 0; i < one.cases.size(); ++i) {
    CHECK(one.cases[i].result_string == two.cases[i].result_string);
    CHECK(one.cases[i].kind_string == two.cases[i].kind_string);
    if (one.cases[i].result_string == "2")
      finite_at_two.insert(one.cases[i].case_number);
  }
  CHECK(finite_at_two == std::set<int>{16, 31, 45, 81, 101});
  CHECK(one.cap == 2);
}

TEST_CASE("corrected table entries are reproducible from first principles") {
  // Two case pairs fail exactly at k = 4: their third iterates admit a
  // semi-transitive orientation and their fourth do not.
  for (const int n : {68, 69}) {
    CAPTURE(n);
    const MorphismPair pair = case_pair(n);
    const IwrReport report = iwr(pair);
    CHECK(report.result.kind == IwrKind::kFinite);
    CHECK(report.result.value == 4);
    CHECK(report.result.witness_kind == "no_circular_order");
    CHECK(statuses(report) == std::vector<WrStatus>{WR, WR, WR, WR, NWR});
  }
  // Two case pairs stay representable at every k: the chain certificate
  // applies to them.
  for (const int n : {87, 92}) {
    CAPTURE(n);
    const IwrReport report = iwr(case_pair(n));
    CHECK(report.result.kind == IwrKind::kInfinite);
    REQUIRE(report.result.certificate.has_value());
    CHECK(report.result.certificate->kind ==
          CertificateKind::kComparable100_101);
    for (std::size_t k = 0; k < report.per_k.size(); ++k) {
      CHECK(report.per_k[k].status == WR);
      CHECK(report.per_k[k].chain);
    }
  }
}

#include "padic/oracle.hpp"

#include <doctest.h>

using namespace padic;

TEST_CASE("Sturm eigenvalues of the 3x3 example") {
  const auto a = truncated_matrix(OperatorId::D0StarD0, Prime(2), 3);
  const auto values = tridiag_eigenvalues(a, 3, 20);
  REQUIRE(values.size() == 3);
  // Roots of x^3 - 26x^2 + 108x - 64.
  for (const Rational& x : values) {
    const Rational poly = x * x * x - 26 * x * x + 108 * x - 64;
    const Rational slope = 3 * x * x - 52 * x + 108;
    CHECK(abs(poly / slope) < ten_to_minus(18) * std::max(Rational(1), x));
  }
  CHECK(abs(values[0] - parse_rational("0.711")) < parse_rational("0.001"));
  CHECK(values[0] < values[1]);
  CHECK(values[1] < values[2]);
  Rational sum(0);
  for (const Rational& x : values) sum += x;
  CHECK(abs(sum - 26) < ten_to_minus(17));
}

TEST_CASE("Sturm counts") {
  auto a = truncated_matrix(OperatorId::D0StarD0, Prime(3), 8);
  std::size_t previous = 0;
  for (int i = 0; i <= 50; ++i) {
    const std::size_t c = sturm_count(a, pow(Rational(2), i) / 8);
    CHECK(c >= previous);
    previous = c;
  }
  CHECK(previous == 8u);
  // Scaling the matrix scales the eigenvalues.
  const auto base = tridiag_eigenvalues(a, 3, 18);
  TruncMatrix<Rational> scaled = a;
  scaled.entries *= Rational(7, 3);
  const auto scaled_values = tridiag_eigenvalues(scaled, 3, 18);
  for (int i = 0; i < 3; ++i)
    CHECK(abs(scaled_values[i] - Rational(7, 3) * base[i]) < ten_to_minus(16) * scaled_values[i]);

  // Reducible (diagonal) input.
  TruncMatrix<Rational> diag;
  diag.entries = MatrixX<Rational>::Zero(3, 3);
  diag.entries(0, 0) = 5;
  diag.entries(1, 1) = -1;
  diag.entries(2, 2) = 2;
  const auto d = tridiag_eigenvalues(diag, 3, 12);
  CHECK(abs(d[0] + 1) < ten_to_minus(11));
  CHECK(abs(d[1] - 2) < ten_to_minus(11));
  CHECK(abs(d[2] - 5) < ten_to_minus(11));

  TruncMatrix<Rational> dense = a;
  dense.entries(0, 3) = dense.entries(3, 0) = 1;
  CHECK_THROWS_AS(tridiag_eigenvalues(dense, 1), std::invalid_argument);
  TruncMatrix<Rational> skew = a;
  skew.entries(0, 1) = 7;
  CHECK_THROWS_AS(tridiag_eigenvalues(skew, 1), std::invalid_argument);
}

TEST_CASE("inverse trace") {
  const auto a = truncated_matrix(OperatorId::D0StarD0, Prime(2), 3);
  // Tr A^-1 = (sum of 2x2 principal minors) / det = 108 / 64.
  CHECK(tridiag_inverse_trace(a) == Rational(108, 64));
  const auto big = truncated_matrix(OperatorId::D0StarD0, Prime(2), 60);
  // sum_{j<60} (j+1) 4^-j.
  Rational expected(0);
  for (int j = 0; j < 60; ++j) expected += Rational(j + 1) * pow(Rational(1, 4), j);
  CHECK(tridiag_inverse_trace(big) == expected);
}

TEST_CASE("half-line oracle agrees with certified roots") {
  const auto report = truncated_d0_spectrum(Prime(2), 60, 5);
  CHECK(report.max_relative_deviation <= Real("1e-10"));
  CHECK(report.comparisons.size() == 5);
  CHECK(abs(report.eigenvalues[0] - Real("0.69310229165060436")) < Real("1e-16"));

  const auto three = truncated_d0_spectrum(Prime(3), 40, 4);
  CHECK(three.max_relative_deviation <= Real("1e-10"));

  // Deviations shrink as the truncation grows.
  Real previous(1);
  for (unsigned N : {12u, 16u, 20u, 24u}) {
    const auto r = truncated_d0_spectrum(Prime(2), N, 2);
    CHECK(r.comparisons[1].relative_deviation < previous);
    previous = r.comparisons[1].relative_deviation;
  }
  CHECK_THROWS_AS(truncated_d0_spectrum(Prime(2), 12, 5), std::invalid_argument);
}

TEST_CASE("compare") {
  const Prime two(2);
  const auto records = refine_eigenvalues(two, 3, 14);
  OracleReport same;
  same.p = 2;
  for (const auto& r : records) same.eigenvalues.push_back(to_real<Real>(r.midpoint()));
  const auto identical = compare(records, same, Real(0));
  CHECK(identical.pass);
  CHECK(identical.max_deviation == 0);

  const auto report = truncated_d0_spectrum(two, 60, 3);
  CHECK(compare(records, report, Real("1e-8")).pass);
  OracleReport perturbed = report;
  perturbed.eigenvalues[0] *= Real("1.0001");
  CHECK_FALSE(compare(records, perturbed, Real("1e-8")).pass);
  OracleReport other = report;
  other.p = 3;
  CHECK_THROWS(compare(records, other, Real(1)));
}

TEST_CASE("tree oracle") {
  const Prime two(2);
  const auto report = truncated_tree_spectrum(two, 4);
  CHECK(report.eigenvalues.size() == 31);
  CHECK(report.trace_discrepancy < Real("1e-40"));
  unsigned total = 0;
  for (const auto& c : report.clusters) total += c.count;
  CHECK(total == 31u);

  // Frobenius norm is preserved: sum of squared eigenvalues.
  const auto sym = tree_dstar_d_symmetric<50>(two, 4);
  Real50 squares(0);
  for (const Real& v : report.eigenvalues) squares += Real50(v * v);
  CHECK(abs(squares - sym.entries.squaredNorm()) < Real50("1e-35") * squares);

  // Generalized-problem route in double precision.
  const auto generalized = tree_spectrum_generalized(two, 4);
  REQUIRE(generalized.size() == 31);
  for (std::size_t i = 0; i < generalized.size(); ++i) {
    const double oracle = report.eigenvalues[i].convert_to<double>();
    CHECK(std::abs(generalized[i] - oracle) <= 1e-9 * oracle);
  }
  CHECK_THROWS_AS(truncated_tree_spectrum(two, 12), std::length_error);
}

TEST_CASE("multiplicity experiment at depth 6") {
  const Prime two(2);
  const auto report = truncated_tree_spectrum(two, 6, 1e-4);
  const auto rows = multiplicity_check(two, report, 3, 2, 1e-4);
  REQUIRE(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row.pass);
    CHECK(row.cluster_count == row.expected_count);
  }
  CHECK(rows[0].expected_count == 1u);
  CHECK(rows[2].expected_count == 1u);
  CHECK(rows[4].expected_count == 2u);
  CHECK(rows[6].expected_count == 4u);
}

TEST_CASE("Jacobi on a small known matrix") {
  MatrixX<Real50> m(2, 2);
  m << 2, 1, 1, 2;
  const auto values = jacobi_eigenvalues(m);
  CHECK(abs(values[0] - 1) < Real50("1e-45"));
  CHECK(abs(values[1] - 3) < Real50("1e-45"));
  const auto clusters = cluster_values({Real(1), Real("1.0000001"), Real(2)}, 1e-6);
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[0].count == 2u);
  CHECK(clusters[1].count == 1u);
}

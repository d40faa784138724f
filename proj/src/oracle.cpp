#include "padic/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace padic {

namespace {

void require_tridiagonal(const TruncMatrix<Rational>& m) {
  const Eigen::Index n = m.dimension();
  if (m.entries.cols() != n) throw std::invalid_argument("oracle: matrix is not square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m.entries(i, j) != m.entries(j, i)) throw std::invalid_argument("oracle: matrix is not symmetric");
      if (std::abs(i - j) > 1 && m.entries(i, j) != 0)
        throw std::invalid_argument("oracle: matrix is not tridiagonal");
    }
}

Rational floor_integer(const Rational& x) {
  Integer q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && Rational(q) != x) q -= 1;
  return Rational(q);
}

}  // namespace

std::size_t sturm_count(const TruncMatrix<Rational>& matrix, const Rational& x) {
  // P_i = det(A_i - x) along each irreducible block; sign changes in
  // P_0 .. P_k (zeros skipped) count the eigenvalues below x.
  const Eigen::Index n = matrix.dimension();
  std::size_t count = 0;
  Rational prev2(0), prev(1);
  int last_sign = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rational b = i > 0 ? Rational(matrix.entries(i, i - 1)) : Rational(0);
    if (b == 0) {  // new block
      prev2 = 0;
      prev = 1;
      last_sign = 1;
    }
    const Rational next = (matrix.entries(i, i) - x) * prev - b * b * prev2;
    const int s = sign(next);
    if (s != 0) {
      if (s != last_sign) ++count;
      last_sign = s;
    }
    prev2 = prev;
    prev = next;
    // Rescale to keep the numbers small; signs are unaffected.
    if (prev != 0) {
      const Rational scale = abs(prev);
      prev /= scale;
      prev2 /= scale;
    }
  }
  return count;
}

std::vector<Rational> tridiag_eigenvalues(const TruncMatrix<Rational>& matrix, std::size_t count, unsigned digits) {
  require_tridiagonal(matrix);
  const Eigen::Index n = matrix.dimension();
  if (count > static_cast<std::size_t>(n)) throw std::invalid_argument("tridiag_eigenvalues: count exceeds dimension");

  // Gershgorin bounds, widened to integers.
  Rational lower(0), upper(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational radius(0);
    if (i > 0) radius += abs(Rational(matrix.entries(i, i - 1)));
    if (i + 1 < n) radius += abs(Rational(matrix.entries(i, i + 1)));
    const Rational lo = matrix.entries(i, i) - radius, hi = matrix.entries(i, i) + radius;
    if (i == 0 || lo < lower) lower = lo;
    if (i == 0 || hi > upper) upper = hi;
  }
  lower = floor_integer(lower) - 1;
  upper = floor_integer(upper) + 1;

  const Rational tol = ten_to_minus(digits);
  std::vector<Rational> out;
  for (std::size_t k = 0; k < count; ++k) {
    // Invariant: count(lo) <= k < count(hi).
    Rational lo = lower, hi = upper;
    while (hi - lo > tol * std::max(Rational(1), std::max(abs(lo), abs(hi)))) {
      const Rational mid = (lo + hi) / 2;
      if (sturm_count(matrix, mid) <= k) lo = mid;
      else hi = mid;
    }
    out.push_back((lo + hi) / 2);
  }
  return out;
}

Rational tridiag_inverse_trace(const TruncMatrix<Rational>& matrix) {
  require_tridiagonal(matrix);
  const auto n = static_cast<std::size_t>(matrix.dimension());
  const auto& a = matrix.entries;
  auto at = [&](std::size_t i, std::size_t j) -> const Rational& {
    return a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  // theta_i: leading minors of size i; phi_i: trailing minors from index i.
  std::vector<Rational> theta(n + 1), phi(n + 2);
  theta[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    theta[i] = at(i - 1, i - 1) * theta[i - 1];
    if (i >= 2) theta[i] -= at(i - 1, i - 2) * at(i - 2, i - 1) * theta[i - 2];
  }
  if (theta[n] == 0) throw std::domain_error("tridiag_inverse_trace: matrix is singular");
  phi[n] = 1;
  phi[n + 1] = 0;
  for (std::size_t i = n; i-- > 0;) {
    phi[i] = at(i, i) * phi[i + 1];
    if (i + 1 < n) phi[i] -= at(i, i + 1) * at(i + 1, i) * phi[i + 2];
  }
  Rational trace(0);
  for (std::size_t i = 0; i < n; ++i) trace += theta[i] * phi[i + 1];
  return trace / theta[n];
}

OracleReport truncated_d0_spectrum(const Prime& p, unsigned N, unsigned count, unsigned digits,
                                   const SpectrumOptions& options) {
  if (N < count + 10) throw std::invalid_argument("truncated_d0_spectrum: requires N >= count + 10");
  const TruncMatrix<Rational> matrix = truncated_matrix(OperatorId::D0StarD0, p, N);
  const std::vector<Rational> values = tridiag_eigenvalues(matrix, count, digits);
  const std::vector<EigenvalueRecord> records = refine_eigenvalues(p, count, digits, options);

  OracleReport report;
  report.op = OperatorId::D0StarD0;
  report.p = p.value();
  report.size = N;
  for (const Rational& v : values) report.eigenvalues.push_back(to_real<Real>(v));
  const CompareSummary summary = compare(records, report, Real(0));
  for (std::size_t i = 0; i < records.size(); ++i)
    report.comparisons.push_back({records[i].index, records[i].midpoint(), report.eigenvalues[i],
                                  summary.deviations[i]});
  report.max_relative_deviation = summary.max_deviation;
  return report;
}

std::vector<OracleCluster> cluster_values(const std::vector<Real>& ascending, double tolerance) {
  std::vector<OracleCluster> out;
  std::size_t start = 0;
  while (start < ascending.size()) {
    const Real first = ascending[start];
    std::size_t end = start + 1;
    while (end < ascending.size() && ascending[end] - first <= Real(tolerance) * abs(first)) ++end;
    Real sum(0);
    for (std::size_t i = start; i < end; ++i) sum += ascending[i];
    out.push_back({Real(sum / static_cast<unsigned>(end - start)), static_cast<unsigned>(end - start)});
    start = end;
  }
  return out;
}

OracleReport truncated_tree_spectrum(const Prime& p, unsigned depth, double cluster_tolerance,
                                     std::uint64_t dimension_limit) {
  const TruncMatrix<Real50> sym = tree_dstar_d_symmetric<50>(p, depth, dimension_limit);
  const std::vector<Real50> values = jacobi_eigenvalues(sym.entries);

  OracleReport report;
  report.op = OperatorId::TreeDStarD;
  report.p = p.value();
  report.size = depth;
  Real50 sum(0);
  for (const Real50& v : values) {
    report.eigenvalues.push_back(Real(v));
    sum += v;
  }
  const Real50 trace = sym.entries.trace();
  report.trace_discrepancy = Real(abs(trace - sum) / trace);
  report.clusters = cluster_values(report.eigenvalues, cluster_tolerance);
  return report;
}

std::vector<double> tree_spectrum_generalized(const Prime& p, unsigned depth, std::uint64_t dimension_limit) {
  const TruncMatrix<Rational> d = truncated_matrix(OperatorId::TreeD, p, depth, dimension_limit);
  const Eigen::Index dim = d.dimension();
  Eigen::MatrixXd md(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) md(i, j) = d.entries(i, j).convert_to<double>();
  Eigen::VectorXd w(dim);
  for (unsigned n = 0; n <= depth; ++n) {
    const double wn = weight(p, {n, 0}).convert_to<double>();
    w.segment(static_cast<Eigen::Index>(flat_index(p, {n, 0})), static_cast<Eigen::Index>(level_size(p, n)))
        .setConstant(wn);
  }
  const Eigen::MatrixXd a = md.transpose() * w.asDiagonal() * md;
  const Eigen::MatrixXd b = w.asDiagonal();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, b, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<MultiplicityRow> multiplicity_check(const Prime& p, const OracleReport& report, unsigned m_max,
                                                unsigned n_max, double tolerance) {
  if (report.op != OperatorId::TreeDStarD || report.p != p.value())
    throw std::invalid_argument("multiplicity_check: needs a tree report for the same prime");
  if (m_max + n_max > report.size + 1)
    throw std::invalid_argument("multiplicity_check: fibers too short for the requested indices");
  const std::vector<EigenvalueRecord> certified = refine_eigenvalues(p, n_max, 12);
  std::vector<MultiplicityRow> rows;
  for (unsigned m = 0; m <= m_max; ++m) {
    const TruncMatrix<Rational> fiber = truncated_matrix(OperatorId::D0StarD0, p, report.size - m + 1);
    const std::vector<Rational> mu = tridiag_eigenvalues(fiber, n_max, 20);
    const Rational scale = pow(Rational(p.value()), 2 * static_cast<long>(m));
    for (unsigned n = 1; n <= n_max; ++n) {
      MultiplicityRow row;
      row.m = m;
      row.n = n;
      row.expected_center = to_real<Real>(scale * mu[n - 1]);
      row.infinite_center = to_real<Real>(scale * certified[n - 1].midpoint());
      row.expected_count = prufer_multiplicity(p, m);
      Real best = std::numeric_limits<Real>::infinity();
      for (const OracleCluster& c : report.clusters) {
        const Real distance = abs(c.center - row.expected_center);
        if (distance < best) {
          best = distance;
          row.cluster_center = c.center;
          row.cluster_count = c.count;
        }
      }
      row.pass = best <= Real(tolerance) * row.expected_center && row.cluster_count == row.expected_count;
      rows.push_back(row);
    }
  }
  return rows;
}

CompareSummary compare(const std::vector<EigenvalueRecord>& certified, const OracleReport& report, const Real& tol) {
  if (certified.size() > report.eigenvalues.size())
    throw std::invalid_argument("compare: oracle report has fewer eigenvalues than records");
  CompareSummary out;
  out.pass = true;
  for (std::size_t i = 0; i < certified.size(); ++i) {
    if (certified[i].p != report.p) throw std::invalid_argument("compare: prime mismatch");
    if (certified[i].index != i + 1) throw std::invalid_argument("compare: records must be lambda_1, lambda_2, ...");
    const Real mid = to_real<Real>(certified[i].midpoint());
    const Real dev = abs(report.eigenvalues[i] - mid) / abs(mid);
    out.deviations.push_back(dev);
    out.max_deviation = std::max(out.max_deviation, dev);
    if (dev > tol) out.pass = false;
  }
  return out;
}

}  // namespace padic

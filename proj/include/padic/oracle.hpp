#ifndef PADIC_ORACLE_HPP
#define PADIC_ORACLE_HPP

// Brute-force eigensolvers on truncated matrices, used as ground truth for
// the certified spectrum.
//
// Tridiagonal matrices (D0*D0) are handled exactly: Sturm sign counts in
// rational arithmetic, so every oracle eigenvalue is itself bracketed.
// The tree operator D*D has sqrt(p) entries after orthonormalization and is
// diagonalized by cyclic Jacobi rotations at 50 digits.

#include "padic/numeric.hpp"
#include "padic/operators.hpp"
#include "padic/spectrum.hpp"
#include "padic/tree.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace padic {

/// Number of eigenvalues strictly below x of a symmetric tridiagonal matrix.
std::size_t sturm_count(const TruncMatrix<Rational>& matrix, const Rational& x);

/// The `count` smallest eigenvalues, ascending, each the midpoint of a Sturm
/// bracket of width <= 10^-digits * max(1, |eigenvalue|).
/// Throws std::invalid_argument unless the matrix is symmetric tridiagonal.
std::vector<Rational> tridiag_eigenvalues(const TruncMatrix<Rational>& matrix, std::size_t count,
                                          unsigned digits = 16);

/// Exact Tr(A^-1) of a nonsingular symmetric tridiagonal matrix.
Rational tridiag_inverse_trace(const TruncMatrix<Rational>& matrix);

struct OracleComparison {
  unsigned index = 1;
  Rational certified;  ///< midpoint of the certified bracket
  Real oracle;
  Real relative_deviation;
};

struct OracleCluster {
  Real center;
  unsigned count = 0;
};

struct OracleReport {
  OperatorId op = OperatorId::D0StarD0;
  std::uint64_t p = 2;
  unsigned size = 0;  ///< half-line dimension or tree depth
  std::vector<Real> eigenvalues;
  std::vector<OracleComparison> comparisons;
  std::vector<OracleCluster> clusters;  ///< tree only
  Real max_relative_deviation{0};
  Real trace_discrepancy{0};  ///< tree only: |trace - sum of eigenvalues| / trace
};

/// Oracle eigenvalues of the size-N truncation of D0*D0 against
/// refine_eigenvalue. Requires N >= count + 10.
OracleReport truncated_d0_spectrum(const Prime& p, unsigned N, unsigned count, unsigned digits = 16,
                                   const SpectrumOptions& options = {});

inline constexpr double kDefaultClusterTolerance = 1e-6;

/// Cyclic Jacobi eigensolve of the weight-orthonormalized D*D truncated at
/// `depth`, clustered at relative tolerance `cluster_tolerance`.
/// Throws std::length_error when the tree has more than `dimension_limit` vertices.
OracleReport truncated_tree_spectrum(const Prime& p, unsigned depth,
                                     double cluster_tolerance = kDefaultClusterTolerance,
                                     std::uint64_t dimension_limit = kDefaultDimensionLimit);

/// The same spectrum through the generalized problem M_D^T W M_D x = mu W x
/// in double precision (no orthonormalization).
std::vector<double> tree_spectrum_generalized(const Prime& p, unsigned depth,
                                              std::uint64_t dimension_limit = kDefaultDimensionLimit);

/// Cyclic Jacobi rotations on a symmetric matrix; eigenvalues ascending.
template <typename RealType>
std::vector<RealType> jacobi_eigenvalues(MatrixX<RealType> a, unsigned max_sweeps = 60) {
  const Eigen::Index n = a.rows();
  const RealType tiny = 100 * std::numeric_limits<RealType>::epsilon();
  for (unsigned sweep = 0; sweep < max_sweeps; ++sweep) {
    RealType off(0), total(0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const RealType sq = a(i, j) * a(i, j);
        total += sq;
        if (i != j) off += sq;
      }
    if (off <= tiny * tiny * total) break;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const RealType apq = a(i, j);
        if (apq == 0) continue;
        const RealType theta = (a(j, j) - a(i, i)) / (2 * apq);
        const RealType t = (theta >= 0 ? RealType(1) : RealType(-1)) / (abs(theta) + sqrt(theta * theta + 1));
        const RealType c = 1 / sqrt(t * t + 1);
        const RealType s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const RealType aki = a(k, i), akj = a(k, j);
          a(k, i) = c * aki - s * akj;
          a(k, j) = s * aki + c * akj;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const RealType aik = a(i, k), ajk = a(j, k);
          a(i, k) = c * aik - s * ajk;
          a(j, k) = s * aik + c * ajk;
        }
        a(i, j) = a(j, i) = RealType(0);
      }
  }
  std::vector<RealType> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

/// Groups ascending values whose distance to the cluster's first member is
/// within `tolerance` relative.
std::vector<OracleCluster> cluster_values(const std::vector<Real>& ascending, double tolerance);

/// One row of the multiplicity experiment: the cluster of the tree spectrum
/// nearest to p^{2m} mu_n, where mu_n is the n-th eigenvalue of the D0*D0
/// truncation of size depth - m + 1 (the truncated Pruefer fiber of level m).
struct MultiplicityRow {
  unsigned m = 0;
  unsigned n = 1;
  Real expected_center;        ///< p^{2m} mu_n
  Real infinite_center;        ///< p^{2m} lambda_n (untruncated, from the certified root)
  Real cluster_center;
  unsigned cluster_count = 0;
  std::uint64_t expected_count = 0;  ///< prufer_multiplicity(p, m)
  bool pass = false;
};

/// Rows for m = 0..m_max and n = 1..n_max against `report` (a tree report of
/// the same prime); a row passes when a cluster lies within `tolerance`
/// relative of the expected center and has the expected count.
std::vector<MultiplicityRow> multiplicity_check(const Prime& p, const OracleReport& report, unsigned m_max,
                                                unsigned n_max, double tolerance);

struct CompareSummary {
  std::vector<Real> deviations;  ///< per index, relative to the certified midpoint
  Real max_deviation{0};
  bool pass = false;
};

/// Oracle value k against records[k] (matching prime required). Passes iff
/// every deviation is <= tol.
CompareSummary compare(const std::vector<EigenvalueRecord>& certified, const OracleReport& report,
                       const Real& tol);

}  // namespace padic

#endif  // PADIC_ORACLE_HPP

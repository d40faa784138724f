#ifndef PADIC_SPECTRUM_HPP
#define PADIC_SPECTRUM_HPP

// Certified spectrum of the half-line operator A = D0* D0 and of the tree
// operator D*D.
//
// The eigenvalues of A are the positive roots of
//   phi(lambda) = 1phi1(0; q; q, lambda),  q = p^-2,
// and every sign of phi used here comes from char_function_sign, so each
// bracket is a proof that a root lies inside it.
//
// Eigenvectors are f_n = sum_k c(2k) p^{-2nk} with c(2) = 1 and the closed
// coefficient formula below; they are synthesized exactly from a rational
// approximation of lambda and judged by their residual.

#include "padic/exactnum.hpp"
#include "padic/numeric.hpp"
#include "padic/operators.hpp"
#include "padic/tree.hpp"

#include <utility>
#include <vector>

namespace padic {

struct SpectrumOptions {
  SeriesBudget budget{};
  /// The fallback sign scan gives up above this lambda.
  Rational scan_ceiling = pow(Rational(10), 30);
  /// Concurrent refinement of distinct indices.
  bool parallel = true;
};

/// Certified bracket (lo, hi) around the n-th smallest eigenvalue lambda_n.
struct EigenvalueRecord {
  std::uint64_t p = 2;
  unsigned index = 1;
  Rational lo;
  Rational hi;
  unsigned digits = 0;  ///< achieved relative precision, (hi - lo) <= 10^-digits * hi
  int sign_lo = 0;      ///< certified sign of phi(lo)
  int sign_hi = 0;      ///< certified sign of phi(hi)

  Rational midpoint() const { return (lo + hi) / 2; }
  Rational half_width() const { return (hi - lo) / 2; }
};

/// lo = q^{1-n} (1 - q^n/(1 - q^n))^2, hi = q^{1-n}: the root bounds for the
/// zeros of the third Jackson q-Bessel function J_0, moved to the 1phi1
/// argument lambda = q z^2.
std::pair<Rational, Rational> transported_bracket(const Prime& p, unsigned n);

/// Geometric-grid scan of phi starting at 0; returns the bracket around the
/// n-th sign change. Throws std::runtime_error past `ceiling`.
std::pair<Rational, Rational> scan_bracket(const Rational& q, unsigned n, const Rational& ceiling,
                                           SeriesBudget budget = {});

/// Transported bracket when its endpoint signs certify the n-th root
/// (sign (-1)^{n-1} at lo, (-1)^n at hi); otherwise the scan fallback.
std::pair<Rational, Rational> bracket_eigenvalue(const Prime& p, unsigned n,
                                                 const SpectrumOptions& options = {});

/// Certified bisection until (hi - lo) <= 10^-digits * hi.
EigenvalueRecord refine_eigenvalue(const Prime& p, unsigned n, unsigned digits,
                                   const SpectrumOptions& options = {});

/// lambda_1 .. lambda_count, refined independently (concurrently when enabled).
std::vector<EigenvalueRecord> refine_eigenvalues(const Prime& p, unsigned count, unsigned digits,
                                                 const SpectrumOptions& options = {});

struct EigenvectorExpansion {
  std::uint64_t p = 2;
  Rational lambda;
  /// c(2), c(4), ..., c(2K); c(2) = 1.
  std::vector<Rational> coefficients;
  /// Rigorous bound on sum_{n>=0} sum_{k>K} |c(2k)| p^{-2nk}, the l1 norm of
  /// the omitted part of the expansion.
  Rational tail_bound;
};

/// c(2k) = (-lambda/(1-p^-2))^{k-1} p^{k(k-1)} (p^2-1)^{k-2}
///         / [(p^4-1)^2 (p^6-1)^2 ... (p^{2k-2}-1)^2 (p^{2k}-1)],   c(2) = 1.
EigenvectorExpansion eigenvector_coefficients(const Rational& lambda, const Prime& p, unsigned K);

/// f_n = sum_{k=1}^{K} c(2k) p^{-2nk} for n = 0..N-1, exact.
HalfLineSeq synthesize_eigenvector(const EigenvectorExpansion& expansion, unsigned N);

/// ||(A - lambda) f||_2 / ||f||_2 over rows 0..N-1 and |f_0 - f_1 - lambda f_0| / ||f||_2
/// for the synthesized vector (f_N is synthesized too, so no row sees the cut).
struct EigenResidual {
  Real relative_residual;
  Real initial_condition;
};
EigenResidual eigen_residual(const EigenvectorExpansion& expansion, unsigned N);

/// c(2) - (lambda / (1 - p^-2)) sum_{k>=0} f_k. The sum over all k is taken in
/// closed form from the finite coefficient list; the omitted coefficients
/// enter the radius.
ErrorBounded c2_identity_discrepancy(const EigenvectorExpansion& expansion);

/// |lambda|^N / (p^{N(N+1)} prod_{k>=1} (1 - p^{-2k})^2), with the infinite
/// product replaced by a certified lower bound. Bounds sum_{n>=1} |r_n(2N)|
/// for an eigenvector normalized to unit l1 norm, where r_n(2N) is f_n minus
/// its first N-1 expansion terms.
Rational remainder_bound(const Rational& lambda, const Prime& p, unsigned N);

/// Certified upper bound on sum_{n>=1} |f_n - sum_{k<N} c(2k) p^{-2nk}| for the
/// eigenvector scaled to unit l1 norm; `expansion` supplies the reference
/// coefficients (use K well above N).
Rational empirical_remainder(const EigenvectorExpansion& expansion, unsigned N);

/// Left side of the initial-condition equation after substituting the
/// expansion and dividing by c(2):
///   p^-2 + lambda - 1 + sum_{k>=2} (p^{-2k} + lambda - 1) lambda^{k-1} p^{2k-2}
///                         / prod_{j=2}^{k} (1 - p^{2j})(1 - p^{2-2j}).
/// Equals (q - 1) phi(lambda).
ErrorBounded neve_characteristic(const Rational& lambda, const Prime& p, const Rational& eps,
                                 SeriesBudget budget = {});

/// One eigenvalue p^{2m} lambda_n of D*D.
struct SpectrumEntry {
  unsigned m = 0;
  unsigned n = 1;
  ErrorBounded value;
  std::uint64_t multiplicity = 1;
};

/// Every (m, n) with p^{2m} lambda_n <= cutoff, ascending by value. Inclusion
/// is decided on the certified upper bracket.
std::vector<SpectrumEntry> dstar_d_spectrum(const Prime& p, const Rational& cutoff, unsigned digits,
                                            const SpectrumOptions& options = {});

}  // namespace padic

#endif  // PADIC_SPECTRUM_HPP

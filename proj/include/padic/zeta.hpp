#ifndef PADIC_ZETA_HPP
#define PADIC_ZETA_HPP

// Spectral zeta functions of D0*D0 and D*D.
//
//   zeta_D0(s) = sum_n lambda_n^-s
//   zeta_D(s)  = prefactor(s) * zeta_D0(s)
//
// Eigenvalues come from certified brackets; the error of every result covers
// the bracket widths (through |d/dlambda lambda^-s| = |s| lambda^{-Re s - 1}),
// the series tail and a floating slack for the MPFR log/exp evaluation.

#include "padic/numeric.hpp"
#include "padic/spectrum.hpp"

#include <string>
#include <vector>

namespace padic {

/// How the multiplicities of p^{2m} lambda_n are summed over m.
enum class PrefactorMode {
  Paper,    ///< (1 - 1/p) / (1 - p^{1-2s})
  Totient,  ///< (1 - p^{-2s}) / (1 - p^{1-2s}) = sum_m mult(m) p^{-2ms}, mult(0) = 1
};

/// Reference sequence mu_n subtracted for the continuation of zeta_D0.
enum class ReferenceMode {
  Paper,       ///< mu_n = p^n
  Asymptotic,  ///< mu_n = p^{2n-2}
};

struct ComplexS {
  Real re{0};
  Real im{0};

  Complex value() const { return Complex(re, im); }
};

struct ZetaResult {
  ComplexS s;
  Complex value;
  Real error{0};  ///< |true - value| <= error (see tail_rigorous)
  int terms_used = 0;
  /// False when the series tail was estimated from observed ratios rather than bounded.
  bool tail_rigorous = true;
  /// Continuation only: the correction terms lambda_n^-s - mu_n^-s did not shrink
  /// relative to mu_n^-s, so mu_n does not follow the asymptotics of lambda_n.
  bool reference_mismatch = false;
};

/// Lazily refined certified eigenvalues lambda_1, lambda_2, ... for one prime.
/// Not safe for concurrent use; give each thread its own cache.
class EigenvalueCache {
 public:
  EigenvalueCache(const Prime& p, unsigned digits, SpectrumOptions options = {});

  const Prime& prime() const { return p_; }
  unsigned digits() const { return digits_; }
  /// 1-based.
  const EigenvalueRecord& get(unsigned n);

 private:
  Prime p_;
  unsigned digits_;
  SpectrumOptions options_;
  std::vector<EigenvalueRecord> records_;
};

Complex prefactor(const Prime& p, const Complex& s, PrefactorMode mode);

/// Sum_{n>=1} mu_n^-s in closed form: p^-s / (1 - p^-s) or 1 / (1 - p^-2s).
Complex reference_closed_form(const Prime& p, const Complex& s, ReferenceMode mode);

/// Requires Re s > 0. Throws BudgetExceeded when eps is not reachable with the
/// cache precision.
ZetaResult zeta_D0(const ComplexS& s, const Rational& eps, EigenvalueCache& cache);

/// Requires Re s > 1/2 and s away from the prefactor poles.
ZetaResult zeta_D(const ComplexS& s, const Rational& eps, PrefactorMode mode, EigenvalueCache& cache);

/// Tr (D*D)^-s for real s > 1/2.
ZetaResult schatten_trace(const Real& s, const Rational& eps, PrefactorMode mode, EigenvalueCache& cache);

/// sum_{m,n} mult(m) (p^{2m} lambda_n)^-s summed directly over both indices,
/// with explicit tail bounds; Re s > 1/2.
ZetaResult zeta_D_double_sum(const ComplexS& s, const Rational& eps, EigenvalueCache& cache);

/// zeta_D0(s) = sum_n (lambda_n^-s - mu_n^-s) + sum_n mu_n^-s, Re s > -2.
/// In Asymptotic mode with Re s > -1 the correction tail is bounded through
/// the transported brackets; otherwise it is estimated (tail_rigorous = false).
/// Throws std::domain_error near a pole of the closed form.
ZetaResult zeta_D0_continued(const ComplexS& s, ReferenceMode mode, const Rational& eps, EigenvalueCache& cache);

struct Pole {
  Real re{0};
  Real im{0};
  int k = 0;
  std::string provenance;  ///< "prefactor" or "reference"
};

/// Poles for k = -kmax..kmax. Paper mode: s = 2 pi i k / ln p and
/// s = (1 - 2 pi i k / ln p) / 2. Asymptotic mode: s = pi i k / ln p and the
/// same prefactor family.
std::vector<Pole> pole_list(const Prime& p, ReferenceMode mode, int kmax = 2);

}  // namespace padic

#endif  // PADIC_ZETA_HPP

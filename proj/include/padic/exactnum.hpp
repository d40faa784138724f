#ifndef PADIC_EXACTNUM_HPP
#define PADIC_EXACTNUM_HPP

// Exact rational evaluation of q-Pochhammer symbols and of the basic
// hypergeometric series 1phi1.
//
// Partial sums and partial products are exact. The only inexact piece of any
// result is an analytic bound on the omitted tail, carried as the radius of an
// ErrorBounded value. Nothing is ever rounded.

#include "padic/numeric.hpp"

#include <stdexcept>
#include <string>

namespace padic {

/// Maximum number of series terms / product factors an evaluation may use.
struct SeriesBudget {
  int max_terms = 256;
};

/// Raised when the requested accuracy needs more terms than the budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a sign cannot be certified within the budget.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational interval [center - radius, center + radius] known to contain
/// the true value.
struct ErrorBounded {
  Rational center{0};
  Rational radius{0};

  static ErrorBounded exact(Rational value) { return {std::move(value), Rational(0)}; }

  Rational lower() const { return center - radius; }
  Rational upper() const { return center + radius; }
  bool contains(const Rational& x) const { return abs(x - center) <= radius; }
  bool excludes_zero() const { return abs(center) > radius; }
  /// True when this interval lies inside `outer`.
  bool nested_in(const ErrorBounded& outer) const {
    return lower() >= outer.lower() && upper() <= outer.upper();
  }
};

ErrorBounded operator+(const ErrorBounded& x, const ErrorBounded& y);
ErrorBounded operator-(const ErrorBounded& x, const ErrorBounded& y);
ErrorBounded operator-(const ErrorBounded& x);
ErrorBounded operator*(const ErrorBounded& x, const ErrorBounded& y);
/// Throws std::domain_error if the divisor interval contains zero.
ErrorBounded operator/(const ErrorBounded& x, const ErrorBounded& y);

/// Parameters of 1phi1(a; b; q, z). Construction validates 0 < q < 1 and
/// b != q^-n for every n >= 0.
class Phi11Params {
 public:
  Phi11Params(Rational a, Rational b, Rational q, Rational z);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& q() const { return q_; }
  const Rational& z() const { return z_; }

 private:
  Rational a_, b_, q_, z_;
};

/// Throws std::invalid_argument unless 0 < q < 1.
void require_unit_base(const Rational& q);

/// (a; q)_n = prod_{j<n} (1 - a q^j), exact.
Rational qpochhammer(const Rational& a, const Rational& q, unsigned n);

/// (a; q)_inf with radius <= eps.
ErrorBounded qpochhammer_infinite(const Rational& a, const Rational& q, const Rational& eps,
                                  SeriesBudget budget = {});

/// 1phi1(a; b; q, z) with radius <= eps.
///
/// term_n = (a;q)_n / ((q;q)_n (b;q)_n) * (-1)^n q^{n(n-1)/2} z^n. Once the
/// term ratio is provably at most 1/2 for every later index, the tail is
/// bounded by twice the first omitted term.
ErrorBounded phi11(const Phi11Params& params, const Rational& eps, SeriesBudget budget = {});

/// Sign of 1phi1(0; q; q, lambda) with the data that proves it.
struct SignCertificate {
  int sign = 0;           ///< +1 or -1, never 0
  Rational partial_sum;   ///< exact sum of the first `terms` terms
  Rational tail_bound;    ///< rigorous bound on the omitted tail, < |partial_sum|
  int terms = 0;
};

/// Certified strict sign of the characteristic series
/// 1 + sum_k (-1)^k lambda^k q^{k(k-1)/2} / (q;q)_k^2. Throws Undecided when
/// the budget runs out, which only happens for lambda extremely close to a root.
SignCertificate char_function_sign(const Rational& lambda, const Rational& q,
                                   SeriesBudget budget = {});

/// LHS - RHS of 1phi1(0;b;q,z) = (z;q)_inf/(b;q)_inf * 1phi1(0;z;q,b).
/// The returned radius is <= eps.
ErrorBounded verify_transformation(const Rational& b, const Rational& q, const Rational& z,
                                   const Rational& eps, SeriesBudget budget = {});

/// LHS - RHS of 1phi1(a;b;q,b/a) = (b/a;q)_inf/(b;q)_inf, radius <= eps.
ErrorBounded verify_cauchy_sum(const Rational& a, const Rational& b, const Rational& q,
                               const Rational& eps, SeriesBudget budget = {});

}  // namespace padic

#endif  // PADIC_EXACTNUM_HPP

#include "padic/exactnum.hpp"

#include <utility>

namespace padic {

ErrorBounded operator+(const ErrorBounded& x, const ErrorBounded& y) {
  return {x.center + y.center, x.radius + y.radius};
}

ErrorBounded operator-(const ErrorBounded& x, const ErrorBounded& y) {
  return {x.center - y.center, x.radius + y.radius};
}

ErrorBounded operator-(const ErrorBounded& x) { return {-x.center, x.radius}; }

ErrorBounded operator*(const ErrorBounded& x, const ErrorBounded& y) {
  return {x.center * y.center,
          abs(x.center) * y.radius + abs(y.center) * x.radius + x.radius * y.radius};
}

ErrorBounded operator/(const ErrorBounded& x, const ErrorBounded& y) {
  if (!y.excludes_zero()) throw std::domain_error("interval division by an interval containing 0");
  // x/y - xc/yc = ((x - xc) yc - xc (y - yc)) / (y yc)
  const Rational ayc = abs(y.center);
  return {x.center / y.center,
          (x.radius * ayc + abs(x.center) * y.radius) / ((ayc - y.radius) * ayc)};
}

void require_unit_base(const Rational& q) {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie strictly inside (0, 1)");
}

Phi11Params::Phi11Params(Rational a, Rational b, Rational q, Rational z)
    : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)), z_(std::move(z)) {
  require_unit_base(q_);
  Rational bqn = b_;
  while (abs(bqn) >= 1) {
    if (bqn == 1) throw std::invalid_argument("1phi1: b equals q^-n, the series is undefined");
    bqn *= q_;
  }
}

Rational qpochhammer(const Rational& a, const Rational& q, unsigned n) {
  Rational product(1);
  Rational aqj = a;
  for (unsigned j = 0; j < n; ++j) {
    product *= 1 - aqj;
    aqj *= q;
  }
  return product;
}

ErrorBounded qpochhammer_infinite(const Rational& a, const Rational& q, const Rational& eps,
                                  SeriesBudget budget) {
  require_unit_base(q);
  if (a == 0) return ErrorBounded::exact(Rational(1));
  Rational partial(1);
  Rational aqj = a;  // a q^J
  for (int j = 0; j <= budget.max_terms; ++j) {
    if (partial == 0) return ErrorBounded::exact(Rational(0));
    const Rational t = abs(aqj);
    if (t < 1) {
      // |prod_{i>=J}(1 - a q^i) - 1| <= exp(S) - 1 <= S / (1 - S),
      // S = sum_{i>=J} |a| q^i / (1 - |a| q^i) <= |a| q^J / ((1 - q)(1 - |a| q^J)).
      const Rational s = t / ((1 - q) * (1 - t));
      if (s < 1) {
        const Rational radius = abs(partial) * s / (1 - s);
        if (radius <= eps) return {partial, radius};
      }
    }
    partial *= 1 - aqj;
    aqj *= q;
  }
  throw BudgetExceeded("qpochhammer_infinite: accuracy not reached within the term budget");
}

namespace {

// Term-by-term walk over a 1phi1 series. `sum` holds the exact sum of the
// terms before the current index n; `term` is term_n.
class Phi11Walk {
 public:
  explicit Phi11Walk(const Phi11Params& params)
      : a_(params.a()), b_(params.b()), q_(params.q()), z_(params.z()),
        abs_a_(abs(a_)), abs_b_(abs(b_)), abs_z_(abs(z_)) {}

  int index() const { return n_; }
  const Rational& sum() const { return sum_; }
  const Rational& term() const { return term_; }

  /// True when |term_{m+1}/term_m| <= 1/2 is guaranteed for every m >= n.
  bool tail_dominated() const {
    if (term_ == 0) return true;  // a factor (1 - a q^j) vanished; all later terms are 0
    const Rational bq = abs_b_ * qn_;
    if (bq >= 1) return false;
    const Rational ratio = (1 + abs_a_ * qn_) * qn_ * abs_z_ / ((1 - q_ * qn_) * (1 - bq));
    return ratio * 2 <= 1;
  }

  /// Bound on |sum_{m>=n} term_m|, valid only when tail_dominated().
  Rational tail_bound() const { return 2 * abs(term_); }

  void advance() {
    sum_ += term_;
    term_ *= (1 - a_ * qn_) * (-qn_ * z_) / ((1 - q_ * qn_) * (1 - b_ * qn_));
    qn_ *= q_;
    ++n_;
  }

 private:
  Rational a_, b_, q_, z_;
  Rational abs_a_, abs_b_, abs_z_;
  Rational sum_{0};
  Rational term_{1};
  Rational qn_{1};
  int n_ = 0;
};

}  // namespace

ErrorBounded phi11(const Phi11Params& params, const Rational& eps, SeriesBudget budget) {
  Phi11Walk walk(params);
  for (;;) {
    if (walk.tail_dominated() && walk.tail_bound() <= eps) return {walk.sum(), walk.tail_bound()};
    if (walk.index() >= budget.max_terms)
      throw BudgetExceeded("phi11: accuracy not reached within the term budget");
    walk.advance();
  }
}

SignCertificate char_function_sign(const Rational& lambda, const Rational& q, SeriesBudget budget) {
  if (lambda < 0) throw std::invalid_argument("char_function_sign: lambda must be >= 0");
  Phi11Walk walk(Phi11Params(Rational(0), q, q, lambda));
  for (;;) {
    if (walk.tail_dominated() && abs(walk.sum()) > walk.tail_bound())
      return {sign(walk.sum()), walk.sum(), walk.tail_bound(), walk.index()};
    if (walk.index() >= budget.max_terms)
      throw Undecided("char_function_sign: sign undecided at the term budget (lambda near a root)");
    walk.advance();
  }
}

namespace {

// Evaluates `build(tolerance)` with tighter and tighter component tolerances
// until the combined radius is within eps.
template <typename Build>
ErrorBounded tighten_until(const Rational& eps, Build build) {
  Rational tolerance = eps / 64;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ErrorBounded result = build(tolerance);
    if (result.radius <= eps) return result;
    tolerance /= 1024;
  }
  throw BudgetExceeded("combined radius did not reach the requested accuracy");
}

}  // namespace

ErrorBounded verify_transformation(const Rational& b, const Rational& q, const Rational& z,
                                   const Rational& eps, SeriesBudget budget) {
  const Phi11Params lhs_params(Rational(0), b, q, z);
  const Phi11Params rhs_params(Rational(0), z, q, b);
  if (z == b) return ErrorBounded::exact(Rational(0));  // both sides are the same series
  return tighten_until(eps, [&](const Rational& tol) {
    const ErrorBounded lhs = phi11(lhs_params, tol, budget);
    const ErrorBounded ratio =
        qpochhammer_infinite(z, q, tol, budget) / qpochhammer_infinite(b, q, tol, budget);
    return lhs - ratio * phi11(rhs_params, tol, budget);
  });
}

ErrorBounded verify_cauchy_sum(const Rational& a, const Rational& b, const Rational& q,
                               const Rational& eps, SeriesBudget budget) {
  if (a == 0) throw std::invalid_argument("verify_cauchy_sum: a must be nonzero");
  const Phi11Params params(a, b, q, b / a);
  return tighten_until(eps, [&](const Rational& tol) {
    return phi11(params, tol, budget) -
           qpochhammer_infinite(b / a, q, tol, budget) / qpochhammer_infinite(b, q, tol, budget);
  });
}

}  // namespace padic

#include "padic/zeta.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace padic {

EigenvalueCache::EigenvalueCache(const Prime& p, unsigned digits, SpectrumOptions options)
    : p_(p), digits_(digits), options_(std::move(options)) {}

const EigenvalueRecord& EigenvalueCache::get(unsigned n) {
  if (n < 1) throw std::invalid_argument("eigenvalue index starts at 1");
  while (records_.size() < n)
    records_.push_back(refine_eigenvalue(p_, static_cast<unsigned>(records_.size()) + 1, digits_, options_));
  return records_[n - 1];
}

namespace {

// Relative slack for one MPFR log/exp/cos/sin chain at 64 digits.
const Real kUnitSlack = pow(Real(10), -58);

// x^-s for real x > 0.
Complex power_minus(const Real& x, const Complex& s) {
  const Real log_x = log(x);
  const Real magnitude = exp(-s.real() * log_x);
  const Real angle = -s.imag() * log_x;
  return Complex(magnitude * cos(angle), magnitude * sin(angle));
}

Real real_of(const Rational& x) { return to_real<Real>(x); }

// A rational no smaller than x (x > 0).
Rational rational_above(const Real& x) {
  return parse_rational(x.str(30, std::ios::scientific)) * Rational(1000001, 1000000);
}

Real abs_s(const ComplexS& s) { return sqrt(s.re * s.re + s.im * s.im); }

// Upper bound on |x^-s - y^-s| for x, y in [lo, hi]: |s| |x - y| max x^{-Re s - 1}.
Real power_spread(const ComplexS& s, const Real& width, const Real& lo, const Real& hi) {
  const Real exponent = -s.re - 1;
  const Real steep = std::max(pow(lo, exponent), pow(hi, exponent));
  return abs_s(s) * width * steep;
}

// lambda_n >= c q^{1-n} with c = (1 - q/(1 - q))^2, the n = 1 shrink factor.
Real lower_bracket_constant(const Prime& p) {
  const Rational q = p.q();
  const Rational shrink = 1 - q / (1 - q);
  return real_of(shrink * shrink);
}

// sum_{n>M} lambda_n^-sigma <= c^-sigma q^{M sigma} / (1 - q^sigma).
Real d0_tail(const Prime& p, const Real& sigma, unsigned M) {
  const Real q = real_of(p.q());
  return pow(lower_bracket_constant(p), -sigma) * pow(q, sigma * M) / (1 - pow(q, sigma));
}

}  // namespace

Complex prefactor(const Prime& p, const Complex& s, PrefactorMode mode) {
  const Real log_p = log(Real(p.value()));
  const Complex one(Real(1));
  const Complex denominator = one - exp((one - 2 * s) * log_p);
  if (abs(denominator) < pow(Real(10), -30))
    throw std::domain_error("prefactor: s lies on the pole line Re s = 1/2");
  if (mode == PrefactorMode::Paper) return Complex(1 - Real(1) / Real(p.value())) / denominator;
  return (one - exp(-2 * s * log_p)) / denominator;
}

Complex reference_closed_form(const Prime& p, const Complex& s, ReferenceMode mode) {
  const Real log_p = log(Real(p.value()));
  const Complex one(Real(1));
  const Complex base = exp(-(mode == ReferenceMode::Paper ? Real(1) : Real(2)) * s * log_p);
  if (abs(one - base) < pow(Real(10), -30))
    throw std::domain_error("reference sum: s is a pole of the closed form");
  return mode == ReferenceMode::Paper ? Complex(base / (one - base)) : Complex(one / (one - base));
}

ZetaResult zeta_D0(const ComplexS& s, const Rational& eps, EigenvalueCache& cache) {
  if (!(s.re > 0)) throw std::invalid_argument("zeta_D0: requires Re s > 0");
  const Prime& p = cache.prime();
  const Real target = real_of(eps);
  unsigned M = 1;
  while (d0_tail(p, s.re, M) > target / 2) ++M;

  const Complex sv = s.value();
  Complex sum(Real(0));
  Real eigen_error(0), magnitude(0);
  for (unsigned n = 1; n <= M; ++n) {
    const EigenvalueRecord& rec = cache.get(n);
    const Real lo = real_of(rec.lo), hi = real_of(rec.hi);
    const Complex term = power_minus(real_of(rec.midpoint()), sv);
    sum += term;
    magnitude += abs(term);
    eigen_error += power_spread(s, real_of(rec.half_width()), lo, hi);
  }
  if (eigen_error > target / 2)
    throw BudgetExceeded("zeta_D0: eigenvalue brackets too wide for the requested eps");
  ZetaResult out;
  out.s = s;
  out.value = sum;
  out.terms_used = static_cast<int>(M);
  const Real slack = kUnitSlack * magnitude * (1 + abs_s(s) * log(real_of(cache.get(M).hi) + 1)) * M;
  out.error = d0_tail(p, s.re, M) + eigen_error + slack;
  return out;
}

ZetaResult zeta_D(const ComplexS& s, const Rational& eps, PrefactorMode mode, EigenvalueCache& cache) {
  if (!(s.re > Real(1) / 2)) throw std::invalid_argument("zeta_D: requires Re s > 1/2");
  const Complex factor = prefactor(cache.prime(), s.value(), mode);
  const Real scale = abs(factor);
  const ZetaResult base = zeta_D0(s, eps / (2 * rational_above(scale)), cache);
  ZetaResult out = base;
  out.value = factor * base.value;
  out.error = scale * base.error + kUnitSlack * abs(out.value);
  return out;
}


ZetaResult schatten_trace(const Real& s, const Rational& eps, PrefactorMode mode, EigenvalueCache& cache) {
  if (!(s > Real(1) / 2)) throw std::invalid_argument("schatten_trace: requires s > 1/2");
  return zeta_D({s, Real(0)}, eps, mode, cache);
}

ZetaResult zeta_D_double_sum(const ComplexS& s, const Rational& eps, EigenvalueCache& cache) {
  if (!(s.re > Real(1) / 2)) throw std::invalid_argument("zeta_D_double_sum: requires Re s > 1/2");
  const Prime& p = cache.prime();
  const Real target = real_of(eps);
  const Real log_p = log(Real(p.value()));
  const Real r = exp((1 - 2 * s.re) * log_p);  // p^{1 - 2 sigma}
  const Real all_n = pow(lower_bracket_constant(p), -s.re) / (1 - pow(real_of(p.q()), s.re));

  // Omitted (m, n): m > Mm for any n, plus n > Mn for m <= Mm, where
  // sum_m mult(m) p^{-2 m sigma} <= 1 / (1 - r).
  unsigned Mm = 0;
  while (pow(r, Mm + 1) / (1 - r) * all_n > target / 4) ++Mm;
  unsigned Mn = 1;
  while (d0_tail(p, s.re, Mn) / (1 - r) > target / 4) ++Mn;
  const Real tail = pow(r, Mm + 1) / (1 - r) * all_n + d0_tail(p, s.re, Mn) / (1 - r);

  const Complex sv = s.value();
  Complex sum(Real(0));
  Real eigen_error(0), magnitude(0);
  for (unsigned m = 0; m <= Mm; ++m) {
    const Real mult(prufer_multiplicity(p, m));
    const Real scale = pow(Real(p.value()), 2 * m);
    for (unsigned n = 1; n <= Mn; ++n) {
      const EigenvalueRecord& rec = cache.get(n);
      const Complex term = mult * power_minus(scale * real_of(rec.midpoint()), sv);
      sum += term;
      magnitude += abs(term);
      eigen_error += mult * power_spread(s, scale * real_of(rec.half_width()), scale * real_of(rec.lo),
                                         scale * real_of(rec.hi));
    }
  }
  if (eigen_error > target / 2)
    throw BudgetExceeded("zeta_D_double_sum: eigenvalue brackets too wide for the requested eps");
  ZetaResult out;
  out.s = s;
  out.value = sum;
  out.terms_used = static_cast<int>((Mm + 1) * Mn);
  out.error = tail + eigen_error + kUnitSlack * magnitude * (1 + abs_s(s) * 200) * out.terms_used;
  return out;
}

ZetaResult zeta_D0_continued(const ComplexS& s, ReferenceMode mode, const Rational& eps, EigenvalueCache& cache) {
  if (!(s.re > -2)) throw std::invalid_argument("zeta_D0_continued: requires Re s > -2");
  const Prime& p = cache.prime();
  const Complex sv = s.value();
  const Complex closed = reference_closed_form(p, sv, mode);
  const Real target = real_of(eps);
  const Real q = real_of(p.q());
  const Real pr(p.value());

  constexpr unsigned kMaxTerms = 200;
  constexpr unsigned kWindow = 12;  // indices monitored for relative decay
  const Real noise_floor = pow(Real(10), 6 - static_cast<int>(cache.digits()));

  // Asymptotic mode, Re s > -1: |d_n| <= |s| * 2q/(1-q) * c^{-sigma-1} * q^{(n-1)(sigma+1)}.
  const bool bounded = mode == ReferenceMode::Asymptotic && s.re > -1;
  const Real geometric = bounded ? Real(pow(q, s.re + 1)) : Real(0);
  const Real lead = bounded ? Real(abs_s(s) * 2 * q / (1 - q) * pow(lower_bracket_constant(p), -s.re - 1)) : Real(0);

  Complex sum(Real(0));
  Real eigen_error(0), magnitude(0), tail(0);
  std::vector<Real> corrections;  // |d_n|
  std::vector<Real> relative;     // |d_n| / |mu_n^-s|
  bool converged = false;
  unsigned n = 1;
  for (; n <= kMaxTerms; ++n) {
    const EigenvalueRecord& rec = cache.get(n);
    const Real mu = mode == ReferenceMode::Paper ? Real(pow(pr, n)) : Real(pow(pr, 2 * n - 2));
    const Complex mu_term = power_minus(mu, sv);
    const Complex d = power_minus(real_of(rec.midpoint()), sv) - mu_term;
    sum += d;
    magnitude += abs(d) + abs(mu_term);
    eigen_error += power_spread(s, real_of(rec.half_width()), real_of(rec.lo), real_of(rec.hi));
    corrections.push_back(abs(d));
    relative.push_back(abs(d) / abs(mu_term));
    if (n < kWindow) continue;

    if (bounded) {
      tail = lead * pow(geometric, n) / (1 - geometric);
      if (tail <= target / 4) {
        converged = true;
        break;
      }
    } else {
      Real ratio(0);
      for (unsigned j = n - 3; j < n; ++j) ratio = std::max(ratio, Real(corrections[j] / corrections[j - 1]));
      if (ratio < 1) {
        tail = corrections.back() * ratio / (1 - ratio);
        if (tail <= target / 4) {
          converged = true;
          break;
        }
      } else if (n >= 2 * kWindow) {
        bool growing = true;
        for (unsigned j = n - kWindow; j < n && growing; ++j) growing = corrections[j] >= corrections[j - 1];
        if (growing) break;  // corrections increase steadily: the sum diverges
      }
    }
  }

  ZetaResult out;
  out.s = s;
  out.value = sum + closed;
  out.terms_used = static_cast<int>(std::min(n, kMaxTerms));
  out.tail_rigorous = bounded;

  // Relative decay over the monitored window: in the matched mode
  // |d_{j+1}|/|mu_{j+1}^-s| shrinks like q per step.
  Real worst(0);
  unsigned counted = 0;
  for (unsigned j = std::min<unsigned>(kWindow, static_cast<unsigned>(relative.size())) - 1; j >= 1 && counted < 4; --j) {
    if (relative[j] <= noise_floor * abs_s(s)) continue;
    worst = std::max(worst, Real(relative[j] / relative[j - 1]));
    ++counted;
  }
  out.reference_mismatch = worst > Real(1) / 2;

  if (!converged) {
    out.error = std::numeric_limits<Real>::infinity();
    out.tail_rigorous = false;
    return out;
  }
  out.error = tail + eigen_error + kUnitSlack * magnitude * (1 + abs_s(s) * 200) * out.terms_used;
  return out;
}

std::vector<Pole> pole_list(const Prime& p, ReferenceMode mode, int kmax) {
  const Real log_p = log(Real(p.value()));
  const Real pi = boost::math::constants::pi<Real>();
  const Real spacing = (mode == ReferenceMode::Paper ? 2 : 1) * pi / log_p;
  std::vector<Pole> out;
  for (int k = -kmax; k <= kmax; ++k) out.push_back({Real(0), Real(spacing * k), k, "reference"});
  for (int k = -kmax; k <= kmax; ++k) out.push_back({Real(1) / 2, Real(-pi * k / log_p), k, "prefactor"});
  return out;
}

}  // namespace padic

#include "padic/spectrum.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace padic {

std::pair<Rational, Rational> transported_bracket(const Prime& p, unsigned n) {
  if (n < 1) throw std::invalid_argument("eigenvalue index starts at 1");
  const Rational q = p.q();
  const Rational qn = pow(q, n);
  const Rational hi = pow(q, 1 - static_cast<long>(n));
  const Rational shrink = 1 - qn / (1 - qn);
  return {hi * shrink * shrink, hi};
}

std::pair<Rational, Rational> scan_bracket(const Rational& q, unsigned n, const Rational& ceiling,
                                           SeriesBudget budget) {
  if (n < 1) throw std::invalid_argument("eigenvalue index starts at 1");
  const Rational step(9, 8);
  Rational prev(0);
  int prev_sign = 1;  // phi(0) = 1
  unsigned changes = 0;
  for (Rational x(1, 16); x <= ceiling; x *= step) {
    const int s = char_function_sign(x, q, budget).sign;
    if (s != prev_sign && ++changes == n) return {prev, x};
    prev = x;
    prev_sign = s;
  }
  throw std::runtime_error("scan_bracket: ceiling reached before the requested root");
}

std::pair<Rational, Rational> bracket_eigenvalue(const Prime& p, unsigned n, const SpectrumOptions& options) {
  const auto [lo, hi] = transported_bracket(p, n);
  const Rational q = p.q();
  const int expected_lo = (n % 2 == 1) ? 1 : -1;
  try {
    if (char_function_sign(lo, q, options.budget).sign == expected_lo &&
        char_function_sign(hi, q, options.budget).sign == -expected_lo)
      return {lo, hi};
  } catch (const Undecided&) {
    // fall through to the scan
  }
  return scan_bracket(q, n, options.scan_ceiling, options.budget);
}

namespace {

unsigned achieved_digits(const Rational& lo, const Rational& hi) {
  unsigned d = 0;
  Rational width = hi - lo;
  while (width * 10 <= hi && d < 10000) {
    width *= 10;
    ++d;
  }
  return d;
}

// Sign at a split point near the middle; retries a few nearby points when the
// midpoint is too close to the root for the budget.
std::pair<Rational, int> split(const Rational& lo, const Rational& hi, const Rational& q, SeriesBudget budget) {
  static const Rational fractions[] = {Rational(1, 2), Rational(7, 16), Rational(9, 16), Rational(3, 8),
                                       Rational(5, 8)};
  for (std::size_t i = 0;; ++i) {
    const Rational x = lo + (hi - lo) * fractions[i];
    try {
      return {x, char_function_sign(x, q, budget).sign};
    } catch (const Undecided&) {
      if (i + 1 == std::size(fractions)) throw;
    }
  }
}

}  // namespace

EigenvalueRecord refine_eigenvalue(const Prime& p, unsigned n, unsigned digits, const SpectrumOptions& options) {
  auto [lo, hi] = bracket_eigenvalue(p, n, options);
  const Rational q = p.q();
  EigenvalueRecord rec;
  rec.p = p.value();
  rec.index = n;
  rec.sign_lo = char_function_sign(lo, q, options.budget).sign;
  rec.sign_hi = char_function_sign(hi, q, options.budget).sign;
  if (rec.sign_lo == rec.sign_hi) throw std::logic_error("refine_eigenvalue: bracket without a sign change");
  const Rational target = ten_to_minus(digits);
  while (hi - lo > target * hi) {
    auto [x, s] = split(lo, hi, q, options.budget);
    if (s == rec.sign_lo)
      lo = std::move(x);
    else
      hi = std::move(x);
  }
  rec.lo = std::move(lo);
  rec.hi = std::move(hi);
  rec.digits = achieved_digits(rec.lo, rec.hi);
  return rec;
}

std::vector<EigenvalueRecord> refine_eigenvalues(const Prime& p, unsigned count, unsigned digits,
                                                 const SpectrumOptions& options) {
  std::vector<EigenvalueRecord> out;
  out.reserve(count);
  if (!options.parallel) {
    for (unsigned n = 1; n <= count; ++n) out.push_back(refine_eigenvalue(p, n, digits, options));
    return out;
  }
  std::vector<std::future<EigenvalueRecord>> jobs;
  for (unsigned n = 1; n <= count; ++n)
    jobs.push_back(std::async(std::launch::async, [&, n] { return refine_eigenvalue(p, n, digits, options); }));
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

namespace {

// |c(2k+2) / c(2k)| = lambda p^{2k} (p^2-1) / ((1-q)(p^{2k}-1)(p^{2k+2}-1)), decreasing in k.
Rational coefficient_ratio(const Rational& lambda, const Prime& p, unsigned k) {
  const Rational p2(p.value() * p.value());
  const Rational q = p.q();
  const Rational p2k = pow(p2, k);
  return abs(lambda) * p2k * (p2 - 1) / ((1 - q) * (p2k - 1) * (p2k * p2 - 1));
}

}  // namespace

EigenvectorExpansion eigenvector_coefficients(const Rational& lambda, const Prime& p, unsigned K) {
  if (K < 1) throw std::invalid_argument("eigenvector_coefficients: K must be >= 1");
  const Rational q = p.q();
  const Rational p2(p.value() * p.value());
  EigenvectorExpansion out;
  out.p = p.value();
  out.lambda = lambda;
  out.coefficients.reserve(K);
  out.coefficients.emplace_back(1);
  const Rational lead = -lambda / (1 - q);
  for (unsigned k = 2; k <= K; ++k) {
    Rational den = pow(p2, k) - 1;
    for (unsigned j = 2; j + 1 <= k; ++j) {
      const Rational factor = pow(p2, j) - 1;
      den *= factor * factor;
    }
    const Rational num = pow(lead, k - 1) * pow(Rational(p.value()), static_cast<long>(k) * (k - 1)) *
                         pow(p2 - 1, static_cast<long>(k) - 2);
    out.coefficients.push_back(num / den);
  }

  // Omitted part: sum_{k>K} |c(2k)| / (1 - q^k), bounded through the
  // decreasing coefficient ratio.
  Rational tail(0);
  Rational current = abs(out.coefficients.back());
  for (unsigned k = K;; ++k) {
    const Rational rho = coefficient_ratio(lambda, p, k);
    const Rational damp = 1 - pow(q, k + 1);
    if (rho < 1) {
      tail += current * rho / ((1 - rho) * damp);
      break;
    }
    current *= rho;
    tail += current / damp;
  }
  out.tail_bound = tail;
  return out;
}

HalfLineSeq synthesize_eigenvector(const EigenvectorExpansion& expansion, unsigned N) {
  const Rational q(1, expansion.p * expansion.p);
  HalfLineSeq f(N);
  Rational qn(1);  // q^n
  for (unsigned n = 0; n < N; ++n) {
    Rational value(0);
    Rational qnk = qn;  // q^{nk}
    for (const Rational& c : expansion.coefficients) {
      value += c * qnk;
      qnk *= qn;
    }
    f[n] = value;
    qn *= q;
  }
  return f;
}

EigenResidual eigen_residual(const EigenvectorExpansion& expansion, unsigned N) {
  if (N < 2) throw std::invalid_argument("eigen_residual: need at least two samples");
  const Prime p(expansion.p);
  const HalfLineSeq f = synthesize_eigenvector(expansion, N + 1);
  const HalfLineSeq af = apply_D0starD0(p, f);
  Rational residual_sq(0), norm_sq(0);
  for (unsigned n = 0; n < N; ++n) {
    const Rational r = af[n] - expansion.lambda * f[n];
    residual_sq += r * r;
    norm_sq += f[n] * f[n];
  }
  const Real norm = sqrt(to_real<Real>(norm_sq));
  const Rational initial = f[0] - f[1] - expansion.lambda * f[0];
  return {Real(sqrt(to_real<Real>(residual_sq)) / norm), Real(to_real<Real>(abs(initial)) / norm)};
}

ErrorBounded c2_identity_discrepancy(const EigenvectorExpansion& expansion) {
  const Rational q(1, expansion.p * expansion.p);
  // sum_{n>=0} f_n = sum_k c(2k) / (1 - q^k)
  Rational total(0);
  Rational qk = q;
  for (const Rational& c : expansion.coefficients) {
    total += c / (1 - qk);
    qk *= q;
  }
  const Rational scale = expansion.lambda / (1 - q);
  return {expansion.coefficients.front() - scale * total, abs(scale) * expansion.tail_bound};
}

Rational remainder_bound(const Rational& lambda, const Prime& p, unsigned N) {
  if (N < 1) throw std::invalid_argument("remainder_bound: N must be >= 1");
  const Rational q = p.q();
  const ErrorBounded product = qpochhammer_infinite(q, q, Rational(1, 1000000000000LL) * q);
  const Rational lower = product.lower();
  return pow(abs(lambda), N) /
         (pow(Rational(p.value()), static_cast<long>(N) * (N + 1)) * lower * lower);
}

Rational empirical_remainder(const EigenvectorExpansion& expansion, unsigned N) {
  if (N < 1) throw std::invalid_argument("empirical_remainder: N must be >= 1");
  const Rational q(1, expansion.p * expansion.p);
  const unsigned samples = 40;
  const auto& c = expansion.coefficients;

  Rational remainder(0);  // sum_{n=1}^{samples} |r_n|
  Rational l1(0);         // sum_{n=0}^{samples} |f_n|
  Rational qn(1);
  for (unsigned n = 0; n <= samples; ++n) {
    Rational full(0), head(0);
    Rational qnk = qn;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Rational term = c[k] * qnk;
      full += term;
      if (k + 1 < N) head += term;
      qnk *= qn;
    }
    l1 += abs(full);
    if (n >= 1) remainder += abs(full - head);
    qn *= q;
  }
  // Samples past `samples`: sum_{n>samples} sum_{k>=N} |c(2k)| q^{nk}.
  for (std::size_t k = N - 1; k < c.size(); ++k) {
    const Rational qk = pow(q, static_cast<long>(k + 1));
    remainder += abs(c[k]) * pow(qk, samples + 1) / (1 - qk);
  }
  remainder += expansion.tail_bound;
  const Rational l1_lower = l1 - expansion.tail_bound;
  if (l1_lower <= 0) throw std::runtime_error("empirical_remainder: l1 norm not resolved");
  return remainder / l1_lower;
}

ErrorBounded neve_characteristic(const Rational& lambda, const Prime& p, const Rational& eps, SeriesBudget budget) {
  if (lambda < 0) throw std::invalid_argument("neve_characteristic: lambda must be >= 0");
  const Rational q = p.q();
  const Rational p2(p.value() * p.value());
  Rational sum = q + lambda - 1;
  Rational den(1);          // prod_{j=2}^{k} (1 - p^{2j})(1 - p^{2-2j})
  Rational lambda_pow(1);   // lambda^{k-1}
  Rational p_pow(1);        // p^{2k-2}
  Rational qk = q;          // q^k
  for (int k = 2;; ++k) {
    const Rational p2k = pow(p2, k);
    den *= (1 - p2k) * (1 - pow(q, k - 1));
    lambda_pow *= lambda;
    p_pow *= p2;
    qk *= q;
    // |term_j| <= U_j = (1 + lambda) lambda^{j-1} p^{2j-2} / |den_j|, and
    // U_{j+1}/U_j = lambda p^2 / ((p^{2j+2} - 1)(1 - p^{-2j})) decreases in j.
    const Rational bound = (1 + lambda) * lambda_pow * p_pow / abs(den);
    const Rational ratio = lambda * p2 / ((p2k * p2 - 1) * (1 - qk));
    if (ratio * 2 <= 1 && 2 * bound <= eps) return {sum, 2 * bound};
    if (k > budget.max_terms) throw BudgetExceeded("neve_characteristic: term budget exceeded");
    sum += (qk + lambda - 1) * lambda_pow * p_pow / den;
  }
}

std::vector<SpectrumEntry> dstar_d_spectrum(const Prime& p, const Rational& cutoff, unsigned digits,
                                            const SpectrumOptions& options) {
  if (cutoff <= 0) throw std::invalid_argument("dstar_d_spectrum: cutoff must be positive");
  std::vector<SpectrumEntry> entries;
  const Rational p2(p.value() * p.value());
  for (unsigned n = 1;; ++n) {
    EigenvalueRecord rec = refine_eigenvalue(p, n, digits, options);
    if (rec.lo > cutoff) break;
    Rational scale(1);
    for (unsigned m = 0; scale * rec.lo <= cutoff; ++m, scale *= p2) {
      // Tighten while the cutoff still falls inside the scaled bracket.
      for (unsigned extra = 10; scale * rec.hi > cutoff && scale * rec.lo <= cutoff && extra <= 60; extra += 10)
        rec = refine_eigenvalue(p, n, digits + extra, options);
      if (scale * rec.hi > cutoff) continue;
      SpectrumEntry entry;
      entry.m = m;
      entry.n = n;
      entry.value = {scale * rec.midpoint(), scale * rec.half_width()};
      entry.multiplicity = prufer_multiplicity(p, m);
      entries.push_back(entry);
    }
  }
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.value.center != b.value.center) return a.value.center < b.value.center;
    return a.m != b.m ? a.m < b.m : a.n < b.n;
  });
  return entries;
}

}  // namespace padic

#ifndef PADIC_TESTS_SUPPORT_HPP
#define PADIC_TESTS_SUPPORT_HPP

#include "padic/operators.hpp"

#include <random>

namespace padic::testing {

/// Small random rational in [-range, range] with denominator up to max_den.
inline Rational random_rational(std::mt19937_64& rng, int range = 5, int max_den = 7) {
  std::uniform_int_distribution<int> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Random tree function with roughly `density` of its vertices nonzero.
inline TreeFunction<Rational> random_tree_function(std::mt19937_64& rng, const Prime& p, unsigned depth,
                                                   double density = 0.5) {
  TreeFunction<Rational> f(p, depth);
  std::bernoulli_distribution keep(density);
  for (unsigned n = 0; n <= depth; ++n)
    for (Eigen::Index k = 0; k < f.level(n).size(); ++k)
      if (keep(rng)) f.level(n)[k] = random_rational(rng);
  return f;
}

}  // namespace padic::testing

#endif  // PADIC_TESTS_SUPPORT_HPP

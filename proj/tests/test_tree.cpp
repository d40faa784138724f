#include "padic/tree.hpp"

#include <doctest.h>

#include <set>

using namespace padic;

using C = ComplexT<64>;

TEST_CASE("primes") {
  CHECK(Prime(2).value() == 2u);
  CHECK(Prime(97).q() == Rational(1, 9409));
  CHECK_THROWS_AS(Prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Prime(0), std::invalid_argument);
}

TEST_CASE("children and parents") {
  const Prime two(2), three(3);
  CHECK(children(two, {0, 0}) == std::vector<Vertex>{{1, 0}, {1, 1}});
  CHECK(children(three, {1, 2}) == std::vector<Vertex>{{2, 2}, {2, 5}, {2, 8}});
  CHECK(parent(two, {3, 5}) == Vertex{2, 1});
  CHECK(parent(two, {1, 1}) == Vertex{0, 0});
  CHECK(parent(three, {2, 5}) == Vertex{1, 2});
  CHECK_THROWS_AS(parent(two, {0, 0}), std::domain_error);
  CHECK_THROWS(children(two, {2, 4}));

  for (const Prime& p : {two, three})
    for (unsigned n = 0; n <= 4; ++n) {
      CHECK(level_size(p, n) == pow_u64(p, n));
      for (std::uint64_t k = 0; k < level_size(p, n); ++k) {
        const auto kids = children(p, {n, k});
        CHECK(kids.size() == p.value());
        for (const Vertex& c : kids) CHECK(parent(p, c) == Vertex{n, k});
      }
    }
}

TEST_CASE("weights") {
  const Prime two(2), three(3);
  CHECK(weight(two, {0, 0}) == 1);
  CHECK(weight(three, {2, 7}) == Rational(1, 9));
  CHECK(weight(two, {5, 3}) == Rational(1, 32));
  for (unsigned n = 0; n <= 6; ++n) {
    Rational total(0);
    for (std::uint64_t k = 0; k < level_size(three, n); ++k) total += weight(three, {n, k});
    CHECK(total == 1);
  }
}

TEST_CASE("flat indices enumerate the truncated tree") {
  const Prime p(3);
  CHECK(vertex_count(p, 3) == 1 + 3 + 9 + 27);
  std::uint64_t expected = 0;
  for (unsigned n = 0; n <= 3; ++n)
    for (std::uint64_t k = 0; k < level_size(p, n); ++k) CHECK(flat_index(p, {n, k}) == expected++);
}

TEST_CASE("Prufer coordinates") {
  const Prime two(2), three(3);
  CHECK(to_prufer(two, {3, 4}) == PruferPoint{1, 1, 2});
  CHECK(to_prufer(two, {5, 0}) == PruferPoint{0, 0, 5});
  CHECK(from_prufer(two, {1, 1, 2}) == Vertex{3, 4});
  CHECK(from_prufer(two, {0, 0, 4}) == Vertex{4, 0});
  CHECK(from_prufer(three, {2, 2, 0}) == Vertex{2, 2});
  CHECK_THROWS(from_prufer(two, {2, 1, 0}));  // p | r
  CHECK_THROWS(from_prufer(two, {1, 0, 0}));  // m = 0 needs r = 0

  for (const Prime& p : {two, three}) {
    std::set<PruferPoint> seen;
    std::set<std::pair<std::uint64_t, unsigned>> fibers;
    const unsigned depth = 6;
    for (unsigned n = 0; n <= depth; ++n)
      for (std::uint64_t k = 0; k < level_size(p, n); ++k) {
        const PruferPoint g = to_prufer(p, {n, k});
        CHECK(from_prufer(p, g) == Vertex{n, k});
        CHECK(seen.insert(g).second);
        fibers.insert({g.r, g.m});
      }
    // Distinct (r, m) with m <= depth: 1 + sum (p^m - p^{m-1}) = p^depth.
    CHECK(fibers.size() == pow_u64(p, depth));
    std::uint64_t total = 0;
    for (unsigned m = 0; m <= depth; ++m) total += prufer_multiplicity(p, m);
    CHECK(total == fibers.size());
  }
  CHECK(prufer_multiplicity(three, 0) == 1u);
  CHECK(prufer_multiplicity(three, 1) == 2u);
  CHECK(prufer_multiplicity(three, 2) == 6u);
  CHECK(prufer_multiplicity(three, 3) == 18u);
}

TEST_CASE("DOT output") {
  const std::string dot = tree_to_dot(Prime(2), 2);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"2:3\"") != std::string::npos);
  CHECK(dot.find("weight") != std::string::npos);
  CHECK(dot.find("\"1:1\" -> \"2:3\"") != std::string::npos);
}

TEST_CASE("level DFT") {
  const Prime p(3);
  VectorX<C> ones = VectorX<C>::Constant(9, C(1));
  const VectorX<C> delta = level_dft<64>(p, ones);
  CHECK(abs(delta[0] - C(1)) < Real("1e-60"));
  for (Eigen::Index l = 1; l < 9; ++l) CHECK(abs(delta[l]) < Real("1e-60"));

  for (unsigned level = 0; level <= 4; ++level) {
    const auto size = static_cast<Eigen::Index>(level_size(Prime(2), level));
    VectorX<C> f(size);
    for (Eigen::Index k = 0; k < size; ++k) f[k] = C(Real(k * k + 1) / 7, Real(3 - k) / 5);
    const VectorX<C> fhat = level_dft<64>(Prime(2), f);
    const VectorX<C> back = level_idft<64>(Prime(2), fhat);
    for (Eigen::Index k = 0; k < size; ++k) CHECK(abs(back[k] - f[k]) < Real("1e-20"));
    CHECK(dft_roundoff_bound<64>(f) < Real("1e-50"));

    // Parseval: sum |f|^2 p^-n = sum |fhat|^2.
    Real lhs(0), rhs(0);
    for (Eigen::Index k = 0; k < size; ++k) {
      lhs += norm(f[k]);
      rhs += norm(fhat[k]);
    }
    lhs /= Real(size);
    CHECK(abs(lhs - rhs) < Real("1e-50"));
  }
  CHECK_THROWS(level_dft<64>(p, VectorX<C>::Constant(4, C(1))));
}

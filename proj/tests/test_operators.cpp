#include "padic/operators.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace padic;

namespace {

TreeFunction<Rational> delta(const Prime& p, unsigned depth, const Vertex& v) {
  TreeFunction<Rational> f(p, depth);
  f[v] = 1;
  return f;
}

HalfLineSeq unit(unsigned size, unsigned i) {
  HalfLineSeq e = HalfLineSeq::Constant(size, Rational(0));
  e[i] = 1;
  return e;
}

}  // namespace

TEST_CASE("D on basic functions") {
  const Prime two(2);
  TreeFunction<Rational> c(two, 4);
  for (unsigned n = 0; n <= 4; ++n) c.level(n).setConstant(Rational(3, 2));
  const auto dc = apply_D(c);
  for (unsigned n = 0; n < 4; ++n) CHECK(dc.level(n).isZero());
  CHECK(dc[{4, 0}] == Rational(3, 2) * 16);  // implicit zeros above the cut

  const auto d10 = apply_D(delta(two, 3, {1, 0}));
  CHECK(d10[{0, 0}] == Rational(-1, 2));
  CHECK(d10[{1, 0}] == 2);
  CHECK(d10[{1, 1}] == 0);
  CHECK(d10.level(2).isZero());

  CHECK(apply_D(delta(two, 3, {0, 0})) == delta(two, 3, {0, 0}));
}

TEST_CASE("D* on basic functions") {
  const Prime two(2);
  const auto g = apply_Dstar(delta(two, 3, {0, 0}));
  CHECK(g[{0, 0}] == 1);
  CHECK(g[{1, 0}] == -1);
  CHECK(g[{1, 1}] == -1);
  CHECK(g.level(2).isZero());
  CHECK(apply_Dstar(TreeFunction<Rational>(two, 3)) == TreeFunction<Rational>(two, 3));

  const auto f = delta(two, 3, {1, 0});
  const auto h = delta(two, 3, {0, 0});
  CHECK(weighted_inner(apply_D(f), h) == Rational(-1, 2));
  CHECK(weighted_inner(f, apply_Dstar(h)) == Rational(-1, 2));
}

TEST_CASE("adjointness on random pairs (exact)") {
  std::mt19937_64 rng(20240611);
  for (const Prime p : {Prime(2), Prime(3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      // Depth-5 functions living on levels <= 4, away from the cut.
      auto f = testing::random_tree_function(rng, p, 5);
      auto g = testing::random_tree_function(rng, p, 5);
      f.level(5).setZero();
      g.level(5).setZero();
      CHECK(weighted_inner(apply_D(f), g) == weighted_inner(f, apply_Dstar(g)));
      CHECK(plain_inner(apply_Dhat(f), g) == plain_inner(f, apply_Dhatstar(g)));
    }
  }
}

TEST_CASE("Fourier-side operators") {
  const Prime two(2);
  CHECK(apply_Dhat(delta(two, 3, {0, 0})) == delta(two, 3, {0, 0}));
  const auto g = apply_Dhatstar(delta(two, 3, {1, 1}));
  TreeFunction<Rational> expected(two, 3);
  expected[{1, 1}] = 2;
  expected[{2, 2}] = -2;  // p | 2: p^2 (0 - (1/p) ghat_1(1))
  CHECK(g == expected);
}

TEST_CASE("half-line operators") {
  const Prime two(2), three(3);
  CHECK(apply_D0(two, unit(5, 0)) == unit(5, 0));
  CHECK(apply_D0star(two, unit(5, 0)) == unit(5, 0) - unit(5, 1));

  // Constant c on 0..N-1: differences vanish except at the cut, where f_N = 0.
  const unsigned N = 6;
  const HalfLineSeq c = HalfLineSeq::Constant(N, Rational(5, 3));
  const HalfLineSeq dc = apply_D0(three, c);
  for (unsigned n = 0; n + 1 < N; ++n) CHECK(dc[n] == 0);
  CHECK(dc[N - 1] == Rational(5, 3) * pow(Rational(3), N - 1));

  CHECK(apply_D0starD0(two, unit(5, 0)) == unit(5, 0) - unit(5, 1));
  CHECK(apply_D0starD0(two, HalfLineSeq::Constant(5, Rational(0))).isZero());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    HalfLineSeq f(12);
    for (Eigen::Index i = 0; i < 12; ++i) f[i] = i < 9 ? testing::random_rational(rng) : Rational(0);
    CHECK(apply_D0star(three, apply_D0(three, f)) == apply_D0starD0(three, f));
  }

  // One-term eigenvector candidate: (A f)_0 / f_0 = 1 - p^-2.
  HalfLineSeq geo(10);
  for (Eigen::Index n = 0; n < 10; ++n) geo[n] = pow(Rational(1, 4), n);
  CHECK(apply_D0starD0(two, geo)[0] / geo[0] == Rational(3, 4));
}

TEST_CASE("truncated matrices") {
  const Prime two(2), three(3);
  const auto a = truncated_matrix(OperatorId::D0StarD0, two, 3);
  MatrixX<Rational> expected(3, 3);
  expected << 1, -1, 0, -1, 5, -4, 0, -4, 20;
  CHECK(a.entries == expected);
  CHECK(a.op == OperatorId::D0StarD0);
  CHECK(a.boundary == "dirichlet");

  for (const Prime& p : {two, three}) {
    const auto d0 = truncated_matrix(OperatorId::D0, p, 9);
    const auto d0s = truncated_matrix(OperatorId::D0Star, p, 9);
    const auto big = truncated_matrix(OperatorId::D0StarD0, p, 9);
    CHECK(big.entries == d0.entries.transpose() * d0.entries);
    CHECK(d0s.entries == d0.entries.transpose());
    CHECK(big.entries == big.entries.transpose());
    for (Eigen::Index n = 1; n < 9; ++n) {
      const Rational p2n = pow(Rational(p.value()), 2 * n);
      CHECK(big.entries(n, n) == p2n + p2n / (p.value() * p.value()));
      CHECK(big.entries(n - 1, n) == -p2n / (p.value() * p.value()));
    }

    const auto td = truncated_matrix(OperatorId::TreeD, p, 3);
    const auto tds = truncated_matrix(OperatorId::TreeDStar, p, 3);
    const auto tdsd = truncated_matrix(OperatorId::TreeDStarD, p, 3);
    CHECK(td.dimension() == static_cast<Eigen::Index>(vertex_count(p, 3)));
    CHECK(tdsd.entries == tds.entries * td.entries);
  }
  CHECK_THROWS_AS(truncated_matrix(OperatorId::TreeD, two, 12), std::length_error);
  CHECK_THROWS(truncated_matrix(OperatorId::D0, two, 0));
}

TEST_CASE("symmetrized tree D*D") {
  const Prime two(2);
  const auto s = tree_dstar_d_symmetric<50>(two, 3);
  CHECK(s.dimension() == 15);
  CHECK((s.entries - s.entries.transpose()).norm() < Real50("1e-45"));
  // Same trace as the vertex-coordinate matrix (similar operators).
  const auto m = truncated_matrix(OperatorId::TreeDStarD, two, 3);
  CHECK(abs(s.entries.trace() - to_real<Real50>(m.entries.trace())) < Real50("1e-40"));
}

TEST_CASE("matrix text format round trip") {
  const auto a = truncated_matrix(OperatorId::D0StarD0, Prime(3), 5);
  std::stringstream buffer;
  write_matrix_market(buffer, a);
  CHECK(buffer.str().rfind("%%PadicMatrix D0*D0 p=3 depth=5 boundary=dirichlet", 0) == 0);
  const auto b = read_matrix_market(buffer);
  CHECK(b.entries == a.entries);
  CHECK(b.op == a.op);
  CHECK(b.prime == 3u);
  CHECK(b.depth == 5u);
  std::stringstream bad("%%PadicMatrix D0 p=2 depth=2 boundary=dirichlet\n2 2\n1/1 0/1\n");
  CHECK_THROWS(read_matrix_market(bad));
}

TEST_CASE("operator names") {
  for (OperatorId op : {OperatorId::D0, OperatorId::D0Star, OperatorId::D0StarD0, OperatorId::TreeD,
                        OperatorId::TreeDStar, OperatorId::TreeDStarD})
    CHECK(operator_from_string(to_string(op)) == op);
  CHECK_THROWS(operator_from_string("nope"));
}

TEST_CASE("Prufer fibers reduce D-hat to p^m D0") {
  const Prime p(3);
  const unsigned depth = 5;
  std::mt19937_64 rng(99);
  for (unsigned m = 0; m <= 3; ++m) {
    const std::uint64_t r = m == 0 ? 0 : 1;
    const unsigned length = depth - m + 1;
    HalfLineSeq g(length);
    for (unsigned l = 0; l < length; ++l) g[l] = testing::random_rational(rng);
    TreeFunction<Rational> fhat(p, depth);
    for (unsigned l = 0; l < length; ++l) fhat[from_prufer(p, {r, m, l})] = g[l];

    const Rational scale = pow(Rational(p.value()), m);
    const HalfLineSeq expected = scale * apply_D0(p, g);
    const HalfLineSeq expected_star = scale * apply_D0star(p, g);
    const auto dhat = apply_Dhat(fhat);
    const auto dhatstar = apply_Dhatstar(fhat);
    TreeFunction<Rational> off_fiber = dhat;
    for (unsigned l = 0; l < length; ++l) {
      const Vertex v = from_prufer(p, {r, m, l});
      CHECK(dhat[v] == expected[l]);
      CHECK(dhatstar[v] == expected_star[l]);
      off_fiber[v] = 0;
    }
    CHECK(off_fiber == TreeFunction<Rational>(p, depth));
  }
}

TEST_CASE("per-level DFT conjugates D into D-hat") {
  using C = ComplexT<64>;
  const Prime p(2);
  const unsigned depth = 4;
  std::mt19937_64 rng(5);
  TreeFunction<C> f(p, depth);
  for (unsigned n = 0; n <= depth; ++n)
    for (Eigen::Index k = 0; k < f.level(n).size(); ++k)
      f.level(n)[k] = C(to_real<Real>(testing::random_rational(rng)), to_real<Real>(testing::random_rational(rng)));

  auto transform = [&](const TreeFunction<C>& x) {
    TreeFunction<C> out(p, depth);
    for (unsigned n = 0; n <= depth; ++n) out.level(n) = level_dft<64>(p, x.level(n));
    return out;
  };
  const auto lhs = transform(apply_D(f));
  const auto rhs = apply_Dhat(transform(f));
  for (unsigned n = 0; n <= depth; ++n)
    for (Eigen::Index k = 0; k < f.level(n).size(); ++k) CHECK(abs(lhs.level(n)[k] - rhs.level(n)[k]) < Real("1e-10"));
}

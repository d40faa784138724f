#ifndef PADIC_OPERATORS_HPP
#define PADIC_OPERATORS_HPP

// The forward derivative D on the p-adic tree, its adjoint, their Fourier
// images and the half-line model operator D0, acting on finitely supported
// data truncated at a fixed depth. Values beyond the truncation are zero
// (Dirichlet boundary), so every action here is the action of a finite matrix
// and the adjoint identities hold exactly.
//
// Everything is templated on the scalar: Rational for exact checks, ComplexT
// for the Fourier-side floating checks.

#include "padic/numeric.hpp"
#include "padic/tree.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace padic {

// ---------------------------------------------------------------------------
// Scalar helpers

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& x) { return x; }
  static Rational conj(const Rational& x) { return x; }
};

template <unsigned Digits>
struct ScalarTraits<RealT<Digits>> {
  static RealT<Digits> from_rational(const Rational& x) { return to_real<RealT<Digits>>(x); }
  static RealT<Digits> conj(const RealT<Digits>& x) { return x; }
};

template <unsigned Digits>
struct ScalarTraits<ComplexT<Digits>> {
  static ComplexT<Digits> from_rational(const Rational& x) {
    return ComplexT<Digits>(to_real<RealT<Digits>>(x));
  }
  static ComplexT<Digits> conj(const ComplexT<Digits>& x) { return boost::multiprecision::conj(x); }
};

template <typename Scalar>
Scalar scalar_from(const Rational& x) {
  return ScalarTraits<Scalar>::from_rational(x);
}

// ---------------------------------------------------------------------------
// Data

/// A function on the vertices of levels 0..depth of the tree; zero beyond.
template <typename Scalar>
class TreeFunction {
 public:
  TreeFunction(const Prime& p, unsigned depth) : p_(p), depth_(depth) {
    levels_.reserve(depth + 1);
    for (unsigned n = 0; n <= depth; ++n)
      levels_.push_back(VectorX<Scalar>::Constant(static_cast<Eigen::Index>(level_size(p, n)),
                                                  scalar_from<Scalar>(Rational(0))));
  }

  const Prime& prime() const { return p_; }
  unsigned depth() const { return depth_; }

  VectorX<Scalar>& level(unsigned n) { return levels_.at(n); }
  const VectorX<Scalar>& level(unsigned n) const { return levels_.at(n); }

  Scalar& operator[](const Vertex& v) { return levels_.at(v.level)[static_cast<Eigen::Index>(v.index)]; }
  const Scalar& operator[](const Vertex& v) const {
    return levels_.at(v.level)[static_cast<Eigen::Index>(v.index)];
  }

  /// Levels concatenated in flat_index order.
  VectorX<Scalar> flatten() const {
    VectorX<Scalar> out(static_cast<Eigen::Index>(vertex_count(p_, depth_)));
    Eigen::Index offset = 0;
    for (const auto& lv : levels_) {
      out.segment(offset, lv.size()) = lv;
      offset += lv.size();
    }
    return out;
  }

  bool operator==(const TreeFunction& other) const {
    if (p_.value() != other.p_.value() || depth_ != other.depth_) return false;
    for (unsigned n = 0; n <= depth_; ++n)
      if (levels_[n] != other.levels_[n]) return false;
    return true;
  }

 private:
  Prime p_;
  unsigned depth_;
  std::vector<VectorX<Scalar>> levels_;
};

/// One component of the fibre decomposition: a sequence indexed by n = 0..N-1.
using HalfLineSeq = VectorX<Rational>;

// ---------------------------------------------------------------------------
// Tree operators

/// (Df)_n(k) = p^n (f_n(k) - (1/p) sum_j f_{n+1}(k + j p^n)).
template <typename Scalar>
TreeFunction<Scalar> apply_D(const TreeFunction<Scalar>& f) {
  const Prime& p = f.prime();
  const Scalar inv_p = scalar_from<Scalar>(Rational(1, p.value()));
  TreeFunction<Scalar> out(p, f.depth());
  for (unsigned n = 0; n <= f.depth(); ++n) {
    const Scalar scale = scalar_from<Scalar>(Rational(ipow(Integer(p.value()), n)));
    const std::uint64_t size = level_size(p, n);
    for (std::uint64_t k = 0; k < size; ++k) {
      Scalar child_sum = scalar_from<Scalar>(Rational(0));
      if (n < f.depth())
        for (std::uint64_t j = 0; j < p; ++j) child_sum += f[{n + 1, k + j * size}];
      out[{n, k}] = scale * (f[{n, k}] - inv_p * child_sum);
    }
  }
  return out;
}

/// (D*g)_n(k) = p^n (g_n(k) - (1/p) g_{n-1}(k mod p^{n-1})), g_{-1} = 0.
template <typename Scalar>
TreeFunction<Scalar> apply_Dstar(const TreeFunction<Scalar>& g) {
  const Prime& p = g.prime();
  const Scalar inv_p = scalar_from<Scalar>(Rational(1, p.value()));
  TreeFunction<Scalar> out(p, g.depth());
  for (unsigned n = 0; n <= g.depth(); ++n) {
    const Scalar scale = scalar_from<Scalar>(Rational(ipow(Integer(p.value()), n)));
    const std::uint64_t size = level_size(p, n);
    for (std::uint64_t k = 0; k < size; ++k) {
      Scalar value = g[{n, k}];
      if (n > 0) value -= inv_p * g[parent(p, {n, k})];
      out[{n, k}] = scale * value;
    }
  }
  return out;
}

/// Fourier side: (Dhat fhat)_n(l) = p^n (fhat_n(l) - fhat_{n+1}(p l)).
template <typename Scalar>
TreeFunction<Scalar> apply_Dhat(const TreeFunction<Scalar>& fhat) {
  const Prime& p = fhat.prime();
  TreeFunction<Scalar> out(p, fhat.depth());
  for (unsigned n = 0; n <= fhat.depth(); ++n) {
    const Scalar scale = scalar_from<Scalar>(Rational(ipow(Integer(p.value()), n)));
    const std::uint64_t size = level_size(p, n);
    for (std::uint64_t l = 0; l < size; ++l) {
      Scalar value = fhat[{n, l}];
      if (n < fhat.depth()) value -= fhat[{n + 1, p * l}];
      out[{n, l}] = scale * value;
    }
  }
  return out;
}

/// (Dhat* ghat)_n(l) = p^n ghat_n(l) if p does not divide l, otherwise
/// p^n (ghat_n(l) - (1/p) ghat_{n-1}(l/p)).
template <typename Scalar>
TreeFunction<Scalar> apply_Dhatstar(const TreeFunction<Scalar>& ghat) {
  const Prime& p = ghat.prime();
  const Scalar inv_p = scalar_from<Scalar>(Rational(1, p.value()));
  TreeFunction<Scalar> out(p, ghat.depth());
  for (unsigned n = 0; n <= ghat.depth(); ++n) {
    const Scalar scale = scalar_from<Scalar>(Rational(ipow(Integer(p.value()), n)));
    const std::uint64_t size = level_size(p, n);
    for (std::uint64_t l = 0; l < size; ++l) {
      Scalar value = ghat[{n, l}];
      if (n > 0 && l % p == 0) value -= inv_p * ghat[{n - 1, l / p}];
      out[{n, l}] = scale * value;
    }
  }
  return out;
}

/// <f, g>_H = sum_v f(v) conj(g(v)) w(v).
template <typename Scalar>
Scalar weighted_inner(const TreeFunction<Scalar>& f, const TreeFunction<Scalar>& g) {
  if (f.depth() != g.depth() || f.prime().value() != g.prime().value())
    throw std::invalid_argument("weighted_inner: mismatched tree functions");
  Scalar total = scalar_from<Scalar>(Rational(0));
  for (unsigned n = 0; n <= f.depth(); ++n) {
    Scalar level_total = scalar_from<Scalar>(Rational(0));
    for (Eigen::Index k = 0; k < f.level(n).size(); ++k)
      level_total += f.level(n)[k] * ScalarTraits<Scalar>::conj(g.level(n)[k]);
    total += level_total * scalar_from<Scalar>(weight(f.prime(), {n, 0}));
  }
  return total;
}

/// Unweighted sum_v f(v) conj(g(v)); the Fourier side carries the plain l2 product.
template <typename Scalar>
Scalar plain_inner(const TreeFunction<Scalar>& f, const TreeFunction<Scalar>& g) {
  Scalar total = scalar_from<Scalar>(Rational(0));
  for (unsigned n = 0; n <= f.depth(); ++n)
    for (Eigen::Index k = 0; k < f.level(n).size(); ++k)
      total += f.level(n)[k] * ScalarTraits<Scalar>::conj(g.level(n)[k]);
  return total;
}

// ---------------------------------------------------------------------------
// Half-line operators (exact)

/// (D0 f)_n = p^n (f_n - f_{n+1}).
HalfLineSeq apply_D0(const Prime& p, const HalfLineSeq& f);
/// (D0* g)_n = p^n (g_n - g_{n-1}/p), g_{-1} = 0.
HalfLineSeq apply_D0star(const Prime& p, const HalfLineSeq& g);
/// (A f)_0 = f_0 - f_1; (A f)_n = p^{2n-2}(-p^2 f_{n+1} + (1 + p^2) f_n - f_{n-1}).
HalfLineSeq apply_D0starD0(const Prime& p, const HalfLineSeq& f);

// ---------------------------------------------------------------------------
// Truncated matrices

enum class OperatorId { D0, D0Star, D0StarD0, TreeD, TreeDStar, TreeDStarD };

std::string to_string(OperatorId op);
OperatorId operator_from_string(const std::string& name);

template <typename Scalar>
struct TruncMatrix {
  OperatorId op = OperatorId::D0StarD0;
  std::uint64_t prime = 2;
  unsigned depth = 0;
  std::string boundary = "dirichlet";
  MatrixX<Scalar> entries;

  Eigen::Index dimension() const { return entries.rows(); }
};

/// Largest dimension truncated_matrix will build.
inline constexpr std::uint64_t kDefaultDimensionLimit = 1024;

/// Exact matrix of a half-line operator (size = N, indices 0..N-1) or of the
/// tree operators D, D*, D*D in vertex coordinates (levels 0..N, flat_index
/// order). Throws std::length_error above `dimension_limit`.
TruncMatrix<Rational> truncated_matrix(OperatorId op, const Prime& p, unsigned N,
                                       std::uint64_t dimension_limit = kDefaultDimensionLimit);

/// Tree D*D in the weight-orthonormal basis e_v / sqrt(w(v)):
/// B = W^{1/2} M_D W^{-1/2}, result B^T B (symmetric).
template <unsigned Digits>
TruncMatrix<RealT<Digits>> tree_dstar_d_symmetric(const Prime& p, unsigned depth,
                                                  std::uint64_t dimension_limit = kDefaultDimensionLimit) {
  using RealType = RealT<Digits>;
  const TruncMatrix<Rational> d = truncated_matrix(OperatorId::TreeD, p, depth, dimension_limit);
  const Eigen::Index dim = d.dimension();
  VectorX<RealType> sqrt_w(dim);
  for (unsigned n = 0; n <= depth; ++n) {
    const RealType s = sqrt(to_real<RealType>(weight(p, {n, 0})));
    const auto first = static_cast<Eigen::Index>(flat_index(p, {n, 0}));
    const auto size = static_cast<Eigen::Index>(level_size(p, n));
    sqrt_w.segment(first, size).setConstant(s);
  }
  MatrixX<RealType> b(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      b(i, j) = d.entries(i, j) == 0 ? RealType(0)
                                     : RealType(sqrt_w[i] * to_real<RealType>(d.entries(i, j)) / sqrt_w[j]);
  TruncMatrix<RealType> out;
  out.op = OperatorId::TreeDStarD;
  out.prime = p.value();
  out.depth = depth;
  out.entries = b.transpose() * b;
  return out;
}

/// Plain-text matrix format: a "%%PadicMatrix" header line with operator,
/// prime, depth and boundary; a "rows cols" line; then one line per row of
/// space-separated "num/den" entries.
void write_matrix_market(std::ostream& out, const TruncMatrix<Rational>& m);
TruncMatrix<Rational> read_matrix_market(std::istream& in);

}  // namespace padic

#endif  // PADIC_OPERATORS_HPP

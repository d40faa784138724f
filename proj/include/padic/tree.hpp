#ifndef PADIC_TREE_HPP
#define PADIC_TREE_HPP

// The p-adic tree: vertex (n, k) is the ball k + p^n Z_p, 0 <= k < p^n.
// Nothing is materialized; all structure is residue arithmetic on (n, k).

#include "padic/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace padic {

class Prime {
 public:
  /// Throws std::invalid_argument unless p is prime (trial division).
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  operator std::uint64_t() const { return p_; }
  Rational q() const { return Rational(1, p_ * p_); }  ///< p^-2

 private:
  std::uint64_t p_;
};

struct Vertex {
  unsigned level = 0;
  std::uint64_t index = 0;  ///< representative k, 0 <= k < p^level

  auto operator<=>(const Vertex&) const = default;
};

/// g = r / p^m in the Prufer group together with the path coordinate l.
/// The identity element is (r, m) = (0, 0).
struct PruferPoint {
  std::uint64_t r = 0;
  unsigned m = 0;
  unsigned l = 0;

  auto operator<=>(const PruferPoint&) const = default;
};

std::uint64_t level_size(const Prime& p, unsigned level);
/// Number of vertices on levels 0..depth.
std::uint64_t vertex_count(const Prime& p, unsigned depth);
/// Position of v when levels 0..depth are laid out level by level, k ascending.
std::uint64_t flat_index(const Prime& p, const Vertex& v);

/// Throws std::invalid_argument when k >= p^n.
void require_valid(const Prime& p, const Vertex& v);
/// Throws std::invalid_argument when the PruferPoint invariants fail.
void require_valid(const Prime& p, const PruferPoint& g);

/// (n+1, k + j p^n) for j = 0..p-1.
std::vector<Vertex> children(const Prime& p, const Vertex& v);
/// (n-1, k mod p^{n-1}); throws std::domain_error at the root.
Vertex parent(const Prime& p, const Vertex& v);
/// Haar volume of the ball, p^-n.
Rational weight(const Prime& p, const Vertex& v);

PruferPoint to_prufer(const Prime& p, const Vertex& v);
Vertex from_prufer(const Prime& p, const PruferPoint& g);

/// Multiplicity of the Prufer denominator p^m: 1 for m = 0, p^m - p^{m-1} otherwise.
std::uint64_t prufer_multiplicity(const Prime& p, unsigned m);

/// Truncated tree as DOT text; vertices are labelled "n:k" and carry their weight.
std::string tree_to_dot(const Prime& p, unsigned depth);

/// Per-level DFT, fhat(l) = p^-n sum_k f(k) e^{-2 pi i k l / p^n}. The level is
/// implied by values.size() == p^n.
template <unsigned Digits>
VectorX<ComplexT<Digits>> level_dft(const Prime& p, const VectorX<ComplexT<Digits>>& values);

/// Inverse per-level DFT, f(k) = sum_l fhat(l) e^{2 pi i k l / p^n}.
template <unsigned Digits>
VectorX<ComplexT<Digits>> level_idft(const Prime& p, const VectorX<ComplexT<Digits>>& values);

/// Bound on the floating roundoff of one level_dft/level_idft output,
/// (size + 4) * 10^{1-Digits} * sum |values|. Each output is a sum of `size`
/// products of a twiddle factor (relative error one unit) with an input.
template <unsigned Digits>
RealT<Digits> dft_roundoff_bound(const VectorX<ComplexT<Digits>>& values);

namespace detail {

void require_level_size(const Prime& p, std::uint64_t size);

template <unsigned Digits>
VectorX<ComplexT<Digits>> level_transform(const Prime& p, const VectorX<ComplexT<Digits>>& values,
                                          bool forward) {
  using RealType = RealT<Digits>;
  using ComplexType = ComplexT<Digits>;
  const auto size = static_cast<std::uint64_t>(values.size());
  require_level_size(p, size);
  const RealType two_pi = 2 * boost::math::constants::pi<RealType>();

  // Twiddles depend only on (k l) mod size.
  std::vector<ComplexType> twiddle(size);
  for (std::uint64_t j = 0; j < size; ++j) {
    const RealType angle = two_pi * RealType(j) / RealType(size);
    twiddle[j] = ComplexType(cos(angle), forward ? RealType(-sin(angle)) : RealType(sin(angle)));
  }

  VectorX<ComplexType> out(values.size());
  for (std::uint64_t l = 0; l < size; ++l) {
    ComplexType acc(0);
    for (std::uint64_t k = 0; k < size; ++k) acc += values[k] * twiddle[(k * l) % size];
    out[l] = forward ? ComplexType(acc / RealType(size)) : acc;
  }
  return out;
}

}  // namespace detail

template <unsigned Digits>
VectorX<ComplexT<Digits>> level_dft(const Prime& p, const VectorX<ComplexT<Digits>>& values) {
  return detail::level_transform<Digits>(p, values, true);
}

template <unsigned Digits>
VectorX<ComplexT<Digits>> level_idft(const Prime& p, const VectorX<ComplexT<Digits>>& values) {
  return detail::level_transform<Digits>(p, values, false);
}

template <unsigned Digits>
RealT<Digits> dft_roundoff_bound(const VectorX<ComplexT<Digits>>& values) {
  RealT<Digits> total(0);
  for (Eigen::Index i = 0; i < values.size(); ++i) total += abs(values[i]);
  const RealT<Digits> unit = pow(RealT<Digits>(10), 1 - static_cast<int>(Digits));
  return RealT<Digits>(values.size() + 4) * unit * total;
}

}  // namespace padic

#endif  // PADIC_TREE_HPP

#ifndef PADIC_NUMERIC_HPP
#define PADIC_NUMERIC_HPP

// Scalar types shared by every module.
//
// Rational is GMP-backed and exact. Real/Complex are MPFR-backed floating
// types with a compile-time number of decimal digits; the algorithms that
// need them are templated on the scalar so the precision is chosen at the
// call site. Expression templates are disabled so the types behave as plain
// value types inside Eigen matrices.

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace padic {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <unsigned Digits>
using RealT = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

template <unsigned Digits>
using ComplexT = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<Digits>>, mp::et_off>;

/// Default high-precision real used for Fourier data and zeta values.
using Real = RealT<64>;
using Complex = ComplexT<64>;
/// Precision used by the dense Jacobi oracle.
using Real50 = RealT<50>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// x^e for integer e (negative exponents allowed for nonzero x).
Rational pow(const Rational& x, long e);
Integer ipow(const Integer& base, unsigned long e);
/// p^e as an unsigned 64-bit value; throws std::overflow_error past 2^63.
std::uint64_t pow_u64(std::uint64_t p, unsigned e);

/// Sign of a rational: -1, 0 or +1.
int sign(const Rational& x);

/// floor(log10|x|) for x != 0, exact.
long decimal_exponent(const Rational& x);

/// Decimal string with `sig` significant digits, rounded toward -inf (Down),
/// +inf (Up) or to nearest.
enum class Rounding { Down, Up, Nearest };
std::string to_decimal(const Rational& x, unsigned sig, Rounding mode = Rounding::Nearest);

/// Rational from a decimal literal such as "1e-20", "0.125" or "3/7".
Rational parse_rational(const std::string& text);

/// 10^-d as an exact rational.
Rational ten_to_minus(unsigned d);

template <typename RealType>
RealType to_real(const Rational& x) {
  return RealType(mp::numerator(x)) / RealType(mp::denominator(x));
}

}  // namespace padic

#endif  // PADIC_NUMERIC_HPP

#ifndef SYMPART_RATIONAL_HPP
#define SYMPART_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympart {

/* The two exact coefficient rings used throughout: arbitrary-precision
 * integers for the partition-counting series, arbitrary-precision
 * rationals wherever a division by a small integer occurs. Rationals are
 * kept canonical by the backend: denominator > 0, gcd(|num|, den) = 1,
 * and equality is equality of the canonical form. */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Reduced rational from an arbitrary integer pair. The backend rejects
 * negative denominators outright, so the sign moves to the numerator
 * first. Throws on a zero denominator. */
inline Rational make_rational(Int num, Int den) {
    if (den.is_zero())
        throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/* Unit test and exact unit inverse per coefficient ring. A truncated
 * series is invertible exactly when its constant term passes is_unit. */
template <typename Coeff>
struct RingTraits;

template <>
struct RingTraits<Int> {
    static bool is_unit(const Int& c) { return c == 1 || c == -1; }
    /* only +-1 reach this; both are self-inverse */
    static Int unit_inverse(const Int& c) { return c; }
};

template <>
struct RingTraits<Rational> {
    static bool is_unit(const Rational& c) { return !c.is_zero(); }
    static Rational unit_inverse(const Rational& c) { return 1 / c; }
};

/* T(mu) = mu(mu+1)/2, the smallest number with a partition into mu
 * distinct positive parts. Shows up as a shift exponent all over the
 * q-series and counting code. */
inline long long triangular(long long mu) { return mu * (mu + 1) / 2; }

/* Decimal rendering used by the CLI and diagnostics; rationals print as
 * num/den (or plain num when the denominator is 1). */
inline std::string to_decimal(const Int& v) { return v.str(); }
inline std::string to_decimal(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace sympart

#endif

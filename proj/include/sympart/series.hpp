#ifndef SYMPART_SERIES_HPP
#define SYMPART_SERIES_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sympart/rational.hpp"

namespace sympart {

/* Dense formal power series c_0 + c_1 z + ... + c_K z^K with exact
 * coefficients, truncated inclusively at a fixed order K >= 0.
 *
 * Coeff is one of the two scalar rings (Int, Rational) and is part of
 * the type, so mixing rings inside one expression refuses to compile.
 * Binary operations truncate their result to the smaller operand order.
 * Instances are immutable; every operation is a pure function, so values
 * can be shared and moved across threads freely. */
template <typename Coeff>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<Coeff>(checked_size(order)));
    }

    static TruncatedSeries one(int order) {
        std::vector<Coeff> c(checked_size(order));
        c[0] = 1;
        return TruncatedSeries(std::move(c));
    }

    /* c * z^k at the given order; k beyond the order leaves the zero series */
    static TruncatedSeries monomial(Coeff c, int k, int order) {
        std::vector<Coeff> v(checked_size(order));
        if (k < 0) throw std::invalid_argument("TruncatedSeries::monomial: negative exponent");
        if (k <= order) v[static_cast<std::size_t>(k)] = std::move(c);
        return TruncatedSeries(std::move(v));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Coeff& operator[](int k) const {
        assert(k >= 0 && k <= order());
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Coeff& c) { return c == 0; });
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static std::size_t checked_size(int order) {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: negative truncation order");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Coeff> coeffs_;
};

using IntSeries = TruncatedSeries<Int>;
using RationalSeries = TruncatedSeries<Rational>;

template <typename Coeff>
TruncatedSeries<Coeff> operator+(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
    const int k = std::min(a.order(), b.order());
    std::vector<Coeff> out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
    return TruncatedSeries<Coeff>(std::move(out));
}

template <typename Coeff>
TruncatedSeries<Coeff> operator-(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
    const int k = std::min(a.order(), b.order());
    std::vector<Coeff> out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
    return TruncatedSeries<Coeff>(std::move(out));
}

template <typename Coeff>
TruncatedSeries<Coeff> operator-(const TruncatedSeries<Coeff>& a) {
    std::vector<Coeff> out(static_cast<std::size_t>(a.order()) + 1);
    for (int i = 0; i <= a.order(); ++i) out[static_cast<std::size_t>(i)] = -a[i];
    return TruncatedSeries<Coeff>(std::move(out));
}

/* Cauchy product, truncated at min(Ka, Kb). */
template <typename Coeff>
TruncatedSeries<Coeff> operator*(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
    const int k = std::min(a.order(), b.order());
    std::vector<Coeff> out(static_cast<std::size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) {
        Coeff acc = 0;
        for (int i = 0; i <= m; ++i) acc += a[i] * b[m - i];
        out[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return TruncatedSeries<Coeff>(std::move(out));
}

template <typename Coeff>
TruncatedSeries<Coeff> operator*(const Coeff& c, const TruncatedSeries<Coeff>& a) {
    std::vector<Coeff> out(static_cast<std::size_t>(a.order()) + 1);
    for (int i = 0; i <= a.order(); ++i) out[static_cast<std::size_t>(i)] = c * a[i];
    return TruncatedSeries<Coeff>(std::move(out));
}

/* Copy of a restricted to a smaller (or equal) order. */
template <typename Coeff>
TruncatedSeries<Coeff> truncated(const TruncatedSeries<Coeff>& a, int order) {
    if (order < 0 || order > a.order())
        throw std::invalid_argument("truncated: order out of range");
    std::vector<Coeff> out(a.coefficients().begin(),
                           a.coefficients().begin() + order + 1);
    return TruncatedSeries<Coeff>(std::move(out));
}

/* Zero-pad up to a larger order. Only meaningful when a is exact (a
 * polynomial); a genuine truncation has unknown higher coefficients. */
template <typename Coeff>
TruncatedSeries<Coeff> extended(const TruncatedSeries<Coeff>& a, int order) {
    if (order < a.order())
        throw std::invalid_argument("extended: order smaller than the series order");
    std::vector<Coeff> out(a.coefficients());
    out.resize(static_cast<std::size_t>(order) + 1);
    return TruncatedSeries<Coeff>(std::move(out));
}

/* Multiplication by z^k at unchanged order; the top k coefficients fall
 * off the truncation. */
template <typename Coeff>
TruncatedSeries<Coeff> shifted(const TruncatedSeries<Coeff>& a, int k) {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    std::vector<Coeff> out(static_cast<std::size_t>(a.order()) + 1);
    for (int m = k; m <= a.order(); ++m) out[static_cast<std::size_t>(m)] = a[m - k];
    return TruncatedSeries<Coeff>(std::move(out));
}

/* Reciprocal through order K: b with a*b = 1 exactly at every retained
 * coefficient. Needs a unit constant term (nonzero rational, +-1 integer). */
template <typename Coeff>
TruncatedSeries<Coeff> invert(const TruncatedSeries<Coeff>& a) {
    if (!RingTraits<Coeff>::is_unit(a[0]))
        throw std::domain_error("invert: constant term is not a unit of the coefficient ring");
    const int K = a.order();
    std::vector<Coeff> b(static_cast<std::size_t>(K) + 1);
    b[0] = RingTraits<Coeff>::unit_inverse(a[0]);
    for (int m = 1; m <= K; ++m) {
        Coeff acc = 0;
        for (int k = 1; k <= m; ++k) acc += a[k] * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = -(b[0] * acc);
    }
    return TruncatedSeries<Coeff>(std::move(b));
}

/* log(a) for a = 1 + u via u - u^2/2 + u^3/3 - ...; u has no constant
 * term, so u^k starts at z^k and the sum stops at k = K. */
inline RationalSeries log_series(const RationalSeries& a) {
    if (a[0] != 1)
        throw std::domain_error("log_series: constant term must be 1");
    const int K = a.order();
    const auto u = a - RationalSeries::one(K);
    auto result = RationalSeries::zero(K);
    auto upow = RationalSeries::one(K);
    for (int k = 1; k <= K; ++k) {
        upow = upow * u;
        result = result + make_rational(k % 2 == 1 ? 1 : -1, k) * upow;
    }
    return result;
}

/* exp(a) via sum of a^k / k!; requires a zero constant term so every
 * power contributes finitely below the truncation order. */
inline RationalSeries exp_series(const RationalSeries& a) {
    if (a[0] != 0)
        throw std::domain_error("exp_series: constant term must be 0");
    const int K = a.order();
    auto result = RationalSeries::one(K);
    auto term = RationalSeries::one(K);
    for (int k = 1; k <= K; ++k) {
        term = make_rational(1, k) * (term * a);
        result = result + term;
    }
    return result;
}

/* Substitution z -> c z: coefficient c_k picks up a factor c^k. */
template <typename Coeff>
TruncatedSeries<Coeff> scale_indeterminate(const TruncatedSeries<Coeff>& a, const Coeff& c) {
    std::vector<Coeff> out(static_cast<std::size_t>(a.order()) + 1);
    Coeff power = 1;  // c^0, so scaling by 0 keeps the constant term
    out[0] = a[0];
    for (int k = 1; k <= a.order(); ++k) {
        power *= c;
        out[static_cast<std::size_t>(k)] = a[k] * power;
    }
    return TruncatedSeries<Coeff>(std::move(out));
}

/* The operator z d/dz: coefficient c_k becomes k c_k. */
template <typename Coeff>
TruncatedSeries<Coeff> z_dz(const TruncatedSeries<Coeff>& a) {
    std::vector<Coeff> out(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k) out[static_cast<std::size_t>(k)] = Coeff(k) * a[k];
    return TruncatedSeries<Coeff>(std::move(out));
}

/* 1 + r z + r^2 z^2 + ... + r^K z^K. */
template <typename Coeff>
TruncatedSeries<Coeff> geometric(const Coeff& r, int order) {
    if (order < 0)
        throw std::invalid_argument("geometric: negative truncation order");
    std::vector<Coeff> out(static_cast<std::size_t>(order) + 1);
    Coeff power = 1;
    out[0] = 1;
    for (int k = 1; k <= order; ++k) {
        power *= r;
        out[static_cast<std::size_t>(k)] = power;
    }
    return TruncatedSeries<Coeff>(std::move(out));
}

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<Coeff>& a) {
    os << "[";
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) os << ", ";
        os << to_decimal(a[k]);
    }
    return os << "]";
}

}  // namespace sympart

#endif

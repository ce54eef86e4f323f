#ifndef SYMPART_QSERIES_HPP
#define SYMPART_QSERIES_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "sympart/rational.hpp"
#include "sympart/series.hpp"

namespace sympart {

namespace detail {

/* prod_{i=1..mu} (1 - n^i) truncated at the given order, one in-place
 * shift-subtract pass per factor. Factors with i > order cannot touch
 * any retained coefficient and are skipped. */
inline IntSeries one_minus_powers_product(int mu, int order) {
    if (order < 0)
        throw std::invalid_argument("one_minus_powers_product: negative order");
    std::vector<Int> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int i = 1; i <= mu && i <= order; ++i)
        for (int m = order; m >= i; --m) c[m] -= c[m - i];
    return IntSeries(std::move(c));
}

}  // namespace detail

/* Generating function for partitions into exactly mu mutually unequal
 * positive parts: the coefficient of n^m counts them. Three independent
 * constructions, all returning identical series:
 *   closed            n^{T(mu)} / prod_{i=1..mu} (1 - n^i)
 *   stepwise          the mu-1 series times the progression n^mu + n^{2mu} + ...
 *   coeff_recurrence  pull-based fill c_m = c_{m-mu} + prev_{m-mu}
 */
enum class DistinctGfMethod { closed, stepwise, coeff_recurrence };

inline IntSeries distinct_gf(int mu, int order,
                             DistinctGfMethod method = DistinctGfMethod::closed) {
    if (mu < 1)
        throw std::invalid_argument("distinct_gf: mu must be >= 1");
    if (order < 0)
        throw std::invalid_argument("distinct_gf: negative order");
    switch (method) {
    case DistinctGfMethod::closed: {
        const long long shift = triangular(mu);
        if (shift > order) return IntSeries::zero(order);
        return shifted(invert(detail::one_minus_powers_product(mu, order)),
                       static_cast<int>(shift));
    }
    case DistinctGfMethod::stepwise: {
        std::vector<Int> s(static_cast<std::size_t>(order) + 1);
        for (int m = 1; m <= order; ++m) s[m] = 1;
        for (int step = 2; step <= mu; ++step) {
            std::vector<Int> next(static_cast<std::size_t>(order) + 1);
            for (int m = step; m <= order; ++m) {
                Int acc = 0;
                for (int j = m - step; j >= 0; j -= step) acc += s[j];
                next[m] = std::move(acc);
            }
            s = std::move(next);
        }
        return IntSeries(std::move(s));
    }
    case DistinctGfMethod::coeff_recurrence: {
        std::vector<Int> prev(static_cast<std::size_t>(order) + 1);
        for (int m = 1; m <= order; ++m) prev[m] = 1;
        for (int step = 2; step <= mu; ++step) {
            std::vector<Int> cur(static_cast<std::size_t>(order) + 1);
            for (int m = step; m <= order; ++m)
                cur[m] = cur[m - step] + prev[m - step];
            prev = std::move(cur);
        }
        return IntSeries(std::move(prev));
    }
    }
    throw std::logic_error("distinct_gf: unknown method");
}

/* Generating function for partitions into exactly mu parts, equal parts
 * allowed: n^mu / prod_{i=1..mu} (1 - n^i). */
inline IntSeries anypart_gf(int mu, int order) {
    if (mu < 1)
        throw std::invalid_argument("anypart_gf: mu must be >= 1");
    if (order < 0)
        throw std::invalid_argument("anypart_gf: negative order");
    if (mu > order) return IntSeries::zero(order);
    return shifted(invert(detail::one_minus_powers_product(mu, order)), mu);
}

/* The exact expanded product prod_{i=1..mu} (1 - n^i), a polynomial of
 * degree T(mu). Its coefficients drive the linear recurrence satisfied
 * by distinct_gf(mu, .). */
inline IntSeries denominator_poly(int mu) {
    if (mu < 1)
        throw std::invalid_argument("denominator_poly: mu must be >= 1");
    std::vector<Int> c{Int(1)};
    for (int i = 1; i <= mu; ++i) {
        std::vector<Int> next(c.size() + static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j];
            next[j + static_cast<std::size_t>(i)] -= c[j];
        }
        c = std::move(next);
    }
    return IntSeries(std::move(c));
}

/* A series in two indeterminates truncated independently in each:
 * coeffs[j] is the coefficient of z^j, itself a series in n of order
 * n_order. Products of factors (1 +- n^k z) keep the z^0 coefficient
 * pinned at the constant series 1. */
struct BivariateTruncation {
    int z_degree = 0;
    int n_order = 0;
    std::vector<IntSeries> coeffs;

    bool is_zero() const {
        for (const auto& s : coeffs)
            if (!s.is_zero()) return false;
        return true;
    }
};

enum class FactorSign { plus, minus };

/* prod_{k=1..K} (1 +- n^k z) truncated at z-degree M and n-order K.
 * Factors with k > K are inert: their lowest contribution to any
 * retained z-power already exceeds the n-order. For the plus sign the
 * z^mu coefficient equals distinct_gf(mu, K). */
inline BivariateTruncation bivariate_product(int z_degree, int n_order, FactorSign sign) {
    if (z_degree < 0 || n_order < 0)
        throw std::invalid_argument("bivariate_product: negative truncation");
    BivariateTruncation out;
    out.z_degree = z_degree;
    out.n_order = n_order;
    out.coeffs.reserve(static_cast<std::size_t>(z_degree) + 1);
    out.coeffs.push_back(IntSeries::one(n_order));
    for (int j = 1; j <= z_degree; ++j) out.coeffs.push_back(IntSeries::zero(n_order));
    for (int k = 1; k <= n_order; ++k)
        for (int j = z_degree; j >= 1; --j) {
            const auto t = shifted(out.coeffs[j - 1], k);
            out.coeffs[j] = sign == FactorSign::plus ? out.coeffs[j] + t
                                                     : out.coeffs[j] - t;
        }
    return out;
}

/* Residual of the product-to-sum identity
 *   prod (1 + n^k z) = sum_mu z^mu n^{T(mu)} / prod_{i<=mu} (1 - n^i),
 * truncated at (M, K); identically zero when the identity holds. */
inline BivariateTruncation product_to_sum_residual(int z_degree, int n_order) {
    if (z_degree < 0)
        throw std::invalid_argument("product_to_sum_residual: negative z-degree");
    if (n_order < triangular(z_degree))
        throw std::invalid_argument(
            "product_to_sum_residual: n-order below T(z_degree) leaves the top term unseen");
    auto residual = bivariate_product(z_degree, n_order, FactorSign::plus);
    residual.coeffs[0] = residual.coeffs[0] - IntSeries::one(n_order);
    for (int mu = 1; mu <= z_degree; ++mu)
        residual.coeffs[mu] = residual.coeffs[mu] - distinct_gf(mu, n_order);
    return residual;
}

/* Residual of the exponent-shift relation between the two families:
 * distinct_gf(mu, .) = n^{mu(mu-1)/2} * anypart_gf(mu, .). */
inline IntSeries shift_residual(int mu, int order) {
    if (mu < 1)
        throw std::invalid_argument("shift_residual: mu must be >= 1");
    if (order < triangular(mu))
        throw std::invalid_argument("shift_residual: order below T(mu)");
    const auto shift = static_cast<int>(triangular(mu - 1));
    return distinct_gf(mu, order) - shifted(anypart_gf(mu, order), shift);
}

/* One term of the closed pentagonal form: sign (-1)^x at the exponent
 * pair (3x^2 -+ x)/2. Exponents grow strictly with x and never collide
 * across terms. */
struct PentagonalTerm {
    int x = 0;
    long long exponent_minus = 0;
    long long exponent_plus = 0;
    int sign = 0;
};

/* All terms whose smaller exponent fits under the order. The larger
 * exponent of the last term may still exceed it; callers clip. */
inline std::vector<PentagonalTerm> pentagonal_terms(int order) {
    std::vector<PentagonalTerm> out;
    for (int x = 1;; ++x) {
        const long long lo = (3LL * x * x - x) / 2;
        if (lo > order) break;
        out.push_back({x, lo, (3LL * x * x + x) / 2, x % 2 == 1 ? -1 : +1});
    }
    return out;
}

/* prod_{k=1..K} (1 - n^k) truncated at K, by actual multiplication or by
 * placing the closed-form signs at the generalized pentagonal numbers.
 * Both agree coefficient for coefficient. */
enum class PentagonalMethod { product, closed };

inline IntSeries pentagonal_series(int order, PentagonalMethod method = PentagonalMethod::product) {
    if (order < 0)
        throw std::invalid_argument("pentagonal_series: negative order");
    switch (method) {
    case PentagonalMethod::product:
        return detail::one_minus_powers_product(order, order);
    case PentagonalMethod::closed: {
        std::vector<Int> c(static_cast<std::size_t>(order) + 1);
        c[0] = 1;
        for (const auto& t : pentagonal_terms(order)) {
            c[static_cast<std::size_t>(t.exponent_minus)] += t.sign;
            if (t.exponent_plus <= order)
                c[static_cast<std::size_t>(t.exponent_plus)] += t.sign;
        }
        return IntSeries(std::move(c));
    }
    }
    throw std::logic_error("pentagonal_series: unknown method");
}

/* The series sum p(m) n^m of unrestricted partition counts, p(0) = 1:
 * either the reciprocal of the pentagonal series or the recurrence
 *   p(m) = sum_x (-1)^{x+1} (p(m - (3x^2-x)/2) + p(m - (3x^2+x)/2)).
 */
enum class PartitionSeriesMethod { inverse, recurrence };

inline IntSeries partition_series(int order,
                                  PartitionSeriesMethod method = PartitionSeriesMethod::inverse) {
    if (order < 0)
        throw std::invalid_argument("partition_series: negative order");
    switch (method) {
    case PartitionSeriesMethod::inverse:
        return invert(pentagonal_series(order, PentagonalMethod::product));
    case PartitionSeriesMethod::recurrence: {
        std::vector<Int> p(static_cast<std::size_t>(order) + 1);
        p[0] = 1;
        const auto terms = pentagonal_terms(order);
        for (int m = 1; m <= order; ++m) {
            Int acc = 0;
            for (const auto& t : terms) {
                if (t.exponent_minus > m) break;
                /* (-1)^{x+1} is the negated closed-form sign */
                if (t.sign < 0) {
                    acc += p[static_cast<std::size_t>(m - t.exponent_minus)];
                    if (t.exponent_plus <= m)
                        acc += p[static_cast<std::size_t>(m - t.exponent_plus)];
                } else {
                    acc -= p[static_cast<std::size_t>(m - t.exponent_minus)];
                    if (t.exponent_plus <= m)
                        acc -= p[static_cast<std::size_t>(m - t.exponent_plus)];
                }
            }
            p[static_cast<std::size_t>(m)] = std::move(acc);
        }
        return IntSeries(std::move(p));
    }
    }
    throw std::logic_error("partition_series: unknown method");
}

}  // namespace sympart

#endif

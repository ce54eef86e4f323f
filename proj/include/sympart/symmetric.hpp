#ifndef SYMPART_SYMMETRIC_HPP
#define SYMPART_SYMMETRIC_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sympart/rational.hpp"
#include "sympart/series.hpp"

namespace sympart {

/* The finite multiset of rational quantities that the three symmetric
 * families are formed from. Duplicates are allowed and ordering never
 * affects any derived value. */
struct QuantitySet {
    std::vector<Rational> values;
};

/* The three families aligned by degree:
 *   p_k   power sums            sum of a_i^k            (k = 1..K)
 *   e_k   elementary            sum of k-fold products of distinct values
 *   h_k   complete homogeneous  sum of all degree-k monomials
 * Vectors are indexed by subscript; p[0] is unused and fixed at 0,
 * e[0] = h[0] = 1. */
struct SymTriple {
    int order = 0;
    std::vector<Rational> p, e, h;
};

namespace detail {

/* prod over the set of (1 + sign a_i z) at the given order, one in-place
 * linear-factor pass per value. The empty set gives the constant 1. */
inline RationalSeries linear_product(const std::vector<Rational>& values, int sign, int order) {
    if (order < 0)
        throw std::invalid_argument("linear_product: negative order");
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (const auto& a : values) {
        const Rational f = sign > 0 ? a : Rational(-a);
        for (int m = order; m >= 1; --m) c[m] += f * c[m - 1];
    }
    return RationalSeries(std::move(c));
}

/* series of order K whose k-th coefficient is f(k) */
template <typename F>
RationalSeries build_series(int order, F&& f) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[k] = f(k);
    return RationalSeries(std::move(c));
}

}  // namespace detail

/* p_1..p_K by direct summation; result indexed by subscript with a zero
 * sentinel at [0]. An empty set gives all zeros. */
inline std::vector<Rational> power_sums(const QuantitySet& qs, int order) {
    if (order < 1)
        throw std::invalid_argument("power_sums: order must be >= 1");
    std::vector<Rational> p(static_cast<std::size_t>(order) + 1);
    for (const auto& a : qs.values) {
        Rational pw = 1;
        for (int k = 1; k <= order; ++k) {
            pw *= a;
            p[k] += pw;
        }
    }
    return p;
}

enum class ElementaryMethod { direct, newton };

/* e_0..e_K, either by expanding prod (1 + a_i z) or by the Newton
 * recurrence k e_k = sum_{j=1..k} (-1)^{j-1} e_{k-j} p_j. Both routes
 * agree exactly; e_k vanishes above the set size. */
inline std::vector<Rational> elementary(const QuantitySet& qs, int order,
                                        ElementaryMethod method = ElementaryMethod::direct) {
    if (order < 0)
        throw std::invalid_argument("elementary: negative order");
    switch (method) {
    case ElementaryMethod::direct:
        return detail::linear_product(qs.values, +1, order).coefficients();
    case ElementaryMethod::newton: {
        std::vector<Rational> e(static_cast<std::size_t>(order) + 1);
        e[0] = 1;
        if (order == 0) return e;
        const auto p = power_sums(qs, order);
        for (int k = 1; k <= order; ++k) {
            Rational acc = 0;
            for (int j = 1; j <= k; ++j) {
                if (j % 2 == 1)
                    acc += e[k - j] * p[j];
                else
                    acc -= e[k - j] * p[j];
            }
            e[k] = acc * make_rational(1, k);
        }
        return e;
    }
    }
    throw std::logic_error("elementary: unknown method");
}

enum class HomogeneousMethod { direct, from_p, from_e };

/* h_0..h_K by one of three routes: inverting prod (1 - a_i z), the
 * power-sum recurrence k h_k = sum h_{k-j} p_j, or the elementary
 * alternation h_k = sum_{j=1..k} (-1)^{j-1} e_j h_{k-j}. */
inline std::vector<Rational> homogeneous(const QuantitySet& qs, int order,
                                         HomogeneousMethod method = HomogeneousMethod::direct) {
    if (order < 0)
        throw std::invalid_argument("homogeneous: negative order");
    switch (method) {
    case HomogeneousMethod::direct:
        return invert(detail::linear_product(qs.values, -1, order)).coefficients();
    case HomogeneousMethod::from_p: {
        std::vector<Rational> h(static_cast<std::size_t>(order) + 1);
        h[0] = 1;
        if (order == 0) return h;
        const auto p = power_sums(qs, order);
        for (int k = 1; k <= order; ++k) {
            Rational acc = 0;
            for (int j = 1; j <= k; ++j) acc += h[k - j] * p[j];
            h[k] = acc * make_rational(1, k);
        }
        return h;
    }
    case HomogeneousMethod::from_e: {
        const auto e = elementary(qs, order, ElementaryMethod::direct);
        std::vector<Rational> h(static_cast<std::size_t>(order) + 1);
        h[0] = 1;
        for (int k = 1; k <= order; ++k) {
            Rational acc = 0;
            for (int j = 1; j <= k; ++j) {
                if (j % 2 == 1)
                    acc += e[j] * h[k - j];
                else
                    acc -= e[j] * h[k - j];
            }
            h[k] = acc;
        }
        return h;
    }
    }
    throw std::logic_error("homogeneous: unknown method");
}

inline SymTriple sym_triple(const QuantitySet& qs, int order) {
    SymTriple t;
    t.order = order;
    t.p = order >= 1 ? power_sums(qs, order)
                     : std::vector<Rational>{Rational(0)};
    t.e = elementary(qs, order, ElementaryMethod::direct);
    t.h = homogeneous(qs, order, HomogeneousMethod::direct);
    return t;
}

/* The six generating functions attached to a quantity set:
 *   P = sum p_k z^k          Q = sum (-1)^{k-1} p_k z^k
 *   R = prod (1 + a_i z)     S = prod (1 - a_i z) = R(-z)
 *   T = 1/R                  V = 1/S
 * P and Q have zero constant term and need order >= 1. */
enum class GenFn { P, Q, R, S, T, V };

inline RationalSeries gen_fn(const QuantitySet& qs, int order, GenFn which) {
    switch (which) {
    case GenFn::P:
    case GenFn::Q: {
        if (order < 1)
            throw std::invalid_argument("gen_fn: P and Q need order >= 1");
        const auto p = power_sums(qs, order);
        return detail::build_series(order, [&](int k) {
            if (k == 0) return Rational(0);
            return (which == GenFn::P || k % 2 == 1) ? p[k] : Rational(-p[k]);
        });
    }
    case GenFn::R: return detail::linear_product(qs.values, +1, order);
    case GenFn::S: return detail::linear_product(qs.values, -1, order);
    case GenFn::T: return invert(detail::linear_product(qs.values, +1, order));
    case GenFn::V: return invert(detail::linear_product(qs.values, -1, order));
    }
    throw std::logic_error("gen_fn: unknown selector");
}

/* One named residual series; the identity holds iff the residual is the
 * zero series through the working order. */
struct IdentityResidual {
    std::string name;
    RationalSeries residual;

    bool holds() const { return residual.is_zero(); }
};

/* Evaluates the whole identity web between the p/e/h families and the
 * generating functions as exact residuals at the given order (>= 2).
 * Divisions by series with zero constant term are cleared by cross-
 * multiplication so everything stays inside the truncated-series ring.
 * A nonzero residual is reported, never thrown. */
inline std::vector<IdentityResidual> verify_identities(const QuantitySet& qs, int order) {
    if (order < 2)
        throw std::invalid_argument("verify_identities: order must be >= 2");

    const auto p = power_sums(qs, order);
    const auto e = elementary(qs, order, ElementaryMethod::direct);
    const auto h = homogeneous(qs, order, HomogeneousMethod::direct);

    const auto R = gen_fn(qs, order, GenFn::R);
    const auto S = gen_fn(qs, order, GenFn::S);
    const auto T = gen_fn(qs, order, GenFn::T);
    const auto V = gen_fn(qs, order, GenFn::V);
    const auto P = gen_fn(qs, order, GenFn::P);
    const auto Q = gen_fn(qs, order, GenFn::Q);

    const auto one = RationalSeries::one(order);
    const Rational half = make_rational(1, 2);

    auto from = [&](const std::vector<Rational>& fam, auto&& f) {
        return detail::build_series(order, [&](int k) { return f(fam[k], k); });
    };
    auto keep = [](const Rational& c, bool take) { return take ? c : Rational(0); };

    /* even/odd slices of the e- and h-series */
    const auto even_e = from(e, [&](const Rational& c, int k) { return keep(c, k % 2 == 0); });
    const auto odd_e  = from(e, [&](const Rational& c, int k) { return keep(c, k % 2 == 1); });
    const auto even_h = from(h, [&](const Rational& c, int k) { return keep(c, k % 2 == 0); });
    const auto odd_h  = from(h, [&](const Rational& c, int k) { return keep(c, k % 2 == 1); });

    /* signed/weighted companions used by the five expressions for R */
    const auto alt_h = from(h, [](const Rational& c, int k) {
        return k % 2 == 0 ? c : Rational(-c);
    });
    const auto alt_h_tail = from(h, [](const Rational& c, int k) {
        if (k == 0) return Rational(0);
        return k % 2 == 1 ? c : Rational(-c);
    });
    const auto weighted_e = from(e, [](const Rational& c, int k) { return Rational(k) * c; });
    const auto alt_weighted_h = from(h, [](const Rational& c, int k) {
        const Rational w = Rational(k) * c;
        return k % 2 == 1 ? w : Rational(-w);
    });
    const auto log_alt = detail::build_series(order, [&](int k) {
        if (k == 0) return Rational(0);
        return make_rational(k % 2 == 1 ? 1 : -1, k) * p[k];
    });
    const auto log_pos = detail::build_series(order, [&](int k) {
        if (k == 0) return Rational(0);
        return make_rational(1, k) * p[k];
    });

    std::vector<IdentityResidual> out;
    out.push_back({"log-derivative of R: z R' = Q R", z_dz(R) - Q * R});
    out.push_back({"log-derivative of S: z S' = -P S", z_dz(S) + P * S});
    out.push_back({"log R equals the alternating power-sum series", log_series(R) - log_alt});
    out.push_back({"log V equals the power-sum series", log_series(V) - log_pos});
    out.push_back({"reciprocal pair: R T = 1", R * T - one});
    out.push_back({"reciprocal pair: S V = 1", S * V - one});
    out.push_back({"even split: (R+S)/2 = even e-part", half * (R + S) - even_e});
    out.push_back({"odd split: (R-S)/2 = odd e-part", half * (R - S) - odd_e});
    out.push_back({"even split: (R+S)/2 = R S * even h-part", half * (R + S) - even_h * (R * S)});
    out.push_back({"odd split: (R-S)/2 = R S * odd h-part", half * (R - S) - odd_h * (R * S)});
    out.push_back({"even/odd proportion across the e and h families",
                   even_e * odd_h - odd_e * even_h});
    /* the five expressions for R, cleared of denominators and anchored
       to the e-series form */
    const auto& Re = R;  // R is the e-series by construction
    out.push_back({"R versus reciprocal of the alternating h-series", Re * alt_h - one});
    out.push_back({"R versus ratio of e-tail to alternating h-tail",
                   Re * alt_h_tail - (Re - one)});
    out.push_back({"R versus ratio of weighted e-series to Q", Re * Q - weighted_e});
    out.push_back({"R versus ratio of Q to weighted alternating h-series",
                   Re * alt_weighted_h - Q});
    return out;
}

inline bool all_hold(const std::vector<IdentityResidual>& rs) {
    for (const auto& r : rs)
        if (!r.holds()) return false;
    return true;
}

}  // namespace sympart

#endif

#ifndef SYMPART_TESTS_HELPERS_HPP
#define SYMPART_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "sympart/rational.hpp"
#include "sympart/series.hpp"
#include "sympart/symmetric.hpp"

/* Shared generators and brute-force oracles. The oracles enumerate
 * monomials directly and never touch the series machinery, so they stay
 * independent of the code paths they certify. */
namespace testutil {

using namespace sympart;

/* numerator in [-9,9] \ {0}, denominator in [1,9] */
inline Rational small_rational(std::mt19937& gen) {
    const long long num = 1 + static_cast<long long>(gen() % 9);
    const long long den = 1 + static_cast<long long>(gen() % 9);
    return make_rational((gen() & 1u) ? -num : num, den);
}

inline QuantitySet random_quantity_set(std::mt19937& gen, int max_size = 6) {
    QuantitySet qs;
    const int size = static_cast<int>(gen() % static_cast<unsigned>(max_size + 1));
    for (int i = 0; i < size; ++i) qs.values.push_back(small_rational(gen));
    return qs;
}

inline RationalSeries random_rational_series(std::mt19937& gen, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = small_rational(gen);
    return RationalSeries(std::move(c));
}

/* integer series; unit_constant pins c_0 to +-1 so invert applies */
inline IntSeries random_int_series(std::mt19937& gen, int order, bool unit_constant) {
    std::vector<Int> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = static_cast<long long>(gen() % 19) - 9;
    if (unit_constant) c[0] = (gen() & 1u) ? 1 : -1;
    return IntSeries(std::move(c));
}

inline Rational oracle_power_sum(const std::vector<Rational>& vals, int k) {
    Rational acc = 0;
    for (const auto& a : vals) {
        Rational pw = 1;
        for (int i = 0; i < k; ++i) pw *= a;
        acc += pw;
    }
    return acc;
}

namespace detail {

inline void subsets_rec(const std::vector<Rational>& vals, std::size_t start, int left,
                        const Rational& prod, Rational& acc) {
    if (left == 0) {
        acc += prod;
        return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= vals.size(); ++i)
        subsets_rec(vals, i + 1, left - 1, prod * vals[i], acc);
}

inline void multisets_rec(const std::vector<Rational>& vals, std::size_t start, int left,
                          const Rational& prod, Rational& acc) {
    if (left == 0) {
        acc += prod;
        return;
    }
    for (std::size_t i = start; i < vals.size(); ++i)
        multisets_rec(vals, i, left - 1, prod * vals[i], acc);
}

}  // namespace detail

/* sum of products over k-element subsets (k = 0 gives 1) */
inline Rational oracle_elementary(const std::vector<Rational>& vals, int k) {
    Rational acc = 0;
    detail::subsets_rec(vals, 0, k, Rational(1), acc);
    return acc;
}

/* sum of all degree-k monomials, repetition allowed (k = 0 gives 1) */
inline Rational oracle_homogeneous(const std::vector<Rational>& vals, int k) {
    Rational acc = 0;
    detail::multisets_rec(vals, 0, k, Rational(1), acc);
    return acc;
}

}  // namespace testutil

#endif

#ifndef SYMPART_PARTITIONS_HPP
#define SYMPART_PARTITIONS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sympart/rational.hpp"

namespace sympart {

/* Counts are arbitrary-precision and never negative. Tables are built
 * per call, so every counting function is observably pure and safe to
 * call from concurrent threads. */
using Count = Int;

namespace detail {

inline void check_nonnegative(long long m, long long mu, const char* who) {
    if (m < 0 || mu < 0)
        throw std::invalid_argument(std::string(who) + ": negative argument");
}

}  // namespace detail

/* Table of counts of partitions into exactly mu mutually unequal parts,
 * indexed [m][mu] for m = 0..max_m, mu = 0..max_mu. Row m = 0 carries
 * the empty-partition convention: one partition of 0 into 0 parts.
 * Recurrence: a partition of m into mu distinct parts, lowered by one
 * unit per part, is a partition of m - mu into mu or mu - 1 distinct
 * parts (the smallest part may reach zero). */
inline std::vector<std::vector<Count>> distinct_count_table(int max_m, int max_mu) {
    detail::check_nonnegative(max_m, max_mu, "distinct_count_table");
    std::vector<std::vector<Count>> t(static_cast<std::size_t>(max_m) + 1,
                                      std::vector<Count>(static_cast<std::size_t>(max_mu) + 1));
    t[0][0] = 1;
    for (int m = 1; m <= max_m; ++m)
        for (int mu = 1; mu <= max_mu && mu <= m; ++mu)
            t[m][mu] = t[m - mu][mu] + t[m - mu][mu - 1];
    return t;
}

/* Same layout for partitions into exactly mu parts, equal parts allowed.
 * Recurrence: either every part exceeds 1 (lower all by one: m - mu into
 * mu parts) or some part equals 1 (remove it: m - 1 into mu - 1 parts). */
inline std::vector<std::vector<Count>> any_count_table(int max_m, int max_mu) {
    detail::check_nonnegative(max_m, max_mu, "any_count_table");
    std::vector<std::vector<Count>> t(static_cast<std::size_t>(max_m) + 1,
                                      std::vector<Count>(static_cast<std::size_t>(max_mu) + 1));
    t[0][0] = 1;
    for (int m = 1; m <= max_m; ++m)
        for (int mu = 1; mu <= max_mu && mu <= m; ++mu) {
            t[m][mu] = t[m - 1][mu - 1];
            if (m >= mu) t[m][mu] += t[m - mu][mu];
        }
    return t;
}

/* Partitions of m into exactly mu mutually unequal positive parts.
 * Zero whenever m < T(mu), one at m = T(mu) exactly. The m < mu test
 * comes first so absurdly large mu never reaches the T(mu) product. */
inline Count count_distinct(long long m, long long mu) {
    detail::check_nonnegative(m, mu, "count_distinct");
    if (mu == 0) return m == 0 ? 1 : 0;
    if (m < mu || m < triangular(mu)) return 0;
    return distinct_count_table(static_cast<int>(m), static_cast<int>(mu))[m][mu];
}

/* Partitions of m into exactly mu parts, equal or unequal. */
inline Count count_any(long long m, long long mu) {
    detail::check_nonnegative(m, mu, "count_any");
    if (mu == 0) return m == 0 ? 1 : 0;
    if (m < mu) return 0;
    return any_count_table(static_cast<int>(m), static_cast<int>(mu))[m][mu];
}

/* Number of ways to produce t by addition from the numbers 1..mu, any
 * multiplicity, any number of summands: the classic coin-counting fill.
 * Ties back to the distinct counts via
 *   denumerant(t, mu) = count_distinct(t + T(mu), mu). */
inline Count denumerant(long long t, long long mu) {
    if (t < 0)
        throw std::invalid_argument("denumerant: negative target");
    if (mu < 1)
        throw std::invalid_argument("denumerant: mu must be >= 1");
    std::vector<Count> ways(static_cast<std::size_t>(t) + 1);
    ways[0] = 1;
    for (long long c = 1; c <= mu && c <= t; ++c)
        for (long long v = c; v <= t; ++v) ways[v] += ways[v - c];
    return ways[static_cast<std::size_t>(t)];
}

/* p(m): partitions of m with no constraint on the number of parts or
 * their equality; the row sum of the any-part table. */
inline Count partition_number(long long m) {
    if (m < 0)
        throw std::invalid_argument("partition_number: negative argument");
    if (m == 0) return 1;
    const auto t = any_count_table(static_cast<int>(m), static_cast<int>(m));
    Count total = 0;
    for (long long mu = 1; mu <= m; ++mu) total += t[m][mu];
    return total;
}

/* A single counting query: partitions of m into exactly mu parts,
 * mutually unequal when distinct is set. */
struct PartitionQuery {
    long long m = 0;
    long long mu = 0;
    bool distinct = false;
};

inline Count count_partitions(const PartitionQuery& q) {
    return q.distinct ? count_distinct(q.m, q.mu) : count_any(q.m, q.mu);
}

/* A single partition, parts nonincreasing (strictly decreasing when the
 * parts are required unequal). */
struct Partition {
    std::vector<int> parts;

    friend bool operator==(const Partition&, const Partition&) = default;
};

namespace detail {

inline void enumerate_rec(int sum, int parts, int cap, bool distinct,
                          std::vector<int>& acc, std::vector<Partition>& out) {
    if (parts == 0) {
        if (sum == 0) out.push_back({acc});
        return;
    }
    const long long tail_min = distinct ? triangular(parts - 1) : parts - 1;
    int hi = cap;
    if (static_cast<long long>(sum) - tail_min < hi) hi = static_cast<int>(sum - tail_min);
    for (int v = hi; v >= 1; --v) {
        const long long rest = sum - v;
        const long long tail_max =
            distinct ? static_cast<long long>(parts - 1) * (2LL * v - parts) / 2
                     : static_cast<long long>(v) * (parts - 1);
        if (rest < tail_min || rest > tail_max) continue;
        acc.push_back(v);
        enumerate_rec(static_cast<int>(rest), parts - 1, distinct ? v - 1 : v, distinct, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

/* Exhaustive list of the partitions of m into exactly mu parts, in
 * decreasing lexicographic order of the nonincreasing part sequences.
 * This is the certification oracle for the counting recurrences, so m is
 * capped at 64 to keep any call within seconds. mu > m simply yields the
 * empty list. */
inline std::vector<Partition> enumerate_partitions(int m, int mu, bool distinct) {
    detail::check_nonnegative(m, mu, "enumerate_partitions");
    if (m > 64)
        throw std::invalid_argument("enumerate_partitions: m exceeds the oracle guard (64)");
    std::vector<Partition> out;
    std::vector<int> acc;
    acc.reserve(static_cast<std::size_t>(mu));
    detail::enumerate_rec(m, mu, m, distinct, acc, out);
    return out;
}

inline std::vector<Partition> enumerate_partitions(const PartitionQuery& q) {
    return enumerate_partitions(static_cast<int>(q.m), static_cast<int>(q.mu), q.distinct);
}

}  // namespace sympart

#endif

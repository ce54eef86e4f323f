#include <algorithm>
#include <stdexcept>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "sympart/partitions.hpp"
#include "sympart/qseries.hpp"

using namespace sympart;

namespace {

Partition parts(std::vector<int> v) { return Partition{std::move(v)}; }

/* strict decreasing-lexicographic order on the emitted part lists */
bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    return a > b;
}

}  // namespace

TEST_CASE("counting partitions into distinct parts") {
    CHECK(count_distinct(50, 7) == 522);
    CHECK(count_distinct(28, 7) == 1);   // 28 is the 7th triangular number
    CHECK(count_distinct(20, 6) == 0);   // below the 6th triangular number
    CHECK(count_distinct(34, 7) == 11);
    CHECK(count_distinct(16, 4) == 9);
    CHECK(count_distinct(12, 3) == 7);
    CHECK(count_distinct(0, 0) == 1);
    CHECK(count_distinct(5, 0) == 0);
    CHECK(count_distinct(0, 3) == 0);
}

TEST_CASE("counting partitions with equal parts allowed") {
    CHECK(count_any(50, 7) == 8946);
    CHECK(count_any(9, 3) == 7);
    CHECK(count_any(8, 2) == 4);
    for (int m = 1; m <= 10; ++m) CHECK(count_any(m, 1) == 1);
    CHECK(count_any(0, 0) == 1);
    CHECK(count_any(3, 5) == 0);
}

TEST_CASE("denumerants") {
    CHECK(denumerant(22, 7) == 522);
    CHECK(denumerant(43, 7) == 8946);
    for (int mu = 1; mu <= 9; ++mu) CHECK(denumerant(0, mu) == 1);
    for (int t = 0; t <= 9; ++t) CHECK(denumerant(t, 1) == 1);
    CHECK_THROWS_AS(denumerant(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(denumerant(-1, 3), std::invalid_argument);
}

TEST_CASE("unrestricted partition numbers") {
    CHECK(partition_number(0) == 1);
    CHECK(partition_number(5) == 7);
    CHECK(partition_number(8) == 22);

    const auto series = partition_series(60);
    for (int m = 0; m <= 60; ++m) CHECK(partition_number(m) == series[m]);
}

TEST_CASE("enumeration oracle lists") {
    SECTION("9 into 3 parts, equal allowed") {
        const std::vector<Partition> expect{
            parts({7, 1, 1}), parts({6, 2, 1}), parts({5, 3, 1}), parts({5, 2, 2}),
            parts({4, 4, 1}), parts({4, 3, 2}), parts({3, 3, 3})};
        CHECK(enumerate_partitions(9, 3, false) == expect);
    }

    SECTION("16 into 4 distinct parts") {
        const std::vector<Partition> expect{
            parts({10, 3, 2, 1}), parts({9, 4, 2, 1}), parts({8, 5, 2, 1}),
            parts({8, 4, 3, 1}), parts({7, 6, 2, 1}), parts({7, 5, 3, 1}),
            parts({7, 4, 3, 2}), parts({6, 5, 4, 1}), parts({6, 5, 3, 2})};
        CHECK(enumerate_partitions(16, 4, true) == expect);
    }

    SECTION("34 into 7 distinct parts") {
        const auto got = enumerate_partitions(34, 7, true);
        REQUIRE(got.size() == 11);
        /* the eleven distributions, ascending presentation */
        const std::vector<std::vector<int>> expect{
            {1, 2, 3, 4, 5, 6, 13}, {1, 2, 3, 4, 5, 7, 12}, {1, 2, 3, 4, 5, 8, 11},
            {1, 2, 3, 4, 5, 9, 10}, {1, 2, 3, 4, 6, 7, 11}, {1, 2, 3, 4, 6, 8, 10},
            {1, 2, 3, 4, 7, 8, 9},  {1, 2, 3, 5, 6, 7, 10}, {1, 2, 3, 5, 6, 8, 9},
            {1, 2, 4, 5, 6, 7, 9},  {1, 3, 4, 5, 6, 7, 8}};
        for (const auto& asc : expect) {
            std::vector<int> desc(asc.rbegin(), asc.rend());
            CHECK(std::find(got.begin(), got.end(), parts(std::move(desc))) != got.end());
        }
    }

    SECTION("degenerate queries") {
        CHECK(enumerate_partitions(3, 5, false).empty());
        CHECK(enumerate_partitions(3, 5, true).empty());
        CHECK(enumerate_partitions(0, 0, false) == std::vector<Partition>{parts({})});
        CHECK_THROWS_AS(enumerate_partitions(65, 3, false), std::invalid_argument);
    }

    SECTION("output order and shape") {
        for (bool distinct : {false, true}) {
            const auto got = enumerate_partitions(18, 4, distinct);
            for (std::size_t i = 0; i + 1 < got.size(); ++i)
                CHECK(lex_greater(got[i].parts, got[i + 1].parts));
            for (const auto& p : got) {
                REQUIRE(p.parts.size() == 4);
                int sum = 0;
                for (std::size_t i = 0; i < p.parts.size(); ++i) {
                    CHECK(p.parts[i] >= 1);
                    if (i > 0) {
                        if (distinct)
                            CHECK(p.parts[i] < p.parts[i - 1]);
                        else
                            CHECK(p.parts[i] <= p.parts[i - 1]);
                    }
                    sum += p.parts[i];
                }
                CHECK(sum == 18);
            }
        }
    }
}

TEST_CASE("oracle equivalence with the recurrences") {
    for (int m = 0; m <= 18; ++m)
        for (int mu = 0; mu <= m; ++mu) {
            INFO("m=" << m << " mu=" << mu);
            CHECK(Count(enumerate_partitions(m, mu, true).size()) == count_distinct(m, mu));
            CHECK(Count(enumerate_partitions(m, mu, false).size()) == count_any(m, mu));
        }
}

TEST_CASE("query form dispatches on the distinct flag") {
    const PartitionQuery naive{50, 7, false};
    const PartitionQuery strict{50, 7, true};
    CHECK(count_partitions(naive) == 8946);
    CHECK(count_partitions(strict) == 522);
    CHECK(enumerate_partitions({16, 4, true}).size() == 9);
    CHECK(enumerate_partitions({9, 3, false}) == enumerate_partitions(9, 3, false));
}

TEST_CASE("conversion between the two problems") {
    const int max_m = 200, max_mu = 20;
    const auto any = any_count_table(max_m, max_mu);
    const auto distinct =
        distinct_count_table(max_m + static_cast<int>(triangular(max_mu)), max_mu);
    for (int m = 0; m <= max_m; ++m)
        for (int mu = 1; mu <= max_mu; ++mu) {
            INFO("m=" << m << " mu=" << mu);
            CHECK(any[m][mu] == distinct[m + static_cast<int>(triangular(mu - 1))][mu]);
        }
}

TEST_CASE("denumerant reduction to distinct counts") {
    const int max_t = 200, max_mu = 20;
    const auto distinct =
        distinct_count_table(max_t + static_cast<int>(triangular(max_mu)), max_mu);
    for (int mu = 1; mu <= max_mu; ++mu) {
        /* one coin-counting fill per part bound */
        std::vector<Count> ways(max_t + 1);
        ways[0] = 1;
        for (int c = 1; c <= mu; ++c)
            for (int v = c; v <= max_t; ++v) ways[v] += ways[v - c];
        for (int t = 0; t <= max_t; ++t) {
            INFO("t=" << t << " mu=" << mu);
            CHECK(ways[t] == distinct[t + static_cast<int>(triangular(mu))][mu]);
            if (t <= 60 && mu <= 9) CHECK(ways[t] == denumerant(t, mu));
        }
    }
}

TEST_CASE("counts match series coefficients") {
    const int K = 60;
    for (int mu = 1; mu <= 7; ++mu) {
        const auto dgf = distinct_gf(mu, K);
        const auto agf = anypart_gf(mu, K);
        for (int m = 0; m <= K; ++m) {
            CHECK(dgf[m] == count_distinct(m, mu));
            CHECK(agf[m] == count_any(m, mu));
        }
    }
}

TEST_CASE("support boundaries") {
    for (int mu = 1; mu <= 10; ++mu)
        for (int m = 0; m <= 60; ++m) {
            CHECK((count_distinct(m, mu) == 0) == (m < triangular(mu)));
            CHECK((count_any(m, mu) == 0) == (m < mu));
        }
}

TEST_CASE("row sums reproduce the partition function") {
    const int K = 60;
    const auto series = partition_series(K);
    const auto table = any_count_table(K, K);
    for (int m = 1; m <= K; ++m) {
        Count total = 0;
        for (int mu = 1; mu <= m; ++mu) total += table[m][mu];
        CHECK(total == series[m]);
    }
}

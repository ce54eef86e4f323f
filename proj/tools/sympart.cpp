/* Command-line front end: exact partition counting with cross-checked
 * routes, q-series coefficient emission, the identity verification
 * suite, and count tables. Data goes to stdout, diagnostics to stderr.
 * Exit codes: 0 success, 1 cross-check or identity failure, 2 usage. */

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sympart/sympart.hpp"

namespace {

using nlohmann::json;
using namespace sympart;

constexpr long long kMaxQueryM = 10000;   // same bound as the table command
constexpr long long kMaxOrder = 10000;

struct CommonOpts {
    std::string format = "text";
};

/* ---------------------------------------------------------------- count */

struct CountOpts : CommonOpts {
    long long m = 0;
    long long mu = 0;
    bool distinct = false;
    std::string method = "all";
};

int run_count(const CountOpts& o) {
    if (o.m > kMaxQueryM) {
        std::cerr << "count: --m is capped at " << kMaxQueryM << "\n";
        return 2;
    }
    const bool need_positive_mu = o.method != "all" && o.method != "recurrence";
    if (need_positive_mu && o.mu == 0) {
        std::cerr << "count: method '" << o.method << "' needs --mu >= 1\n";
        return 2;
    }

    std::vector<std::pair<std::string, Count>> values;
    auto wants = [&](const char* name) { return o.method == "all" || o.method == name; };
    /* mu above m forces every count to zero; settling it up front keeps
       triangular(mu) and the int casts below within range */
    const bool empty_support = o.mu > o.m;

    if (wants("recurrence"))
        values.emplace_back("recurrence", count_partitions({o.m, o.mu, o.distinct}));
    if (o.mu >= 1) {
        if (wants("series")) {
            const int order = static_cast<int>(o.m);
            values.emplace_back("series",
                                empty_support
                                    ? Count(0)
                                    : (o.distinct ? distinct_gf(static_cast<int>(o.mu), order)
                                                  : anypart_gf(static_cast<int>(o.mu), order))[order]);
        }
        if (wants("denumerant")) {
            const long long t =
                empty_support ? -1 : (o.distinct ? o.m - triangular(o.mu) : o.m - o.mu);
            values.emplace_back("denumerant", t < 0 ? Count(0) : denumerant(t, o.mu));
        }
        if (wants("conversion")) {
            if (empty_support) {
                values.emplace_back("conversion", Count(0));
            } else if (o.distinct) {
                const long long s = o.m - triangular(o.mu - 1);
                values.emplace_back("conversion", s < 0 ? Count(0) : count_any(s, o.mu));
            } else {
                values.emplace_back("conversion",
                                    count_distinct(o.m + triangular(o.mu - 1), o.mu));
            }
        }
    }

    bool agree = true;
    for (const auto& [name, v] : values) agree = agree && v == values.front().second;
    const std::string status = values.size() > 1 ? (agree ? "ok" : "mismatch") : "single-method";

    if (o.format == "json") {
        json rec;
        rec["operation"] = "count";
        rec["parameters"] = {{"m", std::to_string(o.m)},
                             {"mu", std::to_string(o.mu)},
                             {"distinct", o.distinct},
                             {"method", o.method}};
        json methods = json::object();
        for (const auto& [name, v] : values) methods[name] = to_decimal(v);
        rec["methods"] = methods;
        rec["result"] = to_decimal(values.front().second);
        rec["cross_check"] = status;
        std::cout << rec.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "operation,m,mu,distinct,method,result,cross_check\n";
        std::cout << "count," << o.m << "," << o.mu << "," << (o.distinct ? 1 : 0) << ","
                  << o.method << "," << to_decimal(values.front().second) << "," << status << "\n";
    } else {
        std::cout << to_decimal(values.front().second) << "\n";
        std::cout << "cross-check " << status << ":";
        for (const auto& [name, v] : values) std::cout << " " << name << "=" << to_decimal(v);
        std::cout << "\n";
    }

    if (!agree) {
        std::cerr << "count: methods disagree; this signals an implementation bug\n";
        return 1;
    }
    return 0;
}

/* --------------------------------------------------------------- series */

struct SeriesOpts : CommonOpts {
    std::string kind;
    long long mu = -1;  // -1 = not given
    long long order = 0;
};

int run_series(const SeriesOpts& o) {
    if (o.order > kMaxOrder) {
        std::cerr << "series: --order is capped at " << kMaxOrder << "\n";
        return 2;
    }
    const bool needs_mu = o.kind == "distinct" || o.kind == "any";
    if (needs_mu && o.mu < 1) {
        std::cerr << "series: kind '" << o.kind << "' needs --mu >= 1\n";
        return 2;
    }
    if (!needs_mu && o.mu >= 0) {
        std::cerr << "series: --mu only applies to kinds 'distinct' and 'any'\n";
        return 2;
    }

    const int order = static_cast<int>(o.order);
    IntSeries s = [&] {
        /* mu beyond the order cannot reach any retained coefficient */
        if (needs_mu && o.mu > o.order) return IntSeries::zero(order);
        if (o.kind == "distinct") return distinct_gf(static_cast<int>(o.mu), order);
        if (o.kind == "any") return anypart_gf(static_cast<int>(o.mu), order);
        if (o.kind == "pentagonal") return pentagonal_series(order);
        return partition_series(order);
    }();

    if (o.format == "json") {
        json rec;
        rec["operation"] = "series";
        json params = {{"kind", o.kind}, {"order", std::to_string(o.order)}};
        if (needs_mu) params["mu"] = std::to_string(o.mu);
        rec["parameters"] = params;
        json coeffs = json::array();
        for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_decimal(s[k]));
        rec["coefficients"] = coeffs;
        std::cout << rec.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "k,coefficient\n";
        for (int k = 0; k <= s.order(); ++k) std::cout << k << "," << to_decimal(s[k]) << "\n";
    } else {
        for (int k = 0; k <= s.order(); ++k) {
            if (k > 0) std::cout << ",";
            std::cout << to_decimal(s[k]);
        }
        std::cout << "\n";
    }
    return 0;
}

/* --------------------------------------------------------------- verify */

struct VerifyOpts : CommonOpts {
    long long order = 12;
    long long trials = 50;
    std::uint64_t seed = 1;
};

/* Deterministic small quantity sets: size 0..6, numerators in
 * [-9,9]\{0}, denominators in [1,9]. Raw engine draws only, so the
 * stream is identical on every platform. */
QuantitySet random_quantity_set(std::mt19937& gen) {
    QuantitySet qs;
    const int size = static_cast<int>(gen() % 7);
    for (int i = 0; i < size; ++i) {
        const long long num = 1 + static_cast<long long>(gen() % 9);
        const long long den = 1 + static_cast<long long>(gen() % 9);
        const bool negative = (gen() & 1u) != 0;
        qs.values.push_back(make_rational(negative ? -num : num, den));
    }
    return qs;
}

int run_verify(const VerifyOpts& o) {
    if (o.order < 2) {
        std::cerr << "verify: --order must be >= 2\n";
        return 2;
    }
    if (o.trials < 1) {
        std::cerr << "verify: --trials must be >= 1\n";
        return 2;
    }
    const int order = static_cast<int>(o.order);

    /* name -> still passing; insertion order preserved for output */
    std::vector<std::pair<std::string, bool>> checks;
    auto check = [&](std::string name, bool pass) {
        checks.emplace_back(std::move(name), pass);
    };

    std::mt19937 gen(o.seed);
    std::vector<std::string> identity_names;
    std::vector<bool> identity_ok;
    bool elementary_ok = true;
    bool homogeneous_ok = true;
    for (long long t = 0; t < o.trials; ++t) {
        const QuantitySet qs = random_quantity_set(gen);
        const auto residuals = verify_identities(qs, order);
        if (identity_names.empty()) {
            for (const auto& r : residuals) {
                identity_names.push_back(r.name);
                identity_ok.push_back(true);
            }
        }
        for (std::size_t i = 0; i < residuals.size(); ++i)
            identity_ok[i] = identity_ok[i] && residuals[i].holds();

        elementary_ok = elementary_ok &&
                        elementary(qs, order, ElementaryMethod::direct) ==
                            elementary(qs, order, ElementaryMethod::newton);
        const auto hd = homogeneous(qs, order, HomogeneousMethod::direct);
        homogeneous_ok = homogeneous_ok &&
                         hd == homogeneous(qs, order, HomogeneousMethod::from_p) &&
                         hd == homogeneous(qs, order, HomogeneousMethod::from_e);
    }
    for (std::size_t i = 0; i < identity_names.size(); ++i)
        check(identity_names[i], identity_ok[i]);
    check("elementary: direct and newton routes agree", elementary_ok);
    check("homogeneous: direct, from-p and from-e routes agree", homogeneous_ok);

    check("product-to-sum identity at z-degree 6, n-order 40",
          product_to_sum_residual(6, 40).is_zero());
    {
        bool ok = true;
        for (int mu = 1; mu <= 8; ++mu) ok = ok && shift_residual(mu, 60).is_zero();
        check("exponent-shift relation for mu = 1..8 at n-order 60", ok);
    }
    check("pentagonal series: product equals closed form at order 51",
          pentagonal_series(51, PentagonalMethod::product) ==
              pentagonal_series(51, PentagonalMethod::closed));
    check("partition series: inverse equals recurrence at order 120",
          partition_series(120, PartitionSeriesMethod::inverse) ==
              partition_series(120, PartitionSeriesMethod::recurrence));
    check("partition series times pentagonal series is 1 at order 120",
          partition_series(120) * pentagonal_series(120) == IntSeries::one(120));

    int failed = 0;
    for (const auto& [name, ok] : checks)
        if (!ok) ++failed;

    if (o.format == "json") {
        json rec;
        rec["operation"] = "verify";
        rec["parameters"] = {{"order", std::to_string(o.order)},
                             {"trials", std::to_string(o.trials)},
                             {"seed", std::to_string(o.seed)}};
        json arr = json::array();
        for (const auto& [name, ok] : checks)
            arr.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}});
        rec["checks"] = arr;
        rec["result"] = failed == 0 ? "pass" : "fail";
        std::cout << rec.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "status,check\n";
        for (const auto& [name, ok] : checks)
            std::cout << (ok ? "pass" : "fail") << ",\"" << name << "\"\n";
    } else {
        for (const auto& [name, ok] : checks)
            std::cout << (ok ? "pass  " : "FAIL  ") << name << "\n";
        std::cout << "verify: " << checks.size() << " checks, "
                  << (failed == 0 ? "all passed" : std::to_string(failed) + " failed")
                  << " (order=" << o.order << ", trials=" << o.trials
                  << ", seed=" << o.seed << ")\n";
    }
    return failed == 0 ? 0 : 1;
}

/* ---------------------------------------------------------------- table */

struct TableOpts : CommonOpts {
    long long max_m = 0;
    long long max_mu = 0;
    bool distinct = false;
};

int run_table(const TableOpts& o) {
    if (o.max_m < 1 || o.max_m > kMaxQueryM || o.max_mu < 1 || o.max_mu > o.max_m) {
        std::cerr << "table: need 1 <= --max-mu <= --max-m <= " << kMaxQueryM << "\n";
        return 2;
    }
    const int max_m = static_cast<int>(o.max_m);
    const int max_mu = static_cast<int>(o.max_mu);
    const auto table = o.distinct ? distinct_count_table(max_m, max_mu)
                                  : any_count_table(max_m, max_mu);

    if (o.format == "json") {
        json rec;
        rec["operation"] = "table";
        rec["parameters"] = {{"max_m", std::to_string(o.max_m)},
                             {"max_mu", std::to_string(o.max_mu)},
                             {"distinct", o.distinct}};
        json columns = json::array();
        columns.push_back("m");
        for (int mu = 1; mu <= max_mu; ++mu) columns.push_back(std::to_string(mu));
        rec["columns"] = columns;
        json rows = json::array();
        for (int m = 0; m <= max_m; ++m) {
            json row = json::array();
            row.push_back(std::to_string(m));
            for (int mu = 1; mu <= max_mu; ++mu) row.push_back(to_decimal(table[m][mu]));
            rows.push_back(row);
        }
        rec["rows"] = rows;
        std::cout << rec.dump() << "\n";
    } else {
        const char sep = o.format == "csv" ? ',' : ' ';
        std::cout << "m";
        for (int mu = 1; mu <= max_mu; ++mu) std::cout << sep << mu;
        std::cout << "\n";
        for (int m = 0; m <= max_m; ++m) {
            std::cout << m;
            for (int mu = 1; mu <= max_mu; ++mu) std::cout << sep << to_decimal(table[m][mu]);
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer-partition counts, q-series and symmetric-function identities"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "csv", "json"};

    CountOpts count_opts;
    auto* count = app.add_subcommand("count", "count partitions of m into exactly mu parts");
    count->add_option("--m", count_opts.m, "number to partition")
        ->required()
        ->check(CLI::Range(0LL, kMaxQueryM));
    count->add_option("--mu", count_opts.mu, "number of parts")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_flag("--distinct", count_opts.distinct, "require mutually unequal parts");
    count->add_option("--method", count_opts.method, "computation route (default: all, cross-checked)")
        ->check(CLI::IsMember({"recurrence", "series", "denumerant", "conversion", "all"}));
    count->add_option("--format", count_opts.format, "output format")
        ->check(CLI::IsMember(formats));

    SeriesOpts series_opts;
    auto* series = app.add_subcommand("series", "emit generating-function coefficients c_0..c_K");
    series->add_option("kind", series_opts.kind, "distinct | any | pentagonal | partition")
        ->required()
        ->check(CLI::IsMember({"distinct", "any", "pentagonal", "partition"}));
    series->add_option("--mu", series_opts.mu, "number of parts (distinct/any kinds)")
        ->check(CLI::NonNegativeNumber);
    series->add_option("--order", series_opts.order, "truncation order K")
        ->required()
        ->check(CLI::Range(0LL, kMaxOrder));
    series->add_option("--format", series_opts.format, "output format")
        ->check(CLI::IsMember(formats));

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "run the exact identity suite");
    verify->add_option("--order", verify_opts.order, "truncation order for the identity residuals")
        ->check(CLI::Range(2LL, kMaxOrder));
    verify->add_option("--trials", verify_opts.trials, "number of random quantity sets")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_opts.seed, "seed for the quantity-set generator");
    verify->add_option("--format", verify_opts.format, "output format")
        ->check(CLI::IsMember(formats));

    TableOpts table_opts;
    auto* table = app.add_subcommand("table", "emit the full (m, mu) count table");
    table->add_option("--max-m", table_opts.max_m, "largest m (rows 0..max-m)")->required();
    table->add_option("--max-mu", table_opts.max_mu, "largest mu (columns 1..max-mu)")->required();
    table->add_flag("--distinct", table_opts.distinct, "require mutually unequal parts");
    table->add_option("--format", table_opts.format, "output format")
        ->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count) return run_count(count_opts);
        if (*series) return run_series(series_opts);
        if (*verify) return run_verify(verify_opts);
        if (*table) return run_table(table_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

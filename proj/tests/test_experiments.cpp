#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "vsdt/experiments.hpp"

using namespace vsdt;

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(6) == 3);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(9) == 4);
}

TEST_CASE("csv columns are fixed") {
    CHECK(csv_header() ==
          "family,n,m,delta_max,k_degeneracy,r,lower,exact,status,constructive,bound");
    ExperimentRow row;
    row.family = "complete";
    row.n = 3;
    row.m = 3;
    row.max_degree = 2;
    row.degeneracy = 2;
    row.r = 1;
    row.lower = 4;
    row.exact = 5;
    row.constructive = 6;
    row.bound = 7;
    CHECK(to_csv(row) == "complete,3,3,2,2,1,4,5,exact,6,7");
    row.exact.reset();
    row.status = "timeout";
    CHECK(to_csv(row) == "complete,3,3,2,2,1,4,,timeout,6,7");
}

TEST_CASE("run_table small rows and the ordering chain") {
    SearchBudget budget;
    auto rows = run_table(3, 4, 1, budget);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].exact == 5);
    CHECK(rows[1].exact == 6);
    for (const auto& row : rows) {
        REQUIRE(row.exact.has_value());
        REQUIRE(row.constructive.has_value());
        REQUIRE(row.bound.has_value());
        CHECK(row.lower <= *row.exact);
        CHECK(*row.exact <= *row.constructive);
        CHECK(*row.constructive <= *row.bound);
    }
}

TEST_CASE("run_table brackets timed-out rows") {
    SearchBudget tiny;
    tiny.max_nodes = 100;
    auto rows = run_table(5, 5, 1, tiny);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == "timeout");
    CHECK(!rows[0].exact.has_value());
    REQUIRE(rows[0].constructive.has_value());
    CHECK(rows[0].lower <= *rows[0].constructive);
}

TEST_CASE("run_scan is deterministic and clean on small trees") {
    ScanOptions opts;
    opts.family = "random_tree";
    opts.count = 8;
    opts.n_max = 10;
    opts.seed = 42;
    opts.r = 1;
    auto a = run_scan(opts);
    auto b = run_scan(opts);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(to_csv(a.rows[i].row) == to_csv(b.rows[i].row));
        CHECK(a.rows[i].conjecture1_margin == b.rows[i].conjecture1_margin);
    }
    CHECK(a.conjecture1_violations == 0);
    CHECK(a.timeouts == 0);
    for (const auto& scan : a.rows) {
        REQUIRE(scan.row.exact.has_value());
        CHECK(*scan.conjecture1_margin >= 0);
        CHECK(scan.row.lower <= *scan.row.exact);
        CHECK(*scan.row.exact <= *scan.row.constructive);
        CHECK(*scan.row.constructive <= *scan.row.bound);
    }
}

TEST_CASE("run_scan covers 2-degenerate graphs under the k*Delta+3 bound") {
    ScanOptions opts;
    opts.family = "random_k_degenerate";
    opts.k = 2;
    opts.count = 8;
    opts.n_max = 9;
    opts.seed = 7;
    opts.r = 1;
    auto summary = run_scan(opts);
    CHECK(summary.conjecture1_violations == 0);
    for (const auto& scan : summary.rows) {
        REQUIRE(scan.row.exact.has_value());
        CHECK(*scan.row.exact <= 2 * scan.row.max_degree + 3);
        if (scan.conjecture2_excess) CHECK(*scan.conjecture2_excess <= 3);
    }
}

#include <doctest.h>

#include "kboot/percolation.hpp"
#include "kboot/search.hpp"

using namespace kboot;

TEST_CASE("exact_max_time pinned values") {
    struct Row {
        int n, r, expect;
    };
    // r=4: n-3; r=3: ceil(log2(n-1)); r=5 small cases
    for (Row row : {Row{4, 4, 1}, Row{5, 4, 2}, Row{6, 4, 3}, Row{3, 3, 1}, Row{4, 3, 2},
                    Row{5, 3, 2}, Row{6, 3, 3}, Row{5, 5, 1}}) {
        auto res = exact_max_time(row.n, row.r, true);
        CHECK(res.max_time == row.expect);
        CHECK(res.exhaustive);
    }
}

TEST_CASE("dedup on/off agree and witnesses re-verify") {
    for (int n : {4, 5}) {
        for (int r : {3, 4}) {
            auto a = exact_max_time(n, r, true);
            auto b = exact_max_time(n, r, false);
            CHECK(a.max_time == b.max_time);
            CHECK(a.witness_graphs == b.witness_graphs);
            CHECK(b.graphs_scanned == (1ll << (n * (n - 1) / 2)));
            CHECK(a.dedup_classes > 0);
            CHECK(a.dedup_classes < b.graphs_scanned);
            for (auto form : a.witness_graphs) {
                Graph w = graph_from_mask(n, form);
                CHECK(run(w, r).result.stabilization_time == a.max_time);
            }
        }
    }
}

TEST_CASE("exact_max_time caps at n = 7") {
    CHECK_THROWS_AS(exact_max_time(8, 4, true), CapabilityError);
}

TEST_CASE("sampled_max_time lower bounds") {
    SUBCASE("k4_chain witness at n=20, r=4") {
        auto res = sampled_max_time(20, 4, 0, 1);
        CHECK(res.max_time >= 17);
        CHECK_FALSE(res.exhaustive);
    }
    SUBCASE("disjoint chain floor at n=20, r=5") {
        auto res = sampled_max_time(20, 5, 0, 1);
        CHECK(res.max_time >= 6);  // floor((20-2)/3)
    }
    SUBCASE("deterministic for a fixed seed") {
        auto a = sampled_max_time(12, 4, 5, 99);
        auto b = sampled_max_time(12, 4, 5, 99);
        CHECK(a.max_time == b.max_time);
        CHECK(a.witness_graphs == b.witness_graphs);
    }
}

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "kboot/constructions.hpp"
#include "kboot/verifier.hpp"

using namespace kboot;

namespace {

Chain make_chain(int r, int n, std::vector<std::vector<int>> cliques,
                 std::vector<EdgeId> shared) {
    Chain c;
    c.r = r;
    c.n = n;
    c.cliques = std::move(cliques);
    c.shared_edges = std::move(shared);
    return c;
}

// random clique list with plausible shared edges; mostly invalid as chains,
// which is exactly what the oracle comparisons need
Chain random_system(std::mt19937_64& rng, int n, int r, int T) {
    Chain c;
    c.r = r;
    c.n = n;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    for (int s = 0; s < T; ++s) {
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<int> cl(verts.begin(), verts.begin() + r);
        std::sort(cl.begin(), cl.end());
        c.cliques.push_back(cl);
    }
    for (int i = 0; i <= T; ++i) {
        const auto& cl = c.cliques[std::min(i, T - 1)];
        int a = int(rng() % r), b = int(rng() % (r - 1));
        if (b >= a) ++b;
        c.shared_edges.push_back(make_edge(cl[a], cl[b]));
    }
    return c;
}

int missing_in(const Graph& g, const std::vector<int>& B, std::span<const int> A) {
    int miss = 0;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j) {
            bool in_a = std::find(A.begin(), A.end(), B[i]) != A.end() &&
                        std::find(A.begin(), A.end(), B[j]) != A.end();
            if (!in_a && !g.has_edge(B[i], B[j])) ++miss;
        }
    return miss;
}

}  // namespace

TEST_CASE("is_valid_chain") {
    SUBCASE("disjoint chain is valid") {
        CHECK(is_valid_chain(disjoint_chain(5, 3).chain));
    }
    SUBCASE("single clique is valid") {
        auto c = make_chain(5, 5, {{0, 1, 2, 3, 4}}, {make_edge(0, 1), make_edge(2, 3)});
        CHECK(is_valid_chain(c));
    }
    SUBCASE("two cliques sharing three vertices are not") {
        auto c = make_chain(5, 7, {{0, 1, 2, 3, 4}, {2, 3, 4, 5, 6}},
                            {make_edge(0, 1), make_edge(2, 3), make_edge(5, 6)});
        CHECK_FALSE(is_valid_chain(c));
    }
    SUBCASE("consecutive intersection must equal e_i") {
        auto c = make_chain(5, 8, {{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}},
                            {make_edge(0, 1), make_edge(2, 3), make_edge(5, 6)});
        CHECK_FALSE(is_valid_chain(c));  // they share {3,4}, e_1 says {2,3}
        c.shared_edges[1] = make_edge(3, 4);
        CHECK(is_valid_chain(c));
    }
    SUBCASE("wrong clique size is an input error") {
        auto c = make_chain(5, 5, {{0, 1, 2, 3}}, {make_edge(0, 1), make_edge(2, 3)});
        CHECK_THROWS_AS(is_valid_chain(c), std::invalid_argument);
    }
}

TEST_CASE("find_external_krm on fixed chains") {
    SUBCASE("disjoint chains are good") {
        for (int t : {1, 2, 3, 4}) {
            CHECK_FALSE(find_external_krm(disjoint_chain(5, t).chain).has_value());
            CHECK_FALSE(find_external_krm_brute(disjoint_chain(5, t).chain).has_value());
        }
    }
    SUBCASE("two cliques sharing one edge are good") {
        auto c = make_chain(5, 8, {{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}},
                            {make_edge(0, 1), make_edge(3, 4), make_edge(5, 6)});
        CHECK_FALSE(find_external_krm(c).has_value());
    }
    SUBCASE("third clique through {0,5} and {1,6} creates an external K_5^-") {
        auto c = make_chain(5, 9,
                            {{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}, {0, 1, 5, 6, 8}},
                            {make_edge(0, 1), make_edge(3, 4), make_edge(5, 6),
                             make_edge(0, 8)});
        auto w = find_external_krm(c);
        REQUIRE(w.has_value());
        // the witness really spans >= 9 union edges and is no clique of the chain
        Graph u = chain_union_graph(c);
        CHECK(missing_in(u, *w, {}) <= 1);
        for (const auto& cl : c.cliques) CHECK(*w != cl);
        CHECK(w == find_external_krm_brute(c));
    }
}

TEST_CASE("find_external_krm matches brute enumeration on random systems") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 8 + int(rng() % 5);
        Chain c = random_system(rng, n, 5, 2 + int(rng() % 3));
        CHECK(find_external_krm(c) == find_external_krm_brute(c));
    }
}

TEST_CASE("classify_set on fixed chains") {
    auto c = make_chain(5, 8, {{0, 1, 2, 3, 4}, {3, 4, 5, 6, 7}},
                        {make_edge(0, 1), make_edge(3, 4), make_edge(5, 6)});
    Graph u = chain_union_graph(c);
    SUBCASE("A = {0,5} is dangerous") {
        std::vector<int> A{0, 5};
        auto rep = classify_set(u, c, A);
        CHECK(rep.verdict == Verdict::dangerous);
        REQUIRE(rep.witness.has_value());
        CHECK(missing_in(u, *rep.witness, A) == 1);
        // the spec's hand example is one of the qualifying witnesses
        std::vector<int> B{0, 1, 3, 4, 5};
        CHECK(missing_in(u, B, A) == 1);
    }
    SUBCASE("deadly example: A spanning the gap completely") {
        std::vector<int> A{0, 5, 6};
        auto rep = classify_set(u, c, A);
        // B = {0,3,4,5,6}: 03,04,34 from H_1/H_2 side, 34..56 in H_2, 05,06 via K_A
        CHECK(rep.verdict == Verdict::deadly);
        REQUIRE(rep.witness.has_value());
        CHECK(missing_in(u, *rep.witness, A) == 0);
    }
    SUBCASE("A outside everything is safe") {
        Chain single = make_chain(5, 7, {{0, 1, 2, 3, 4}},
                                  {make_edge(0, 1), make_edge(2, 3)});
        Graph su = chain_union_graph(single);
        CHECK(classify_set(su, single, std::vector<int>{5, 6}).verdict == Verdict::safe);
    }
    SUBCASE("edge of the lone clique is safe when B must differ from it") {
        Chain single = make_chain(5, 6, {{0, 1, 2, 3, 4}},
                                  {make_edge(0, 1), make_edge(2, 3)});
        Graph su = chain_union_graph(single);
        CHECK(classify_set(su, single, std::vector<int>{0, 1}).verdict == Verdict::safe);
    }
    SUBCASE("size bounds enforced") {
        CHECK_THROWS_AS(classify_set(u, c, std::vector<int>{0}), std::invalid_argument);
        CHECK_THROWS_AS(classify_set(u, c, std::vector<int>{0, 1, 2, 3, 4}),
                        std::invalid_argument);
    }
}

TEST_CASE("classify_set matches brute force and is monotone") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 8 + int(rng() % 4);
        Chain c = random_system(rng, n, 5, 2);
        Graph u = chain_union_graph(c);
        int sz = 2 + int(rng() % 3);
        std::vector<int> A;
        while ((int)A.size() < sz) {
            int v = int(rng() % n);
            if (std::find(A.begin(), A.end(), v) == A.end()) A.push_back(v);
        }
        auto fast = classify_set(u, c, A);
        auto brute = classify_set_brute(u, c, A);
        CHECK(fast.verdict == brute.verdict);
        if (fast.verdict != Verdict::safe) {
            REQUIRE(fast.witness.has_value());
            int miss = missing_in(u, *fast.witness, A);
            CHECK(miss <= 1);
            if (fast.verdict == Verdict::deadly) CHECK(miss == 0);
        }
        // adding edges never downgrades the verdict
        Graph u2 = u;
        for (int k = 0; k < 3; ++k) {
            int a = int(rng() % n), b = int(rng() % n);
            if (a != b) u2.add_edge(std::min(a, b), std::max(a, b));
        }
        auto after = classify_set(u2, c, A);
        CHECK((int)after.verdict >= (int)fast.verdict);
    }
}

TEST_CASE("covers_simply") {
    SUBCASE("single set simply covers its triples") {
        auto c = make_chain(5, 5, {{0, 1, 2, 3, 4}}, {make_edge(0, 1), make_edge(2, 3)});
        CHECK(covers_simply(c, 0, 1, 2) == CoverStatus::simply_covered);
    }
    SUBCASE("three pairwise-overlapping sets force a violation") {
        auto c = make_chain(5, 12,
                            {{0, 1, 3, 4, 5}, {0, 2, 6, 7, 8}, {1, 2, 9, 10, 11}},
                            {make_edge(0, 1), make_edge(3, 4), make_edge(6, 7),
                             make_edge(9, 10)});
        CHECK(covers_simply(c, 0, 1, 2) == CoverStatus::violation);
        CHECK(count_triangle_violations(c) == count_triangle_violations_brute(c));
        CHECK(count_triangle_violations(c) >= 1);
    }
    SUBCASE("uncovered pair") {
        auto c = make_chain(5, 12,
                            {{0, 1, 3, 4, 5}, {0, 2, 6, 7, 8}, {1, 2, 9, 10, 11}},
                            {make_edge(0, 1), make_edge(3, 4), make_edge(6, 7),
                             make_edge(9, 10)});
        CHECK(covers_simply(c, 0, 1, 9) == CoverStatus::not_covered);
    }
}

TEST_CASE("triangle violation counters agree on random systems") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 10 + int(rng() % 8);
        Chain c = random_system(rng, n, 5, 2 + int(rng() % 4));
        CHECK(count_triangle_violations(c) == count_triangle_violations_brute(c));
    }
}

TEST_CASE("count_dangerous_supersets matches per-set classification") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 8 + int(rng() % 3);
        Chain c = random_system(rng, n, 5, 2);
        Graph u = chain_union_graph(c);
        int jsz = 1 + int(rng() % 2);
        std::vector<int> J;
        while ((int)J.size() < jsz) {
            int v = int(rng() % n);
            if (std::find(J.begin(), J.end(), v) == J.end()) J.push_back(v);
        }
        for (int set_size = jsz + 1; set_size <= 4; ++set_size) {
            for (bool deadly : {false, true}) {
                // brute: classify every superset of J of the requested size
                long long expect = 0;
                std::vector<int> extra;
                std::function<void(int, int)> rec = [&](int from, int left) {
                    if (left == 0) {
                        std::vector<int> S = J;
                        S.insert(S.end(), extra.begin(), extra.end());
                        auto v = classify_set(u, c, S).verdict;
                        if (deadly ? v == Verdict::deadly : v != Verdict::safe) ++expect;
                        return;
                    }
                    for (int w = from; w < n; ++w) {
                        if (std::find(J.begin(), J.end(), w) != J.end()) continue;
                        extra.push_back(w);
                        rec(w + 1, left - 1);
                        extra.pop_back();
                    }
                };
                rec(0, set_size - jsz);
                CHECK(count_dangerous_supersets(u, c, J, set_size, 1000000, deadly) == expect);
                // cap semantics: cap below the count reports cap+1
                if (expect > 1)
                    CHECK(count_dangerous_supersets(u, c, J, set_size, expect - 1, deadly) ==
                          expect);
            }
        }
    }
}

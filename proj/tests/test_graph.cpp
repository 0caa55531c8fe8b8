#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "kboot/graph.hpp"

using namespace kboot;

namespace {

std::vector<int> mask_bits(std::span<const Word> mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (test_bit(mask, v)) out.push_back(v);
    return out;
}

// independent oracle: try every k-subset of the mask
bool has_clique_brute(const Graph& g, std::span<const Word> mask, int k) {
    auto verts = mask_bits(mask, g.order());
    if (k == 0) return true;
    if ((int)verts.size() < k) return false;
    std::vector<int> idx(verts.size(), 0);
    std::fill(idx.end() - k, idx.end(), 1);
    do {
        std::vector<int> pick;
        for (size_t i = 0; i < verts.size(); ++i)
            if (idx[i]) pick.push_back(verts[i]);
        bool ok = true;
        for (size_t i = 0; i < pick.size() && ok; ++i)
            for (size_t j = i + 1; j < pick.size() && ok; ++j)
                if (!g.has_edge(pick[i], pick[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

std::vector<Word> full_mask(int n) {
    std::vector<Word> m(words_for(n), 0);
    for (int v = 0; v < n; ++v) set_bit(m, v);
    return m;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("edge basics and validation") {
    Graph g(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // idempotent
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(make_edge(3, 3), std::invalid_argument);
    CHECK(make_edge(4, 1) == EdgeId{1, 4});
}

TEST_CASE("common_neighbors") {
    SUBCASE("path 0-1-2") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        CHECK(mask_bits(g.common_neighbors(0, 2), 3) == std::vector<int>{1});
    }
    SUBCASE("empty graph: any pair gives nothing") {
        Graph g(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                CHECK(mask_bits(g.common_neighbors(u, v), 6).empty());
    }
    SUBCASE("K_5: endpoints are excluded") {
        Graph g(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
        CHECK(mask_bits(g.common_neighbors(0, 1), 5) == std::vector<int>{2, 3, 4});
    }
    SUBCASE("out of range throws") {
        Graph g(3);
        CHECK_THROWS_AS(g.common_neighbors(0, 3), std::invalid_argument);
    }
}

TEST_CASE("has_clique on fixed graphs") {
    SUBCASE("K_4 contains K_3") {
        Graph g(4);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
        CHECK(has_clique(g, full_mask(4), 3));
        CHECK(has_clique(g, full_mask(4), 4));
        CHECK_FALSE(has_clique(g, full_mask(4), 5));
    }
    SUBCASE("triangle-free: star has no K_3") {
        Graph g(5);
        for (int v = 1; v < 5; ++v) g.add_edge(0, v);
        CHECK_FALSE(has_clique(g, full_mask(5), 3));
        CHECK(has_clique(g, full_mask(5), 2));
    }
    SUBCASE("5-cycle: K_2 yes, K_3 no") {
        Graph g(5);
        for (int v = 0; v < 5; ++v) g.add_edge(std::min(v, (v + 1) % 5), std::max(v, (v + 1) % 5));
        CHECK(has_clique(g, full_mask(5), 2));
        CHECK_FALSE(has_clique(g, full_mask(5), 3));
    }
    SUBCASE("k=0 is vacuous, k=1 wants a vertex") {
        Graph g(3);
        std::vector<Word> empty(words_for(3), 0);
        CHECK(has_clique(g, empty, 0));
        CHECK_FALSE(has_clique(g, empty, 1));
        CHECK(has_clique(g, full_mask(3), 1));
    }
}

TEST_CASE("has_clique agrees with subset brute force, n <= 8") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + int(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        std::vector<Word> mask(words_for(n), 0);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) set_bit(mask, v);
        for (int k = 0; k <= n; ++k)
            CHECK(has_clique(g, mask, k) == has_clique_brute(g, mask, k));
    }
}

TEST_CASE("canonical_form") {
    SUBCASE("isomorphic paths on 3 vertices agree") {
        Graph a(3), b(3);
        a.add_edge(0, 1);
        a.add_edge(1, 2);  // 0-1-2
        b.add_edge(0, 1);
        b.add_edge(0, 2);  // 1-0-2
        CHECK(canonical_form(a) == canonical_form(b));
    }
    SUBCASE("K_3 differs from the path") {
        Graph a(3), b(3);
        for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}}) a.add_edge(u, v);
        b.add_edge(0, 1);
        b.add_edge(1, 2);
        CHECK(canonical_form(a) != canonical_form(b));
    }
    SUBCASE("exactly 11 isomorphism classes on 4 vertices") {
        std::set<std::uint64_t> forms;
        for (std::uint64_t m = 0; m < 64; ++m) forms.insert(canonical_form(graph_from_mask(4, m)));
        CHECK(forms.size() == 11);
    }
    SUBCASE("cap at n = 8") {
        CHECK_THROWS_AS(canonical_form(Graph(9)), CapabilityError);
    }
    SUBCASE("invariant under random relabeling") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 3 + int(rng() % 6);
            Graph g = random_graph(n, 0.5, rng);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
        }
    }
}

TEST_CASE("mask round trip") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + int(rng() % 7);
        std::uint64_t bits = n * (n - 1) / 2;
        std::uint64_t m = rng() & ((1ull << bits) - 1);
        CHECK(upper_triangle_mask(graph_from_mask(n, m)) == m);
    }
}

TEST_CASE("edge list io") {
    SUBCASE("round trip") {
        Graph g(4);
        g.add_edge(0, 2);
        g.add_edge(1, 3);
        std::stringstream ss;
        save_edge_list(g, ss);
        CHECK(load_edge_list(ss) == g);
    }
    SUBCASE("rejects bad input") {
        auto load = [](const std::string& s) {
            std::istringstream in(s);
            return load_edge_list(in);
        };
        CHECK_THROWS_AS(load(""), std::invalid_argument);
        CHECK_THROWS_AS(load("3 1\n2 1\n"), std::invalid_argument);   // u >= v
        CHECK_THROWS_AS(load("3 1\n0 5\n"), std::invalid_argument);   // out of range
        CHECK_THROWS_AS(load("3 2\n0 1\n0 1\n"), std::invalid_argument);  // dup
        CHECK_THROWS_AS(load("3 2\n0 1\n"), std::invalid_argument);   // truncated
    }
}

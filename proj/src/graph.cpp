#include "kboot/graph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace kboot {

namespace {

// Branch and bound: either the highest-degree candidate is in a k-clique
// restricted to `cand`, or it can be discarded.
bool clique_rec(const Graph& g, std::vector<Word>& cand, int k) {
    if (k <= 0) return true;
    while (true) {
        int cnt = popcount(cand);
        if (cnt < k) return false;
        if (k == 1) return true;
        // pick the candidate with the most neighbours inside cand
        int best = -1, best_deg = -1;
        for_each_bit(cand, [&](int v) {
            auto rv = g.row(v);
            int d = 0;
            for (size_t i = 0; i < cand.size(); ++i) d += std::popcount(cand[i] & rv[i]);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        });
        if (best_deg < k - 1) return false;
        std::vector<Word> sub(cand.size());
        auto rb = g.row(best);
        for (size_t i = 0; i < cand.size(); ++i) sub[i] = cand[i] & rb[i];
        if (clique_rec(g, sub, k - 1)) return true;
        clear_bit(cand, best);
    }
}

}  // namespace

bool has_clique(const Graph& g, std::span<const Word> mask, int k) {
    if (k < 0) throw std::invalid_argument("has_clique: k must be >= 0");
    if (k == 0) return true;
    if (popcount(mask) < k) return false;
    if (k == 1) return true;
    std::vector<Word> cand(mask.begin(), mask.end());
    return clique_rec(g, cand, k);
}

std::uint64_t upper_triangle_mask(const Graph& g) {
    int n = g.order();
    if (n > 11) throw CapabilityError("upper_triangle_mask: n > 11");
    std::uint64_t m = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (test_bit(g.row(i), j)) m |= std::uint64_t(1) << bit;
    return m;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    if (n > 11) throw CapabilityError("graph_from_mask: n > 11");
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

std::uint64_t canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 8) throw CapabilityError("canonical_form: n > 8 (permutation enumeration)");
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    do {
        std::uint64_t m = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (test_bit(g.row(perm[i]), perm[j])) m |= std::uint64_t(1) << bit;
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    int n = g.order();
    if ((int)perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (test_bit(g.row(perm[i]), perm[j])) out.add_edge(i, j);
    return out;
}

std::vector<EdgeId> edges_of(const Graph& g) {
    std::vector<EdgeId> out;
    out.reserve(size_t(g.edge_count()));
    for (int u = 0; u < g.order(); ++u) {
        auto ru = g.row(u);
        for_each_bit(ru, [&](int v) {
            if (v > u) out.push_back({u, v});
        });
    }
    return out;
}

Graph load_edge_list(std::istream& in) {
    long long n = 0, count = 0;
    if (!(in >> n >> count)) throw std::invalid_argument("edge list: missing header");
    if (n < 1 || n > (1 << 16)) throw std::invalid_argument("edge list: bad vertex count");
    if (count < 0) throw std::invalid_argument("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < count; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: vertex out of range");
        if (u >= v) throw std::invalid_argument("edge list: edges must have u < v");
        if (g.has_edge(int(u), int(v))) throw std::invalid_argument("edge list: duplicate edge");
        g.add_edge(int(u), int(v));
    }
    return g;
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : edges_of(g)) out << u << ' ' << v << '\n';
}

}  // namespace kboot

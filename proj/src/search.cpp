#include "kboot/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "kboot/constructions.hpp"
#include "kboot/percolation.hpp"

namespace kboot {

namespace {

// Table mapping each permutation of [n] to its action on upper-triangle
// pair-bit indices, for spreading a mask over its isomorphism class.
std::vector<std::vector<int>> pair_permutations(int n) {
    int pairs = n * (n - 1) / 2;
    auto pair_index = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> map(pairs);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) map[pair_index(i, j)] = pair_index(perm[i], perm[j]);
        out.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

int run_time(const Graph& g, int r) {
    RunOptions opts;
    opts.record_trace = false;
    return run(g, r, opts).result.stabilization_time;
}

}  // namespace

SearchResult exact_max_time(int n, int r, bool dedup) {
    if (n < 2) throw std::invalid_argument("exact_max_time: n must be >= 2");
    if (r < 3) throw std::invalid_argument("exact_max_time: r must be >= 3");
    if (n > 7) throw CapabilityError("exact_max_time: enumeration capped at n = 7");
    int pairs = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << pairs;

    SearchResult res;
    res.n = n;
    res.r = r;
    std::set<std::uint64_t> witnesses;

    if (dedup) {
        auto perms = pair_permutations(n);
        std::vector<bool> seen(total, false);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (seen[mask]) continue;
            ++res.dedup_classes;
            for (const auto& pm : perms) {
                std::uint64_t m2 = 0;
                for (int b = 0; b < pairs; ++b)
                    if ((mask >> b) & 1) m2 |= std::uint64_t(1) << pm[b];
                seen[m2] = true;
            }
            Graph g = graph_from_mask(n, mask);
            int t = run_time(g, r);
            ++res.graphs_scanned;
            if (t > res.max_time) {
                res.max_time = t;
                witnesses.clear();
            }
            if (t == res.max_time) witnesses.insert(canonical_form(g));
        }
    } else {
        int best = 0;
#ifdef _OPENMP
#pragma omp parallel
        {
            int local_best = 0;
            std::set<std::uint64_t> local_wit;
#pragma omp for schedule(static)
            for (long long m = 0; m < (long long)total; ++m) {
                Graph g = graph_from_mask(n, std::uint64_t(m));
                int t = run_time(g, r);
                if (t > local_best) {
                    local_best = t;
                    local_wit.clear();
                }
                if (t == local_best) local_wit.insert(canonical_form(g));
            }
#pragma omp critical
            {
                if (local_best > best) {
                    best = local_best;
                    witnesses.clear();
                }
                if (local_best == best)
                    witnesses.insert(local_wit.begin(), local_wit.end());
            }
        }
#else
        for (std::uint64_t m = 0; m < total; ++m) {
            Graph g = graph_from_mask(n, m);
            int t = run_time(g, r);
            if (t > best) {
                best = t;
                witnesses.clear();
            }
            if (t == best) witnesses.insert(canonical_form(g));
        }
#endif
        res.max_time = best;
        res.graphs_scanned = (long long)total;
    }
    res.witness_graphs.assign(witnesses.begin(), witnesses.end());
    return res;
}

SearchResult sampled_max_time(int n, int r, long long samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sampled_max_time: n must be >= 2");
    if (r < 3) throw std::invalid_argument("sampled_max_time: r must be >= 3");
    if (samples < 0) throw std::invalid_argument("sampled_max_time: samples must be >= 0");

    SearchResult res;
    res.n = n;
    res.r = r;
    res.exhaustive = false;
    res.max_time = 0;

    auto consider = [&](const Graph& g) {
        int t = run_time(g, r);
        ++res.graphs_scanned;
        res.max_time = std::max(res.max_time, t);
    };

    auto pad = [n](const Graph& g) {
        Graph out(n);
        for (auto e : edges_of(g)) out.add_edge(e.u, e.v);
        return out;
    };

    // constructions that fit n
    if (r == 3 && n >= 2) consider(path_graph(n));
    if (r == 4 && n >= 4) consider(k4_chain(n));
    if (r >= 4) {
        int t = (n - 2) / (r - 2);
        if (t >= 1) consider(pad(disjoint_chain(r, t).graph));
    }
    if (r >= 5) {
        for (double coeff : {0.5, 1.0, 2.0}) {
            try {
                auto cg = greedy_chain(n, r, coeff);
                consider(cg.graph);
            } catch (const ConstructionError&) {
            }
        }
    }

    // random graphs over a spread of densities
    std::mt19937_64 rng(seed);
    std::array<double, 5> densities{0.1, 0.3, 0.5, 0.7, 0.9};
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (long long s = 0; s < samples; ++s) {
        double p = densities[size_t(s % (long long)densities.size())];
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        consider(g);
    }
    return res;
}

}  // namespace kboot

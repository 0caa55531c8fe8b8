#include "kboot/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "kboot/verifier.hpp"

namespace kboot {

Graph path_graph(int n) {
    if (n < 2) throw std::invalid_argument("path_graph: n must be >= 2");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph k4_chain(int n) {
    if (n < 4) throw std::invalid_argument("k4_chain: n must be >= 4");
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    EdgeId witness{2, 3};  // the edge added at the final step of the K_4^- run
    for (int z = 4; z < n; ++z) {
        int x = witness.u, y = witness.v;
        g.add_edge(x, z);
        g.add_edge(y, z);
        int w = 0;
        while (w == x || w == y || w == z) ++w;
        witness = make_edge(z, w);  // all zw edges arrive at the new final step
    }
    return g;
}

ChainGraph disjoint_chain(int r, int t) {
    if (r < 4) throw std::invalid_argument("disjoint_chain: r must be >= 4");
    if (t < 1) throw std::invalid_argument("disjoint_chain: t must be >= 1");
    int n = 2 + t * (r - 2);
    Chain chain;
    chain.r = r;
    chain.n = n;
    chain.shared_edges.push_back({0, 1});
    EdgeId prev{0, 1};
    for (int i = 1; i <= t; ++i) {
        int base = 2 + (i - 1) * (r - 2);
        std::vector<int> clique{prev.u, prev.v};
        for (int k = 0; k < r - 2; ++k) clique.push_back(base + k);
        chain.cliques.push_back(std::move(clique));
        prev = EdgeId{base + r - 4, base + r - 3};  // last two fresh vertices
        chain.shared_edges.push_back(prev);
    }
    return build_chain_graph(chain);
}

namespace {

// Set-system neighborhood state for the greedy construction. nb[v] is the
// set of vertices sharing a (possibly partial) set with v, v included.
struct SetSystemState {
    int n, W;
    std::vector<Word> nb;     // n rows
    std::vector<int> degree;  // finalized sets containing v

    explicit SetSystemState(int n_) : n(n_), W(words_for(n_)), nb(size_t(n_) * W, 0), degree(n_, 0) {}

    std::span<Word> row(int v) { return {nb.data() + size_t(v) * W, size_t(W)}; }
    std::span<const Word> row(int v) const { return {nb.data() + size_t(v) * W, size_t(W)}; }

    void join(const std::vector<int>& members) {
        for (int x : members)
            for (int y : members) set_bit(row(x), y);
    }

    // union of N(y) over y in N(x)
    void accumulate_n2(int x, std::vector<Word>& out) const {
        for_each_bit(row(x), [&](int y) {
            auto ry = row(y);
            for (int i = 0; i < W; ++i) out[i] |= ry[i];
        });
    }
};

}  // namespace

ChainGraph greedy_chain(int n, int r, double degree_cap_coeff) {
    if (r < 5) throw std::invalid_argument("greedy_chain: r must be >= 5");
    if (n < r) throw std::invalid_argument("greedy_chain: n must be >= r");
    if (degree_cap_coeff <= 0) throw std::invalid_argument("greedy_chain: coefficient must be positive");
    double cap = degree_cap_coeff * std::sqrt(double(n));

    SetSystemState st(n);
    Chain chain;
    chain.r = r;
    chain.n = n;
    chain.shared_edges.push_back({0, 1});
    EdgeId prev{0, 1};

    std::vector<Word> excluded(st.W);
    while (true) {
        std::vector<int> members{prev.u, prev.v};
        st.join(members);
        std::vector<int> fresh;
        bool ok = true;
        for (int i = 0; i < r - 2; ++i) {
            std::fill(excluded.begin(), excluded.end(), 0);
            for (int x : members) st.accumulate_n2(x, excluded);
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (test_bit(excluded, v)) continue;
                if (best < 0 || st.degree[v] < st.degree[best]) best = v;
            }
            if (best < 0 || st.degree[best] + 1 > cap) {
                ok = false;
                break;
            }
            members.push_back(best);
            fresh.push_back(best);
            st.join(members);
        }
        if (!ok) {
            if (chain.cliques.empty())
                throw ConstructionError(
                    "greedy_chain: no admissible vertex for the first set (n too small for the "
                    "degree cap " +
                    std::to_string(cap) + ")");
            break;
        }
        for (int x : members) ++st.degree[x];
        chain.cliques.push_back(members);
        prev = make_edge(fresh[0], fresh[1]);
        chain.shared_edges.push_back(prev);
    }

    // verified, not assumed
    if (!is_valid_chain(chain)) throw std::logic_error("greedy_chain: invalid chain produced");
    if (count_triangle_violations(chain) != 0)
        throw std::logic_error("greedy_chain: external triangle produced");
    for (int v = 0; v < n; ++v)
        if (st.degree[v] > cap) throw std::logic_error("greedy_chain: degree cap violated");
    return build_chain_graph(chain);
}

namespace {

std::vector<int> sample_distinct(std::mt19937_64& rng, int n, int k, const int* avoid, int navoid) {
    std::vector<int> out;
    std::uniform_int_distribution<int> d(0, n - 1);
    while ((int)out.size() < k) {
        int v = d(rng);
        bool dup = std::find(out.begin(), out.end(), v) != out.end();
        for (int i = 0; i < navoid && !dup; ++i) dup = (v == avoid[i]);
        if (!dup) out.push_back(v);
        (void)dup;
    }
    return out;
}

}  // namespace

RandomChainResult random_chain(const RandomChainParams& p) {
    if (p.r < 5) throw std::invalid_argument("random_chain: r must be >= 5");
    if (p.n < p.r) throw std::invalid_argument("random_chain: n must be >= r");
    if (p.target_T < 1) throw std::invalid_argument("random_chain: target_T must be >= 1");
    if (p.attempts_per_step < 1) throw std::invalid_argument("random_chain: attempts must be >= 1");

    std::mt19937_64 rng(p.seed);
    Chain chain;
    chain.r = p.r;
    chain.n = p.n;
    Graph u(p.n);  // union of all clique pairs so far (the G_t of the analysis)

    auto e0v = sample_distinct(rng, p.n, 2, nullptr, 0);
    EdgeId prev = make_edge(e0v[0], e0v[1]);
    chain.shared_edges.push_back(prev);

    long long c3_cap[8] = {0};
    for (int i = 1; i < 8; ++i) c3_cap[i] = (long long)std::floor(std::pow(double(p.n), i - p.eps / 4));
    long long c4_cap = (long long)std::floor(std::pow(double(p.n), 1 - p.eps / 8));

    for (int t = 1; t <= p.target_T; ++t) {
        std::map<std::string, int> fails;
        bool accepted = false;
        for (int a = 0; a < p.attempts_per_step && !accepted; ++a) {
            int avoid_none = 0;
            std::vector<int> x = sample_distinct(rng, p.n, p.r - 2, nullptr, avoid_none);
            std::uniform_int_distribution<int> di(0, p.r - 3), dj(0, p.r - 4);
            int ei = di(rng), ej = dj(rng);
            if (ej >= ei) ++ej;
            EdgeId next = make_edge(x[ei], x[ej]);

            // C0: candidate set disjoint from the previous shared edge
            if (std::find(x.begin(), x.end(), prev.u) != x.end() ||
                std::find(x.begin(), x.end(), prev.v) != x.end()) {
                ++fails["C0"];
                continue;
            }
            std::vector<int> h{prev.u, prev.v};
            h.insert(h.end(), x.begin(), x.end());

            // C1: no new pair already inside an earlier clique; a pair lies
            // inside some H_s exactly when it is an edge of the union graph
            bool bad = false;
            for (size_t i = 0; i < h.size() && !bad; ++i)
                for (size_t j = i + 1; j < h.size() && !bad; ++j) {
                    if ((int)i < 2 && (int)j < 2) continue;  // the pair e_t itself
                    if (u.has_edge(h[i], h[j])) bad = true;
                }
            if (bad) {
                ++fails["C1"];
                continue;
            }

            // C2: no new i-set dangerous at time t
            for (int i = 2; i <= p.r - 1 && !bad; ++i) {
                std::vector<int> idx(i);
                std::function<bool(int, int)> sub = [&](int depth, int from) {
                    if (depth == i) {
                        if (i == 2 && idx[0] == 0 && idx[1] == 1) return false;  // e_t, not new
                        std::vector<int> set;
                        for (int q : idx) set.push_back(h[q]);
                        return classify_set(u, chain, set).verdict != Verdict::safe;
                    }
                    for (int q = from; q <= (int)h.size() - (i - depth); ++q) {
                        idx[depth] = q;
                        if (sub(depth + 1, q + 1)) return true;
                    }
                    return false;
                };
                bad = sub(0, 0);
            }
            if (bad) {
                ++fails["C2"];
                continue;
            }

            if (p.robust) {
                // C3: no j-subset of X in too many dangerous (i+j)-sets
                for (int j = 1; j <= 2 && !bad; ++j) {
                    std::vector<int> idx(j);
                    std::function<bool(int, int)> sub = [&](int depth, int from) {
                        if (depth == j) {
                            std::vector<int> J;
                            for (int q : idx) J.push_back(x[q]);
                            for (int i = 1; i + j < p.r; ++i)
                                if (count_dangerous_supersets(u, chain, J, i + j, c3_cap[i], false) >
                                    c3_cap[i])
                                    return true;
                            return false;
                        }
                        for (int q = from; q <= p.r - 2 - (j - depth); ++q) {
                            idx[depth] = q;
                            if (sub(depth + 1, q + 1)) return true;
                        }
                        return false;
                    };
                    bad = sub(0, 0);
                }
                if (bad) {
                    ++fails["C3"];
                    continue;
                }
                // C4: j-sets with at most one vertex of e_t and at least one
                // of X, in too many deadly (j+1)-sets
                for (int j = 2; j <= 3 && !bad; ++j) {
                    std::vector<int> idx(j);
                    std::function<bool(int, int)> sub = [&](int depth, int from) {
                        if (depth == j) {
                            int in_e = 0, in_x = 0;
                            std::vector<int> J;
                            for (int q : idx) {
                                J.push_back(h[q]);
                                (q < 2 ? in_e : in_x)++;
                            }
                            if (in_e > 1 || in_x < 1) return false;
                            return count_dangerous_supersets(u, chain, J, j + 1, c4_cap, true) > c4_cap;
                        }
                        for (int q = from; q <= (int)h.size() - (j - depth); ++q) {
                            idx[depth] = q;
                            if (sub(depth + 1, q + 1)) return true;
                        }
                        return false;
                    };
                    bad = sub(0, 0);
                }
                if (bad) {
                    ++fails["C4"];
                    continue;
                }
            }

            // accepted
            for (size_t i = 0; i < h.size(); ++i)
                for (size_t j = i + 1; j < h.size(); ++j) u.add_edge(h[i], h[j]);
            chain.cliques.push_back(h);
            chain.shared_edges.push_back(next);
            prev = next;
            accepted = true;
        }
        if (!accepted) {
            RandomChainFailure f;
            f.step = t;
            f.condition_failures = fails;
            int best = -1;
            for (const auto& [cond, cnt] : fails)
                if (cnt > best) {
                    best = cnt;
                    f.condition = cond;
                }
            return RandomChainResult{std::nullopt, std::move(f)};
        }
    }
    return RandomChainResult{build_chain_graph(chain), std::nullopt};
}

}  // namespace kboot

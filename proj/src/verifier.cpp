#include "kboot/verifier.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kboot {

namespace {

std::vector<std::vector<int>> sorted_cliques(const Chain& chain) {
    auto out = chain.cliques;
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

bool is_clique_vertex_set(const std::vector<std::vector<int>>& cliques, const std::vector<int>& b) {
    return std::find(cliques.begin(), cliques.end(), b) != cliques.end();
}

void validate_cliques(const Chain& chain) {
    for (const auto& c : chain.cliques) {
        if ((int)c.size() != chain.r) throw std::invalid_argument("chain: clique of wrong size");
        std::set<int> s(c.begin(), c.end());
        if ((int)s.size() != chain.r) throw std::invalid_argument("chain: repeated vertex in clique");
        for (int v : c)
            if (v < 0 || v >= chain.n) throw std::invalid_argument("chain: vertex out of range");
    }
}

}  // namespace

bool is_valid_chain(const Chain& chain) {
    validate_cliques(chain);
    int T = chain.length();
    if ((int)chain.shared_edges.size() != T + 1) return false;
    if (T == 0) return false;

    std::set<EdgeId> seen;
    for (auto e : chain.shared_edges)
        if (!seen.insert(e).second) return false;

    auto cl = sorted_cliques(chain);
    auto contains = [&](int i, int v) {
        return std::binary_search(cl[i].begin(), cl[i].end(), v);
    };
    auto edge_in = [&](int i, EdgeId e) { return contains(i, e.u) && contains(i, e.v); };

    if (!edge_in(0, chain.shared_edges.front())) return false;
    if (!edge_in(T - 1, chain.shared_edges.back())) return false;
    for (int i = 1; i <= T - 1; ++i)
        if (!edge_in(i - 1, chain.shared_edges[i]) || !edge_in(i, chain.shared_edges[i]))
            return false;

    std::vector<int> inter;
    for (int i = 0; i < T; ++i)
        for (int j = i + 1; j < T; ++j) {
            inter.clear();
            std::set_intersection(cl[i].begin(), cl[i].end(), cl[j].begin(), cl[j].end(),
                                  std::back_inserter(inter));
            if (j == i + 1) {
                EdgeId e = chain.shared_edges[j];  // e_i, shared by H_i and H_{i+1}
                if (inter.size() != 2 || inter[0] != e.u || inter[1] != e.v) return false;
            } else if (inter.size() > 1) {
                return false;
            }
        }
    return true;
}

namespace {

// Enumerates (in lexicographic order) vertex sets of size k, restricted to
// `global`, with at most max_missing non-edges in g. fn(Q, missing) returns
// true to stop the enumeration.
bool for_each_near_clique(const Graph& g, int k, int max_missing, std::span<const Word> global,
                          const std::function<bool(const std::vector<int>&, int)>& fn) {
    int W = g.words();
    std::vector<int> partial;
    partial.reserve(k);

    // miss0: adjacent to every partial member; miss1: missing exactly one.
    std::function<bool(const std::vector<Word>&, const std::vector<Word>&, int)> rec =
        [&](const std::vector<Word>& miss0, const std::vector<Word>& miss1, int budget) -> bool {
        if ((int)partial.size() == k) return fn(partial, max_missing - budget);
        int need = k - (int)partial.size();
        int last = partial.empty() ? -1 : partial.back();
        std::vector<Word> cand(W);
        for (int i = 0; i < W; ++i) {
            cand[i] = miss0[i];
            if (budget > 0) cand[i] |= miss1[i];
        }
        // ascending picks only
        for (int i = 0; i <= last / kWordBits && i < W; ++i) {
            if (i < last / kWordBits)
                cand[i] = 0;
            else if (last >= 0)
                cand[i] &= ~Word(0) << (last % kWordBits) << 1;
        }
        bool stop = false;
        for_each_bit(cand, [&](int v) {
            if (stop) return;
            int nb = budget - (test_bit(miss1, v) ? 1 : 0);
            auto rv = g.row(v);
            std::vector<Word> m0(W), m1(W);
            int c0 = 0, c1 = 0;
            for (int i = 0; i < W; ++i) {
                m0[i] = miss0[i] & rv[i];
                m1[i] = (miss1[i] & rv[i]) | (miss0[i] & ~rv[i] & global[i]);
            }
            clear_bit(m0, v);
            clear_bit(m1, v);
            // only vertices beyond v remain usable
            for (int i = 0; i < W; ++i) {
                Word hi = ~Word(0);
                if (i < v / kWordBits)
                    hi = 0;
                else if (i == v / kWordBits)
                    hi = (~Word(0) << (v % kWordBits)) << 1;
                c0 += std::popcount(m0[i] & hi);
                c1 += std::popcount(m1[i] & hi);
            }
            if (c0 + ((nb > 0 && c1 > 0) ? nb : 0) < need - 1) return;
            partial.push_back(v);
            if (rec(m0, m1, nb)) stop = true;
            partial.pop_back();
        });
        return stop;
    };

    std::vector<Word> miss0(global.begin(), global.end()), miss1(W, 0);
    return rec(miss0, miss1, max_missing);
}

}  // namespace

std::optional<std::vector<int>> find_external_krm(const Chain& chain) {
    validate_cliques(chain);
    Graph u = chain_union_graph(chain);
    int r = chain.r;
    auto cl = sorted_cliques(chain);
    // every vertex of an external K_r^- has degree >= r-2 within it
    std::vector<Word> global(u.words(), 0);
    for (int v = 0; v < u.order(); ++v)
        if (u.degree(v) >= r - 2) set_bit(global, v);

    std::optional<std::vector<int>> found;
    for_each_near_clique(u, r, 1, global, [&](const std::vector<int>& b, int missing) {
        (void)missing;
        if (is_clique_vertex_set(cl, b)) return false;
        found = b;
        return true;
    });
    return found;
}

std::optional<std::vector<int>> find_external_krm_brute(const Chain& chain) {
    validate_cliques(chain);
    Graph u = chain_union_graph(chain);
    int n = chain.n, r = chain.r;
    auto cl = sorted_cliques(chain);
    long long want = (long long)r * (r - 1) / 2 - 1;
    std::vector<int> b(r);
    std::function<std::optional<std::vector<int>>(int, int)> rec =
        [&](int depth, int from) -> std::optional<std::vector<int>> {
        if (depth == r) {
            long long edges = 0;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                    if (u.has_edge(b[i], b[j])) ++edges;
            if (edges >= want && !is_clique_vertex_set(cl, b)) return b;
            return std::nullopt;
        }
        for (int v = from; v < n - (r - depth - 1); ++v) {
            b[depth] = v;
            if (auto res = rec(depth + 1, v + 1)) return res;
        }
        return std::nullopt;
    };
    return rec(0, 0);
}

namespace {

DangerReport classify_core(const Graph& g, const Chain& chain, std::span<const int> A, bool pruned) {
    int r = chain.r, a = (int)A.size(), n = g.order();
    if (a < 2 || a > r - 1) throw std::invalid_argument("classify_set: need 2 <= |A| <= r-1");
    std::set<int> as(A.begin(), A.end());
    if ((int)as.size() != a) throw std::invalid_argument("classify_set: repeated vertex");
    for (int v : A)
        if (v < 0 || v >= n) throw std::invalid_argument("classify_set: vertex out of range");

    auto cl = sorted_cliques(chain);
    DangerReport rep;
    rep.subject.assign(A.begin(), A.end());
    rep.time_label = chain.length();

    // candidate pool for B \ A
    std::vector<int> pool;
    for (int x = 0; x < n; ++x) {
        if (as.count(x)) continue;
        if (pruned) {
            int cnt = 0;
            for (int v : A)
                if (g.has_edge(x, v)) ++cnt;
            if (cnt < a - 1) continue;
        }
        pool.push_back(x);
    }

    int k = r - a;
    std::vector<int> s(k);
    std::vector<int> b;
    bool done = false;
    std::function<void(int, int)> rec = [&](int depth, int from) {
        if (done) return;
        if (depth == k) {
            b.assign(A.begin(), A.end());
            b.insert(b.end(), s.begin(), s.end());
            std::sort(b.begin(), b.end());
            if (is_clique_vertex_set(cl, b)) return;
            int missing = 0;
            for (int i = 0; i < r && missing <= 1; ++i)
                for (int j = i + 1; j < r; ++j) {
                    if (as.count(b[i]) && as.count(b[j])) continue;  // free via K_A
                    if (!g.has_edge(b[i], b[j]) && ++missing > 1) break;
                }
            if (missing == 0) {
                rep.verdict = Verdict::deadly;
                rep.witness = b;
                done = true;
            } else if (missing == 1 && rep.verdict == Verdict::safe) {
                rep.verdict = Verdict::dangerous;
                rep.witness = b;
            }
            return;
        }
        for (int i = from; i <= (int)pool.size() - (k - depth); ++i) {
            s[depth] = pool[i];
            rec(depth + 1, i + 1);
            if (done) return;
        }
    };
    rec(0, 0);
    return rep;
}

}  // namespace

DangerReport classify_set(const Graph& g, const Chain& chain, std::span<const int> A) {
    return classify_core(g, chain, A, true);
}

DangerReport classify_set_brute(const Graph& g, const Chain& chain, std::span<const int> A) {
    return classify_core(g, chain, A, false);
}

CoverIndex::CoverIndex(const Chain& system)
    : n_(system.n), words_(words_for(std::max(system.length(), 1))),
      member_(size_t(system.n) * words_, 0) {
    for (int i = 0; i < system.length(); ++i)
        for (int v : system.cliques[i])
            set_bit({member_.data() + size_t(v) * words_, size_t(words_)}, i);
}

CoverStatus CoverIndex::status(int u, int v, int w) const {
    if (u < 0 || v < 0 || w < 0 || u >= n_ || v >= n_ || w >= n_ || u == v || u == w || v == w)
        throw std::invalid_argument("covers_simply: bad triple");
    const Word* mu = member_.data() + size_t(u) * words_;
    const Word* mv = member_.data() + size_t(v) * words_;
    const Word* mw = member_.data() + size_t(w) * words_;
    bool uv = false, uw = false, vw = false, all3 = false;
    for (int i = 0; i < words_; ++i) {
        uv |= (mu[i] & mv[i]) != 0;
        uw |= (mu[i] & mw[i]) != 0;
        vw |= (mv[i] & mw[i]) != 0;
        all3 |= (mu[i] & mv[i] & mw[i]) != 0;
    }
    if (all3) return CoverStatus::simply_covered;
    if (uv && uw && vw) return CoverStatus::violation;
    return CoverStatus::not_covered;
}

CoverStatus covers_simply(const Chain& system, int u, int v, int w) {
    return CoverIndex(system).status(u, v, w);
}

long long count_triangle_violations(const Chain& system) {
    CoverIndex idx(system);
    Graph cover(system.n);
    for (const auto& c : system.cliques)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j) cover.add_edge(c[i], c[j]);
    long long bad = 0;
    for (int u = 0; u < system.n; ++u) {
        for_each_bit(cover.row(u), [&](int v) {
            if (v <= u) return;
            auto cn = cover.common_neighbors(u, v);
            for_each_bit(cn, [&](int w) {
                if (w > v && idx.status(u, v, w) == CoverStatus::violation) ++bad;
            });
        });
    }
    return bad;
}

long long count_triangle_violations_brute(const Chain& system) {
    CoverIndex idx(system);
    long long bad = 0;
    int n = system.n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad)
#endif
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (idx.status(u, v, w) == CoverStatus::violation) ++bad;
    return bad;
}

long long count_dangerous_supersets(const Graph& g, const Chain& chain, std::span<const int> J,
                                    int set_size, long long cap, bool deadly_only) {
    int r = chain.r, n = g.order();
    int j = (int)J.size(), k = r - set_size, s_needed = set_size - j;
    if (set_size < 2 || set_size > r - 1) throw std::invalid_argument("count: bad set size");
    if (s_needed < 0) throw std::invalid_argument("count: |J| exceeds set size");
    std::set<int> js(J.begin(), J.end());
    auto cl = sorted_cliques(chain);
    int budget_max = deadly_only ? 0 : 1;

    std::set<std::vector<int>> found;
    std::vector<Word> global(g.words(), ~Word(0));
    for (int i = n; i < g.words() * kWordBits; ++i) clear_bit(global, i);

    bool over = false;
    for_each_near_clique(g, k, budget_max, global, [&](const std::vector<int>& q, int miss_q) {
        for (int v : q)
            if (js.count(v)) return false;
        int miss = miss_q;
        for (int u : J)
            for (int v : q)
                if (!g.has_edge(u, v) && ++miss > budget_max) return false;

        // extras pool, split by number of missing edges to Q
        std::vector<int> p0, p1;
        for (int x = 0; x < n; ++x) {
            if (js.count(x) || std::find(q.begin(), q.end(), x) != q.end()) continue;
            int m = 0;
            for (int v : q)
                if (!g.has_edge(x, v)) ++m;
            if (m == 0)
                p0.push_back(x);
            else if (m == 1 && miss + 1 <= budget_max)
                p1.push_back(x);
        }

        std::vector<int> s;
        std::function<bool(int, int, bool)> pick = [&](int from, int left, bool used_p1) -> bool {
            if (left == 0) {
                std::vector<int> b(J.begin(), J.end());
                b.insert(b.end(), s.begin(), s.end());
                b.insert(b.end(), q.begin(), q.end());
                std::sort(b.begin(), b.end());
                if (is_clique_vertex_set(cl, b)) return false;
                std::vector<int> a(J.begin(), J.end());
                a.insert(a.end(), s.begin(), s.end());
                std::sort(a.begin(), a.end());
                found.insert(std::move(a));
                return (long long)found.size() > cap;
            }
            for (int i = from; i < (int)p0.size(); ++i) {
                s.push_back(p0[i]);
                if (pick(i + 1, left - 1, used_p1)) return true;
                s.pop_back();
            }
            if (!used_p1 && left == 1) {  // the single p1 element always goes last
                for (int x : p1) {
                    s.push_back(x);
                    if (pick((int)p0.size(), 0, true)) return true;
                    s.pop_back();
                }
            }
            return false;
        };
        if (pick(0, s_needed, false)) {
            over = true;
            return true;
        }
        return false;
    });
    return over ? cap + 1 : (long long)found.size();
}

}  // namespace kboot

#include "kboot/percolation.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kboot {

namespace {

// Does adding uv complete a new K_r, i.e. does the common neighborhood of
// u and v contain a K_{r-2}? Buffer avoids per-call allocation.
bool infects(const Graph& g, int r, int u, int v, std::vector<Word>& buf) {
    auto ru = g.row(u), rv = g.row(v);
    int W = g.words();
    if (r == 3) {
        for (int i = 0; i < W; ++i)
            if (ru[i] & rv[i]) return true;
        return false;
    }
    int cnt = 0;
    for (int i = 0; i < W; ++i) {
        buf[i] = ru[i] & rv[i];
        cnt += std::popcount(buf[i]);
    }
    if (cnt < r - 2) return false;
    if (r == 4) {
        // any edge inside the common neighborhood
        bool found = false;
        for_each_bit(std::span<const Word>(buf.data(), W), [&](int w) {
            if (found) return;
            auto rw = g.row(w);
            for (int i = 0; i < W; ++i)
                if (buf[i] & rw[i]) {
                    found = true;
                    return;
                }
        });
        return found;
    }
    return has_clique(g, std::span<const Word>(buf.data(), W), r - 2);
}

std::vector<EdgeId> scan_all_pairs(const Graph& g, int r) {
    int n = g.order();
    std::vector<EdgeId> out;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<EdgeId> local;
        std::vector<Word> buf(g.words());
#pragma omp for schedule(dynamic, 8) nowait
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!test_bit(g.row(u), v) && infects(g, r, u, v, buf)) local.push_back({u, v});
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
#else
    std::vector<Word> buf(g.words());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!test_bit(g.row(u), v) && infects(g, r, u, v, buf)) out.push_back({u, v});
#endif
    std::sort(out.begin(), out.end());
    return out;
}

void check_r_n(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("K_r process needs r >= 3");
    if (g.order() < 2) throw std::invalid_argument("K_r process needs n >= 2");
}

// Candidate tracker: a non-edge uv can become infected at step t+1 only if
// some edge added at step t lies inside its witness K_r. Either that edge
// touches u or v (then both u,v are neighbours of its other endpoint), or
// both its endpoints are common neighbours of u and v (then again u,v are
// neighbours of each endpoint). So it suffices to examine non-edge pairs
// contained in N(w) for w an endpoint of a step-t edge.
class CandidateSet {
public:
    CandidateSet(int n, int words) : n_(n), W_(words), bits_(size_t(n) * words, 0) {}

    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

    // Mark all non-edge pairs inside N(w), for the current graph g.
    void mark_neighborhood(const Graph& g, int w) {
        auto rw = g.row(w);
        for_each_bit(rw, [&](int u) {
            auto ru = g.row(u);
            Word* cu = bits_.data() + size_t(u) * W_;
            int w0 = u / kWordBits;
            // v > u only
            Word head = ~Word(0) << (u % kWordBits + 1);
            if (u % kWordBits == kWordBits - 1) head = 0;
            cu[w0] |= rw[w0] & ~ru[w0] & head;
            for (int i = w0 + 1; i < W_; ++i) cu[i] |= rw[i] & ~ru[i];
        });
    }

    std::vector<EdgeId> evaluate(const Graph& g, int r) const {
        std::vector<EdgeId> out;
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<EdgeId> local;
            std::vector<Word> buf(W_);
#pragma omp for schedule(dynamic, 8) nowait
            for (int u = 0; u < n_; ++u) {
                std::span<const Word> cu(bits_.data() + size_t(u) * W_, size_t(W_));
                for_each_bit(cu, [&](int v) {
                    if (infects(g, r, u, v, buf)) local.push_back({u, v});
                });
            }
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
#else
        std::vector<Word> buf(W_);
        for (int u = 0; u < n_; ++u) {
            std::span<const Word> cu(bits_.data() + size_t(u) * W_, size_t(W_));
            for_each_bit(cu, [&](int v) {
                if (infects(g, r, u, v, buf)) out.push_back({u, v});
            });
        }
#endif
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int n_, W_;
    std::vector<Word> bits_;
};

}  // namespace

std::vector<EdgeId> step(const Graph& g, int r) {
    check_r_n(g, r);
    return scan_all_pairs(g, r);
}

std::vector<EdgeId> step_serial(const Graph& g, int r) {
    check_r_n(g, r);
    int n = g.order();
    std::vector<EdgeId> out;
    std::vector<Word> buf(g.words());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && infects(g, r, u, v, buf)) out.push_back({u, v});
    return out;
}

RunOutput run(const Graph& g0, int r, const RunOptions& opts) {
    check_r_n(g0, r);
    int n = g0.order();
    long long max_steps = opts.max_steps.value_or((long long)n * (n - 1) / 2);

    RunOutput out{RunResult{}, Trace{}, g0};
    Graph& g = out.final_graph;

    std::vector<EdgeId> pending = scan_all_pairs(g, r);
    CandidateSet cand(n, g.words());
    std::vector<Word> active(words_for(n));
    int t = 0;
    while (!pending.empty()) {
        if (t >= max_steps) {
            out.result.truncated = true;
            break;
        }
        ++t;
        std::fill(active.begin(), active.end(), 0);
        for (auto e : pending) {
            g.add_edge(e.u, e.v);
            set_bit(active, e.u);
            set_bit(active, e.v);
        }
        if (opts.record_trace) {
            for (auto e : pending) out.trace.infection_time.emplace(e, t);
            out.trace.steps.push_back(std::move(pending));
            if (opts.observer) opts.observer(t, out.trace.steps.back(), g);
        } else if (opts.observer) {
            opts.observer(t, pending, g);
        }
        cand.clear();
        for_each_bit(active, [&](int w) { cand.mark_neighborhood(g, w); });
        pending = cand.evaluate(g, r);
    }
    out.result.stabilization_time = t;
    out.result.final_edges = g.edge_count();
    out.result.percolated = g.complete();
    return out;
}

namespace {

// Is e inside a clique of the given size in h?
bool edge_in_clique(const Graph& h, EdgeId e, int size) {
    if (size <= 2) return true;
    if (!h.has_edge(e.u, e.v)) return false;
    auto cn = h.common_neighbors(e.u, e.v);
    return has_clique(h, cn, size - 2);
}

}  // namespace

bool verify_clique_growth(const Graph& g0, const Trace& trace) {
    Graph g = g0;
    std::vector<EdgeId> retry;  // d=0 failures from the previous step
    int retry_t = 0;
    for (int t = 1; t <= (int)trace.steps.size(); ++t) {
        for (auto e : trace.steps[t - 1]) {
            if (g.has_edge(e.u, e.v))
                throw std::invalid_argument("trace/snapshot mismatch: edge already present");
            g.add_edge(e.u, e.v);
        }
        // g is now G_t; pending edges from step t-1 get their d=1 chance here
        for (auto e : retry)
            if (!edge_in_clique(g, e, retry_t + 4)) return false;
        retry.clear();
        retry_t = t;
        for (auto e : trace.steps[t - 1])
            if (!edge_in_clique(g, e, t + 3)) retry.push_back(e);
    }
    // the process has stabilized, so G_{T+1} = G_T
    for (auto e : retry)
        if (!edge_in_clique(g, e, retry_t + 4)) return false;
    return true;
}

namespace {

// Bitset BFS; returns eccentricity, or -1 if some vertex is unreachable.
int bfs_ecc(const Graph& g, int src, std::vector<int>& dist) {
    int n = g.order(), W = g.words();
    std::vector<Word> visited(W, 0), frontier(W, 0), next(W, 0);
    dist.assign(n, -1);
    set_bit(visited, src);
    set_bit(frontier, src);
    dist[src] = 0;
    int d = 0, seen = 1;
    while (true) {
        std::fill(next.begin(), next.end(), 0);
        for_each_bit(frontier, [&](int v) {
            auto rv = g.row(v);
            for (int i = 0; i < W; ++i) next[i] |= rv[i];
        });
        for (int i = 0; i < W; ++i) next[i] &= ~visited[i];
        if (!any_bit(next)) break;
        ++d;
        for (int i = 0; i < W; ++i) visited[i] |= next[i];
        for_each_bit(next, [&](int v) {
            dist[v] = d;
            ++seen;
        });
        std::swap(frontier, next);
    }
    return seen == n ? d : -1;
}

}  // namespace

std::optional<int> diameter(const Graph& g) {
    int n = g.order();
    if (n == 1) return 0;
    std::vector<int> dist;
    int ecc0 = bfs_ecc(g, 0, dist);
    if (ecc0 < 0) return std::nullopt;
    int lbD = ecc0;
    std::vector<int> lb(n), ub(n);
    std::vector<char> cand(n, 1);
    cand[0] = 0;
    for (int v = 1; v < n; ++v) {
        lb[v] = std::max(dist[v], ecc0 - dist[v]);
        ub[v] = ecc0 + dist[v];
    }
    bool pick_hi = true;
    while (true) {
        int v = -1, best = 0;
        for (int w = 0; w < n; ++w) {
            if (!cand[w]) continue;
            if (lb[w] == ub[w]) {  // eccentricity known
                lbD = std::max(lbD, lb[w]);
                cand[w] = 0;
                continue;
            }
            if (ub[w] <= lbD) {  // cannot raise the diameter bound
                cand[w] = 0;
                continue;
            }
            if (v < 0 || (pick_hi ? ub[w] > best : lb[w] < best)) {
                v = w;
                best = pick_hi ? ub[w] : lb[w];
            }
        }
        if (v < 0) return lbD;
        pick_hi = !pick_hi;
        int ecc = bfs_ecc(g, v, dist);
        assert(ecc >= 0);
        lbD = std::max(lbD, ecc);
        cand[v] = 0;
        for (int w = 0; w < n; ++w) {
            if (!cand[w]) continue;
            lb[w] = std::max({lb[w], dist[w], ecc - dist[w]});
            ub[w] = std::min(ub[w], ecc + dist[w]);
        }
    }
}

}  // namespace kboot

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "kboot/graph.hpp"

namespace kboot {

struct RunResult {
    int stabilization_time = 0;  // smallest t with G_t = G_{t+1}
    long long final_edges = 0;
    bool percolated = false;
    bool truncated = false;  // max_steps hit before stabilization
};

// Process history: steps[t-1] holds the edges added at step t (sorted).
struct Trace {
    std::vector<std::vector<EdgeId>> steps;
    std::map<EdgeId, int> infection_time;
};

struct RunOutput {
    RunResult result;
    Trace trace;
    Graph final_graph;
};

struct RunOptions {
    std::optional<long long> max_steps;  // default n(n-1)/2
    bool record_trace = true;
    // Called after each step with (t, edges added at t, graph G_t).
    std::function<void(int, const std::vector<EdgeId>&, const Graph&)> observer;
};

// One synchronous K_r update: the non-edges uv whose common neighborhood
// contains a K_{r-2}. Sorted by EdgeId; does not mutate g.
std::vector<EdgeId> step(const Graph& g, int r);

// Plain serial scan of all non-edges; reference for the parallel kernel.
std::vector<EdgeId> step_serial(const Graph& g, int r);

RunOutput run(const Graph& g, int r, const RunOptions& opts = {});

// Checks that every edge with t(e) = t >= 1 lies in a clique of size
// t+3+d within G_{t+d} for some d in {0,1}. Meaningful for r = 4 runs.
// Snapshots are replayed from g0 + trace.
bool verify_clique_growth(const Graph& g0, const Trace& trace);

// Exact diameter; nullopt when disconnected. Eccentricity-bounding BFS.
std::optional<int> diameter(const Graph& g);

}  // namespace kboot

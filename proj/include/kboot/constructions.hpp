#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "kboot/chain.hpp"

namespace kboot {

// The greedy step could not proceed even once (degree cap or exclusions).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Path 0-1-...-(n-1). Under r=3 it stabilizes in ceil(log2(n-1)) steps.
Graph path_graph(int n);

// Inductive construction: K_4^- on {0,1,2,3}, then each new vertex is
// joined to both endpoints of an edge added at the final step of the
// current process. Stabilizes at exactly n-3 under r=4 and percolates.
Graph k4_chain(int n);

// Chain of t vertex-disjoint K_rs, consecutive ones sharing one edge;
// uses n = 2 + t(r-2) vertices. Stabilizes at exactly t.
ChainGraph disjoint_chain(int r, int t);

// Greedy set-system construction: each new r-set extends the previous
// shared edge with r-2 vertices chosen outside all second neighborhoods,
// minimum degree first (smallest label on ties), subject to the per-vertex
// degree cap coeff*sqrt(n). The result is checked against the full set of
// structural conditions (consecutive overlap, distant overlap <= 1, no
// external triangles, degree cap) before returning.
ChainGraph greedy_chain(int n, int r, double degree_cap_coeff);

struct RandomChainParams {
    int n = 0;
    int r = 5;
    int target_T = 1;
    int attempts_per_step = 1;  // the m of the construction
    std::uint64_t seed = 0;
    bool robust = false;  // also enforce the dangerous/deadly count caps
    double eps = 0.5;
};

struct RandomChainFailure {
    int step = 0;               // 1-based step that exhausted its attempts
    std::string condition;      // condition that failed most often there
    std::map<std::string, int> condition_failures;
};

struct RandomChainResult {
    std::optional<ChainGraph> chain_graph;
    std::optional<RandomChainFailure> failure;
    bool ok() const { return chain_graph.has_value(); }
};

// Randomized good-chain construction: per step, up to attempts_per_step
// uniform (r-2)-sets each with a uniform inner edge; the first candidate
// passing C0 (disjoint from the previous shared edge), C1 (no new pair
// inside an earlier clique) and C2 (no new subset dangerous) is accepted;
// robust mode additionally enforces the C3/C4 count thresholds.
// Deterministic for a fixed seed.
RandomChainResult random_chain(const RandomChainParams& params);

}  // namespace kboot

#pragma once

#include <cstdint>
#include <vector>

#include "kboot/graph.hpp"

namespace kboot {

struct SearchResult {
    int n = 0, r = 0;
    int max_time = 0;
    std::vector<std::uint64_t> witness_graphs;  // canonical forms, sorted
    long long graphs_scanned = 0;
    long long dedup_classes = 0;  // 0 when dedup off
    bool exhaustive = true;
};

// Maximum stabilization time over all graphs on n vertices, by full
// enumeration of the 2^C(n,2) upper-triangle masks. With dedup on, each
// isomorphism class is processed once (seen-set over raw masks). n <= 7.
SearchResult exact_max_time(int n, int r, bool dedup);

// Heuristic lower bound: the known constructions that fit n, plus random
// graphs at several densities. Never exhaustive.
SearchResult sampled_max_time(int n, int r, long long samples, std::uint64_t seed);

}  // namespace kboot

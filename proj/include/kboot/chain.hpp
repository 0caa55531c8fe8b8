#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "kboot/graph.hpp"

namespace kboot {

// A sequence of r-cliques H_1..H_T with shared edges e_0..e_T.
// shared_edges[i] is e_i: e_0 is an extra edge of H_1, e_i (1 <= i <= T-1)
// is the edge shared by H_i and H_{i+1}, e_T an extra edge of H_T.
struct Chain {
    int r = 0;
    int n = 0;
    std::vector<std::vector<int>> cliques;
    std::vector<EdgeId> shared_edges;

    int length() const { return (int)cliques.size(); }
};

// The initial infected set built from a chain: the union of the cliques
// with e_1..e_T withheld (e_0 stays).
struct ChainGraph {
    Graph graph;
    Chain chain;
    std::vector<EdgeId> withheld;
};

// Union of all clique edges minus e_1..e_T.
ChainGraph build_chain_graph(const Chain& chain);

// Union of all clique edges, nothing withheld (the G_t of the chain papers'
// bookkeeping; used by dangerous/deadly classification).
Graph chain_union_graph(const Chain& chain);

// JSON: { r, n, cliques: [[v...]...], shared_edges: [[u,v]...] }
void save_chain_json(const Chain& chain, std::ostream& out);
Chain load_chain_json(std::istream& in);

// the JSON object behind save_chain_json, for callers that add fields
nlohmann::ordered_json chain_json(const Chain& chain);

}  // namespace kboot

#pragma once

#include <optional>
#include <span>

#include "kboot/chain.hpp"

namespace kboot {

// Chain definition check: cliques have r distinct vertices, consecutive
// cliques share exactly the two vertices of e_i, non-consecutive ones at
// most one vertex, and the e_i are distinct edges of their cliques.
bool is_valid_chain(const Chain& chain);

// First (lexicographically smallest) r-set B, not the vertex set of any
// clique, spanning >= C(r,2)-1 edges of the clique union. nullopt means
// the chain is good.
std::optional<std::vector<int>> find_external_krm(const Chain& chain);

// Same verdict by scanning every r-subset; the test oracle for small n.
std::optional<std::vector<int>> find_external_krm_brute(const Chain& chain);

enum class Verdict { safe, dangerous, deadly };

struct DangerReport {
    std::vector<int> subject;
    int time_label = 0;  // chain length the verdict was computed against
    Verdict verdict = Verdict::safe;
    std::optional<std::vector<int>> witness;
};

// Classifies A against g (normally the chain's union graph): deadly if some
// r-set B, A subset of B, B != V(H_s), is complete in g + K_A; dangerous if
// some such B misses exactly one edge; safe otherwise. The search extends A
// only with vertices having >= |A|-1 neighbours in A, which is exhaustive
// (every vertex of B\A reaches A through real edges, one miss allowed).
DangerReport classify_set(const Graph& g, const Chain& chain, std::span<const int> A);

// Brute-force fallback over all extensions; oracle for classify_set.
DangerReport classify_set_brute(const Graph& g, const Chain& chain, std::span<const int> A);

enum class CoverStatus { not_covered, simply_covered, violation };

// Per-vertex membership bitsets over the sets of the system; answers the
// covered / simply covered question for triples in O(T/64).
class CoverIndex {
public:
    explicit CoverIndex(const Chain& system);
    CoverStatus status(int u, int v, int w) const;

private:
    int n_, words_;
    std::vector<Word> member_;  // n rows of set-membership bits
    friend long long count_triangle_violations_brute(const Chain&);
};

CoverStatus covers_simply(const Chain& system, int u, int v, int w);

// External triangles of the set system: triangles of the covered-pair graph
// that no single set contains. The plain variant scans all n^3 triples.
long long count_triangle_violations(const Chain& system);
long long count_triangle_violations_brute(const Chain& system);

// Number of distinct sets of the given size containing J that are dangerous
// (or deadly when deadly_only) against g, counted up to cap (result cap+1
// means "more than cap"). Backs the random-chain robust-mode thresholds.
long long count_dangerous_supersets(const Graph& g, const Chain& chain, std::span<const int> J,
                                    int set_size, long long cap, bool deadly_only);

}  // namespace kboot

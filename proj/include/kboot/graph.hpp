#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "kboot/bitops.hpp"

namespace kboot {

// Raised when an operation exceeds a hard size cap (e.g. canonical forms
// beyond n = 8), as opposed to a malformed input.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected edge with u < v.
struct EdgeId {
    int u = 0, v = 0;
    auto operator<=>(const EdgeId&) const = default;
};

inline EdgeId make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

// Simple undirected graph on vertices 0..n-1, dense adjacency bitrows.
// The vertex count is fixed at construction; only edges change.
class Graph {
public:
    explicit Graph(int n) : n_(n), words_(words_for(n)), bits_(size_t(n) * words_, 0) {
        if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
    }

    int order() const { return n_; }
    int words() const { return words_; }
    long long edge_count() const { return edges_; }

    std::span<const Word> row(int u) const {
        return {bits_.data() + size_t(u) * words_, size_t(words_)};
    }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return test_bit(row(u), v);
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        if (test_bit(row(u), v)) return;
        set_bit(mut_row(u), v);
        set_bit(mut_row(v), u);
        ++edges_;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        if (!test_bit(row(u), v)) return;
        clear_bit(mut_row(u), v);
        clear_bit(mut_row(v), u);
        --edges_;
    }

    int degree(int u) const { return popcount(row(u)); }

    bool complete() const { return edges_ == (long long)n_ * (n_ - 1) / 2; }

    // N(u) & N(v) with bits u, v cleared.
    std::vector<Word> common_neighbors(int u, int v) const {
        check_pair(u, v);
        std::vector<Word> out(words_);
        auto ru = row(u), rv = row(v);
        for (int i = 0; i < words_; ++i) out[i] = ru[i] & rv[i];
        clear_bit(out, u);
        clear_bit(out, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    std::span<Word> mut_row(int u) {
        return {bits_.data() + size_t(u) * words_, size_t(words_)};
    }
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("vertex out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
    }

    int n_;
    int words_;
    long long edges_ = 0;
    std::vector<Word> bits_;
};

// True iff the subgraph induced on `mask` contains K_k.
// k = 0 is vacuously true, k = 1 asks for a nonempty mask.
bool has_clique(const Graph& g, std::span<const Word> mask, int k);

// Lexicographically minimal upper-triangle adjacency bitstring over all
// vertex relabelings. Requires n <= 8.
std::uint64_t canonical_form(const Graph& g);

// g relabeled so that vertex i of the result is perm[i] of g.
Graph relabel(const Graph& g, std::span<const int> perm);

// Upper-triangle encoding used by canonical_form and the exhaustive search:
// bit of pair (i,j), i < j, is i*n - i*(i+1)/2 + (j-i-1).
std::uint64_t upper_triangle_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

std::vector<EdgeId> edges_of(const Graph& g);

// Edge-list text format: first line "n <count>", then one "u v" per line,
// 0-indexed, u < v. Duplicates and out-of-range entries are load errors.
Graph load_edge_list(std::istream& in);
void save_edge_list(const Graph& g, std::ostream& out);

}  // namespace kboot

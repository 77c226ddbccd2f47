#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fillin/bits.hpp"

namespace fillin {

// Canonical vertex set: strictly increasing list of vertex ids. Used as a
// lookup key everywhere, so keep it sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Unordered vertex pair, stored normalized with u < v.
struct EdgePair {
    int u;
    int v;

    EdgePair(int a, int b) : u(a < b ? a : b), v(a < b ? b : a)
    {
        if (a == b)
            throw std::invalid_argument("EdgePair: self-loop");
    }

    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; edits produce new graphs.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, const std::vector<EdgePair>& edges = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const
    {
        return u != v && rows_[u].test(v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Packed adjacency row of v (no self bit).
    const Bits& row(int v) const { return rows_[v]; }

    std::vector<EdgePair> edges() const;

    Graph with_edges(const std::vector<EdgePair>& extra) const;

    // Induced subgraph on `keep` (sorted). Returns the subgraph with vertices
    // renumbered 0..|keep|-1 plus the map new id -> old id.
    std::pair<Graph, std::vector<int>> induced(const VertexSet& keep) const;

    // Optional external names, used only at the I/O boundary.
    const std::vector<long long>& labels() const { return labels_; }
    void set_labels(std::vector<long long> labels) { labels_ = std::move(labels); }
    long long label_of(int v) const
    {
        return labels_.empty() ? v : labels_[v];
    }

    // Order-independent hash of (n, edge set); used to tie catalogs and DP
    // tables to the graph they were built from.
    std::uint64_t fingerprint() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bits> rows_;
    std::vector<long long> labels_;
};

// --- vertex set helpers ------------------------------------------------

bool vs_contains(const VertexSet& s, int v);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersection(const VertexSet& a, const VertexSet& b);
VertexSet vs_difference(const VertexSet& a, const VertexSet& b);
VertexSet vs_from_bits(const Bits& b);
Bits bits_from_vs(int n, const VertexSet& s);

// --- core operations ----------------------------------------------------

// Connected components of G[V \ removed], sorted by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

// N(W): neighbors of W outside W.
VertexSet neighborhood(const Graph& g, const VertexSet& w);

// Number of non-edges inside w.
int fill_count(const Graph& g, const VertexSet& w);

// Copy of g with w completed into a clique.
Graph complete_set(const Graph& g, const VertexSet& w);

bool is_clique(const Graph& g, const VertexSet& w);

} // namespace fillin

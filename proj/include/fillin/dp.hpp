#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fillin/branch.hpp"
#include "fillin/graph.hpp"
#include "fillin/pmc.hpp"

namespace fillin {

// DP subproblem: minimal separator s with full component c (N(c) = s).
struct Block {
    VertexSet s;
    VertexSet c;

    friend auto operator<=>(const Block&, const Block&) = default;
};

struct DpEntry {
    int value = 0;                   // in 0..k+1; k+1 means "> k"
    std::optional<VertexSet> choice; // argmin omega, present iff value <= k
};

struct DpTable {
    std::map<Block, DpEntry> memo;
    std::optional<DpEntry> root;
};

struct FillSolution {
    std::vector<EdgePair> fill; // sorted, disjoint from the base edge set

    int size() const { return static_cast<int>(fill.size()); }
};

// Value of one block: min over catalog entries omega with s < omega <= s u c
// of the fill charged at omega (separator-internal pairs excluded) plus the
// child block values. Saturates at k+1.
int mfi_block(const Graph& g, const Block& b, const PmcCatalog& catalog,
              DpTable& table, int k);

// Minimum fill-in of connected g via the catalog; exact when mfi(g) <= k and
// the catalog holds all vital PMCs, else k+1.
int mfi_root(const Graph& g, const PmcCatalog& catalog, int k, DpTable& table);

// Argmin walk; requires a prior mfi_root call on the same table.
std::optional<FillSolution> reconstruct(const Graph& g, const PmcCatalog& catalog,
                                        DpTable& table, int k);

// Best-effort pipeline counters for reporting.
struct PipelineStats {
    long long kernel_vertices = 0;
    long long branch_leaves = 0;
    long long catalog_entries = 0;
};

// Full pipeline: kernelize, branch to non-reducible instances, enumerate
// vital PMCs per leaf, run the DP, lift the best solution back. Returns the
// minimum fill when mfi(g) <= k, nothing otherwise.
std::optional<FillSolution> solve(const Graph& g, int k, PipelineStats* stats = nullptr);

// Greedy lower bound from vertex-disjoint chordless cycles (each cycle of
// length l needs at least l-3 fill edges inside its vertex set).
int chordless_cycle_lower_bound(const Graph& g);

namespace detail {

// Shared by the fill-in and sandwich pipelines: solve one connected
// component, optionally restricting branch children to `admit` and the
// catalog to PMCs that are cliques in `clique_host`.
std::optional<std::vector<EdgePair>> solve_component(const Graph& g, int budget,
                                                     const EdgeFilter& admit,
                                                     const Graph* clique_host,
                                                     PipelineStats* stats = nullptr);

} // namespace detail

} // namespace fillin

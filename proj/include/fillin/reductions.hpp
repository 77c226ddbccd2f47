#pragma once

#include <optional>
#include <vector>

#include "fillin/branch.hpp"
#include "fillin/dp.hpp"
#include "fillin/graph.hpp"
#include "fillin/sandwich.hpp"

namespace fillin {

// Bipartite graph over global vertex ids; every edge crosses the partition.
struct BipartiteGraph {
    VertexSet left;
    VertexSet right;
    std::vector<EdgePair> edges;
};

// Partition of the vertex set into color classes.
struct Coloring {
    std::vector<VertexSet> classes;
};

// True iff the left-side neighborhoods form an inclusion chain.
bool is_chain_graph(const BipartiteGraph& b);

// Yannakakis reduction: complete both sides into cliques; chain completion
// within k edges iff the cobipartite graph triangulates within k edges.
FillInInstance chain_to_fillin(const BipartiteGraph& b, int k);

// Minimum chain completion within budget k, or nothing.
std::optional<std::vector<EdgePair>> solve_chain(const BipartiteGraph& b, int k);

// Permitted fill edges are exactly the bichromatic non-edges.
SandwichInstance colored_to_sandwich(const Graph& g, const Coloring& col, int k);

// Sandwich pipeline: kernelize, branch with the allowed-edge filter,
// enumerate vital PMCs restricted to cliques of graph+allowed, run the DP.
std::optional<FillSolution> solve_sandwich(const SandwichInstance& inst,
                                           PipelineStats* stats = nullptr);

} // namespace fillin

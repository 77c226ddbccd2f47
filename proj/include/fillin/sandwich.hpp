#pragma once

#include <set>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin {

// Chordal sandwich instance (G, E', k): base edges E(graph), permitted fill
// edges E' = allowed (disjoint from E), budget k.
struct SandwichInstance {
    Graph graph;
    std::set<EdgePair> allowed;
    int k = 0;
};

enum class KernelStatus { Reduced, No, TrivialYes };

struct KernelResult {
    KernelStatus status = KernelStatus::No;
    SandwichInstance instance;      // meaningful when status == Reduced
    std::vector<int> vertex_map;    // kernel vertex id -> original id
    std::set<EdgePair> forced_fill; // Safe-edge additions, original ids
};

// A_{x,y}: common neighbors w of the nonadjacent pair x,y such that x and y
// stay connected in G[(V \ N[w]) u {x,y}].
VertexSet a_xy(const SandwichInstance& inst, int x, int y);

// True iff every component C of G \ N[u] has N(C) a clique.
bool no_cycle_vertex_applies(const SandwichInstance& inst, int u);

// Staged kernelization P1-P5. Output vertex count is at most 32k^3+4k.
KernelResult kernelize(const SandwichInstance& inst);

// Fill-in specialization: every non-edge is permitted.
KernelResult fillin_kernel(const Graph& g, int k);

} // namespace fillin

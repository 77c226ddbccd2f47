#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin {

// Branching node: graph with remaining budget and the fill edges forced so
// far along this branch (already present in graph).
struct FillInInstance {
    Graph graph;
    int k = 0;
    std::set<EdgePair> forced;
};

// A nonadjacent pair u,v and a chordless u-v path whose internal vertices
// each miss at least t vertices of x = N(u) & N(v).
struct ObscuredWitness {
    int u = 0;
    int v = 0;
    std::vector<int> path; // includes endpoints
    VertexSet x;
};

// Admissibility predicate for branch children; children whose added edge
// set fails it are discarded (used by the sandwich pipeline).
using EdgeFilter = std::function<bool(const std::vector<EdgePair>&)>;

// Scans nonadjacent pairs in lexicographic order; returns the first
// shortest obscured path (BFS, lowest-id tie-break), or nothing when the
// instance is non-reducible.
std::optional<ObscuredWitness> find_obscured_path(const FillInInstance& inst);

// Children of the branching rule: child 0 adds uv with k-1; child i adds
// all missing edges between the i-th internal vertex and x. Children with
// negative remaining budget are dropped.
std::vector<FillInInstance> apply_branch(const FillInInstance& inst,
                                         const ObscuredWitness& w,
                                         const EdgeFilter& admit = {});

// Depth-first recursion to the set of non-reducible leaves, deduplicated by
// added-edge set.
std::vector<FillInInstance> reduce_to_nonreducible(const FillInInstance& inst,
                                                   const EdgeFilter& admit = {});

} // namespace fillin

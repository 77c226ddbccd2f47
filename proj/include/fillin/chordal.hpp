#pragma once

#include <optional>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin {

// Vertex ordering for the elimination game; order[i] is the vertex
// eliminated at step i (positions are 0-based).
struct EliminationOrdering {
    std::vector<int> order;
};

struct Triangulation {
    Graph base;
    std::vector<EdgePair> fill; // sorted, disjoint from base edges
    Graph result;               // base plus fill, chordal
    std::optional<EliminationOrdering> ordering;
};

bool is_chordal(const Graph& g);

// A chordless cycle of length >= 4, or nothing when g is chordal.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g);

// Runs the elimination game: at each step the not-yet-eliminated neighbors
// of the eliminated vertex are completed into a clique. Output is chordal
// for every ordering.
Triangulation elimination_game(const Graph& g, const EliminationOrdering& pi);

// True iff removing any single fill edge breaks chordality.
bool is_minimal_triangulation(const Triangulation& t);

// MCS-M: weight-driven search recording fill along weight-minimal paths.
// Deterministic (ties broken by smallest vertex id).
Triangulation minimal_triangulation(const Graph& g);

// All maximal cliques of a chordal graph (at most n of them).
std::vector<VertexSet> maximal_cliques_chordal(const Graph& h);

// All minimal separators of a chordal graph (at most n-1 of them).
std::vector<VertexSet> minimal_separators_chordal(const Graph& h);

} // namespace fillin

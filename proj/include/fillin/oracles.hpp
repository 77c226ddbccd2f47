#pragma once

#include <set>

#include "fillin/graph.hpp"
#include "fillin/reductions.hpp"
#include "fillin/sandwich.hpp"

namespace fillin {

// Brute-force references used by property tests. Size guards are hard
// errors, never silent truncation.

// Exact minimum fill-in by branching over the chords of a chordless cycle.
// Guard: n <= 16.
int oracle_mfi(const Graph& g);

// Independent second route: minimum fill over all n! elimination orderings.
// Guard: n <= 8.
int oracle_mfi_orderings(const Graph& g);

// All potential maximal cliques, as maximal cliques of the minimal
// triangulations produced by every ordering. Guard: n <= 8.
std::set<VertexSet> oracle_pmcs(const Graph& g);

// Subset enumeration over the allowed edges, increasing size, early exit.
// Guard: |allowed| <= 24.
bool oracle_sandwich(const SandwichInstance& inst);

// Minimum chain completion by subset enumeration over the cross non-edges.
// Guard: at most 24 cross non-edges.
int oracle_chain(const BipartiteGraph& b);

} // namespace fillin

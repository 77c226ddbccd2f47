#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fillin/graph.hpp"

namespace fillin::test {

inline Graph path_graph(int n)
{
    std::vector<EdgePair> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle_graph(int n)
{
    std::vector<EdgePair> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete_graph(int n)
{
    std::vector<EdgePair> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

// Graph from an edge-subset bitmask over the pairs (0,1),(0,2),(1,2),(0,3),...
inline Graph graph_from_mask(int n, std::uint64_t mask)
{
    std::vector<EdgePair> e;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1)
                e.emplace_back(u, v);
    return Graph(n, e);
}

inline bool is_connected(const Graph& g)
{
    return g.vertex_count() <= 1 || components(g, {}).size() == 1;
}

// Erdos-Renyi-style random graph, deterministic in the engine state.
inline Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<EdgePair> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p)
{
    for (;;) {
        Graph g = random_graph(rng, n, p);
        if (is_connected(g))
            return g;
    }
}

} // namespace fillin::test

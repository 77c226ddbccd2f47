#include "fillin/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "fillin/chordal.hpp"
#include "fillin/errors.hpp"

namespace fillin {

bool is_chain_graph(const BipartiteGraph& b)
{
    int n = 0;
    for (int v : b.left)
        n = std::max(n, v + 1);
    for (int v : b.right)
        n = std::max(n, v + 1);
    std::vector<Bits> nbr(b.left.size(), Bits(n));
    std::vector<int> deg(b.left.size(), 0);
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < b.left.size(); ++i)
        pos[b.left[i]] = static_cast<int>(i);
    for (const auto& e : b.edges) {
        int l = pos[e.u] >= 0 ? e.u : e.v;
        int r = l == e.u ? e.v : e.u;
        if (pos[l] < 0)
            throw std::invalid_argument("is_chain_graph: edge misses the left side");
        nbr[pos[l]].set(r);
        ++deg[pos[l]];
    }
    std::vector<int> idx(b.left.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int c) { return deg[a] < deg[c]; });
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (!nbr[idx[i - 1]].is_subset_of(nbr[idx[i]]))
            return false;
    return true;
}

FillInInstance chain_to_fillin(const BipartiteGraph& b, int k)
{
    int n = 0;
    for (int v : b.left)
        n = std::max(n, v + 1);
    for (int v : b.right)
        n = std::max(n, v + 1);
    std::vector<EdgePair> edges = b.edges;
    for (std::size_t i = 0; i < b.left.size(); ++i)
        for (std::size_t j = i + 1; j < b.left.size(); ++j)
            edges.emplace_back(b.left[i], b.left[j]);
    for (std::size_t i = 0; i < b.right.size(); ++i)
        for (std::size_t j = i + 1; j < b.right.size(); ++j)
            edges.emplace_back(b.right[i], b.right[j]);
    return FillInInstance{Graph(n, edges), k, {}};
}

std::optional<std::vector<EdgePair>> solve_chain(const BipartiteGraph& b, int k)
{
    FillInInstance inst = chain_to_fillin(b, k);
    auto sol = solve(inst.graph, k);
    if (!sol)
        return std::nullopt;
    // within-partition pairs are edges of the cobipartite graph, so every
    // fill edge is cross-partition already
    BipartiteGraph completed = b;
    for (const auto& e : sol->fill)
        completed.edges.push_back(e);
    if (!is_chain_graph(completed))
        throw internal_error("solve_chain: completion is not a chain graph");
    return sol->fill;
}

SandwichInstance colored_to_sandwich(const Graph& g, const Coloring& col, int k)
{
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (std::size_t c = 0; c < col.classes.size(); ++c)
        for (int v : col.classes[c])
            color[v] = static_cast<int>(c);
    for (int v = 0; v < n; ++v)
        if (color[v] < 0)
            throw std::invalid_argument("colored_to_sandwich: vertex without a color class");
    std::set<EdgePair> allowed;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && color[u] != color[v])
                allowed.insert(EdgePair(u, v));
    return SandwichInstance{g, std::move(allowed), k};
}

std::optional<FillSolution> solve_sandwich(const SandwichInstance& inst,
                                           PipelineStats* stats)
{
    if (inst.k < 0)
        return std::nullopt;
    KernelResult kr = kernelize(inst);
    if (stats && kr.status == KernelStatus::Reduced)
        stats->kernel_vertices = kr.instance.graph.vertex_count();
    if (kr.status == KernelStatus::No)
        return std::nullopt;

    std::set<EdgePair> total(kr.forced_fill.begin(), kr.forced_fill.end());
    if (kr.status == KernelStatus::Reduced) {
        const Graph& rg = kr.instance.graph;
        int remaining = kr.instance.k;
        for (const auto& comp : components(rg, {})) {
            auto [sub, ids] = rg.induced(comp);
            std::vector<int> pos(rg.vertex_count(), -1);
            for (std::size_t i = 0; i < ids.size(); ++i)
                pos[ids[i]] = static_cast<int>(i);
            std::set<EdgePair> allowed_comp;
            std::vector<EdgePair> allowed_edges;
            for (const auto& e : kr.instance.allowed) {
                if (pos[e.u] >= 0 && pos[e.v] >= 0) {
                    EdgePair mapped(pos[e.u], pos[e.v]);
                    allowed_comp.insert(mapped);
                    allowed_edges.push_back(mapped);
                }
            }
            Graph g2 = sub.with_edges(allowed_edges);
            EdgeFilter admit = [&allowed_comp](const std::vector<EdgePair>& added) {
                for (const auto& e : added)
                    if (!allowed_comp.count(e))
                        return false;
                return true;
            };
            auto fill = detail::solve_component(sub, remaining, admit, &g2, stats);
            if (!fill)
                return std::nullopt;
            remaining -= static_cast<int>(fill->size());
            for (const auto& e : *fill)
                total.insert(EdgePair(kr.vertex_map[ids[e.u]], kr.vertex_map[ids[e.v]]));
        }
    }

    for (const auto& e : total)
        if (!inst.allowed.count(e))
            throw internal_error("solve_sandwich: fill edge outside the allowed set");
    if (static_cast<int>(total.size()) > inst.k)
        throw internal_error("solve_sandwich: fill exceeds budget");
    FillSolution sol;
    sol.fill.assign(total.begin(), total.end());
    if (!is_chordal(inst.graph.with_edges(sol.fill)))
        throw internal_error("solve_sandwich: final graph is not chordal");
    return sol;
}

} // namespace fillin

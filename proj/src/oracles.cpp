#include "fillin/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fillin/chordal.hpp"
#include "fillin/dp.hpp"

namespace fillin {

namespace {

std::vector<std::uint64_t> graph_key(const Graph& g)
{
    std::vector<std::uint64_t> key;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (std::uint64_t w : g.row(v).words())
            key.push_back(w);
    return key;
}

// Returns mfi(g) when it is <= cap, else cap+1. Memo entries remember the
// cap they were computed under so saturated values are only reused for
// smaller caps.
int mfi_bounded(const Graph& g, int cap,
                std::map<std::vector<std::uint64_t>, std::pair<int, int>>& memo)
{
    if (is_chordal(g))
        return 0;
    if (cap <= 0)
        return cap + 1;
    auto key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) {
        auto [val, at_cap] = it->second;
        if (val <= at_cap)
            return std::min(val, cap + 1); // exact
        if (cap <= at_cap)
            return cap + 1; // known mfi > at_cap >= cap
    }
    if (chordless_cycle_lower_bound(g) > cap) {
        memo[key] = {cap + 1, cap};
        return cap + 1;
    }
    auto cyc = *find_chordless_cycle(g);
    int best = cap + 1;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        for (std::size_t j = i + 1; j < cyc.size(); ++j) {
            if (g.has_edge(cyc[i], cyc[j]))
                continue;
            Graph child = g.with_edges({EdgePair(cyc[i], cyc[j])});
            int sub = mfi_bounded(child, best - 2, memo);
            if (1 + sub < best)
                best = 1 + sub;
        }
    }
    memo[key] = {best, cap};
    return best;
}

template <class F>
void for_each_size_subset(int n, int size, F f)
{
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next, int want) -> void {
        if (want == 0) {
            f(pick);
            return;
        }
        for (int v = next; v <= n - want; ++v) {
            pick.push_back(v);
            self(self, v + 1, want - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, size);
}

} // namespace

int oracle_mfi(const Graph& g)
{
    if (g.vertex_count() > 16)
        throw std::invalid_argument("oracle_mfi: size guard (n <= 16)");
    std::map<std::vector<std::uint64_t>, std::pair<int, int>> memo;
    int ub = static_cast<int>(minimal_triangulation(g).fill.size());
    return mfi_bounded(g, ub, memo);
}

int oracle_mfi_orderings(const Graph& g)
{
    int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("oracle_mfi_orderings: size guard (n <= 8)");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n * n;
    do {
        Triangulation t = elimination_game(g, EliminationOrdering{perm});
        best = std::min(best, static_cast<int>(t.fill.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::set<VertexSet> oracle_pmcs(const Graph& g)
{
    int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("oracle_pmcs: size guard (n <= 8)");
    std::set<VertexSet> out;
    if (n == 0)
        return out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<EdgePair>, bool> minimal_by_fill;
    do {
        Triangulation t = elimination_game(g, EliminationOrdering{perm});
        auto it = minimal_by_fill.find(t.fill);
        if (it == minimal_by_fill.end())
            it = minimal_by_fill.emplace(t.fill, is_minimal_triangulation(t)).first;
        if (it->second)
            for (auto& c : maximal_cliques_chordal(t.result))
                out.insert(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool oracle_sandwich(const SandwichInstance& inst)
{
    if (inst.allowed.size() > 24)
        throw std::invalid_argument("oracle_sandwich: size guard (|allowed| <= 24)");
    if (inst.k < 0)
        return false;
    if (is_chordal(inst.graph))
        return true;
    std::vector<EdgePair> pool(inst.allowed.begin(), inst.allowed.end());
    int n_pool = static_cast<int>(pool.size());
    int max_size = std::min(inst.k, n_pool);
    for (int size = 1; size <= max_size; ++size) {
        bool found = false;
        for_each_size_subset(n_pool, size, [&](const std::vector<int>& pick) {
            if (found)
                return;
            std::vector<EdgePair> fill;
            fill.reserve(pick.size());
            for (int i : pick)
                fill.push_back(pool[i]);
            if (is_chordal(inst.graph.with_edges(fill)))
                found = true;
        });
        if (found)
            return true;
    }
    return false;
}

int oracle_chain(const BipartiteGraph& b)
{
    std::set<std::pair<int, int>> have;
    for (const auto& e : b.edges)
        have.insert({e.u, e.v});
    std::vector<EdgePair> pool;
    for (int l : b.left)
        for (int r : b.right)
            if (!have.count({std::min(l, r), std::max(l, r)}))
                pool.emplace_back(l, r);
    if (pool.size() > 24)
        throw std::invalid_argument("oracle_chain: size guard (<= 24 cross non-edges)");
    int n_pool = static_cast<int>(pool.size());
    for (int size = 0; size <= n_pool; ++size) {
        bool found = false;
        for_each_size_subset(n_pool, size, [&](const std::vector<int>& pick) {
            if (found)
                return;
            BipartiteGraph completed = b;
            for (int i : pick)
                completed.edges.push_back(pool[i]);
            if (is_chain_graph(completed))
                found = true;
        });
        if (found)
            return size;
    }
    return n_pool; // complete bipartite graph is always a chain graph
}

} // namespace fillin

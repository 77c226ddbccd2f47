#include "fillin/branch.hpp"

#include <algorithm>
#include <queue>

#include "fillin/pmc.hpp"

namespace fillin {

namespace {

// Vertices of x not covered by the closed neighborhood of w; these are the
// endpoints of the edges child branches would add at w.
VertexSet missing_from(const Graph& g, const Bits& x, int w)
{
    Bits miss = x;
    miss.and_not(g.row(w));
    miss.reset(w);
    return vs_from_bits(miss);
}

} // namespace

std::optional<ObscuredWitness> find_obscured_path(const FillInInstance& inst)
{
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    int t = sqrt_threshold(inst.k);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v))
                continue;
            Bits x = g.row(u);
            x &= g.row(v);
            if (x.none())
                continue;
            Bits allowed(n);
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v)
                    continue;
                Bits miss = x;
                miss.and_not(g.row(w));
                miss.reset(w);
                if (miss.count() >= t)
                    allowed.set(w);
            }
            allowed.set(u);
            allowed.set(v);
            // shortest u-v path inside the allowed set is chordless and
            // every internal vertex is obscured
            std::vector<int> parent(n, -2);
            std::queue<int> q;
            parent[u] = -1;
            q.push(u);
            while (!q.empty() && parent[v] == -2) {
                int a = q.front();
                q.pop();
                for (int b : g.neighbors(a)) {
                    if (parent[b] != -2 || !allowed.test(b))
                        continue;
                    parent[b] = a;
                    q.push(b);
                }
            }
            if (parent[v] == -2)
                continue;
            ObscuredWitness w;
            w.u = u;
            w.v = v;
            w.x = vs_from_bits(x);
            for (int a = v; a != -1; a = parent[a])
                w.path.push_back(a);
            std::reverse(w.path.begin(), w.path.end());
            return w;
        }
    }
    return std::nullopt;
}

std::vector<FillInInstance> apply_branch(const FillInInstance& inst,
                                         const ObscuredWitness& w,
                                         const EdgeFilter& admit)
{
    std::vector<FillInInstance> children;
    Bits x = bits_from_vs(inst.graph.vertex_count(), w.x);

    auto push_child = [&](const std::vector<EdgePair>& added) {
        int cost = static_cast<int>(added.size());
        if (cost > inst.k)
            return;
        if (admit && !admit(added))
            return;
        FillInInstance child;
        child.graph = inst.graph.with_edges(added);
        child.k = inst.k - cost;
        child.forced = inst.forced;
        child.forced.insert(added.begin(), added.end());
        children.push_back(std::move(child));
    };

    push_child({EdgePair(w.u, w.v)});
    for (std::size_t i = 1; i + 1 < w.path.size(); ++i) {
        int wi = w.path[i];
        std::vector<EdgePair> fi;
        for (int xv : missing_from(inst.graph, x, wi))
            fi.emplace_back(wi, xv);
        push_child(fi);
    }
    return children;
}

std::vector<FillInInstance> reduce_to_nonreducible(const FillInInstance& inst,
                                                   const EdgeFilter& admit)
{
    std::vector<FillInInstance> leaves;
    std::set<std::vector<EdgePair>> visited; // states keyed by forced edges
    auto rec = [&](auto&& self, const FillInInstance& cur) -> void {
        std::vector<EdgePair> key(cur.forced.begin(), cur.forced.end());
        if (!visited.insert(std::move(key)).second)
            return;
        auto w = find_obscured_path(cur);
        if (!w) {
            leaves.push_back(cur);
            return;
        }
        for (const auto& child : apply_branch(cur, *w, admit))
            self(self, child);
    };
    rec(rec, inst);
    return leaves;
}

} // namespace fillin

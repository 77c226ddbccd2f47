#include "fillin/graph.hpp"

#include <algorithm>

namespace fillin {

Graph::Graph(int n, const std::vector<EdgePair>& edges) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
    rows_.assign(n, Bits(n));
    for (const auto& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (rows_[e.u].test(e.v))
            continue; // collapse duplicates
        rows_[e.u].set(e.v);
        rows_[e.v].set(e.u);
        ++m_;
    }
    for (int v = 0; v < n; ++v) {
        adj_[v].reserve(rows_[v].count());
        rows_[v].for_each([&](int u) { adj_[v].push_back(u); });
    }
}

std::vector<EdgePair> Graph::edges() const
{
    std::vector<EdgePair> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edges(const std::vector<EdgePair>& extra) const
{
    std::vector<EdgePair> all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    Graph g(n_, all);
    g.labels_ = labels_;
    return g;
}

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& keep) const
{
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        pos[keep[i]] = static_cast<int>(i);
    std::vector<EdgePair> sub;
    for (int u : keep)
        for (int v : adj_[u])
            if (u < v && pos[v] >= 0)
                sub.emplace_back(pos[u], pos[v]);
    return {Graph(static_cast<int>(keep.size()), sub), keep};
}

std::uint64_t Graph::fingerprint() const
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n_));
    for (int v = 0; v < n_; ++v)
        for (std::uint64_t w : rows_[v].words())
            mix(w);
    return h;
}

bool vs_contains(const VertexSet& s, int v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet vs_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

VertexSet vs_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

VertexSet vs_from_bits(const Bits& b)
{
    VertexSet out;
    out.reserve(b.count());
    b.for_each([&](int v) { out.push_back(v); });
    return out;
}

Bits bits_from_vs(int n, const VertexSet& s)
{
    Bits b(n);
    for (int v : s)
        b.set(v);
    return b;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed)
{
    int n = g.vertex_count();
    Bits seen = bits_from_vs(n, removed);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s))
            continue;
        VertexSet comp;
        stack.push_back(s);
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // scanning start vertices in ascending order already yields components
    // sorted by minimum member
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& w)
{
    Bits acc(g.vertex_count());
    for (int v : w)
        acc |= g.row(v);
    acc.and_not(bits_from_vs(g.vertex_count(), w));
    return vs_from_bits(acc);
}

int fill_count(const Graph& g, const VertexSet& w)
{
    Bits inside = bits_from_vs(g.vertex_count(), w);
    int missing = 0;
    for (int v : w) {
        Bits miss = inside;
        miss.and_not(g.row(v));
        miss.reset(v);
        missing += miss.count();
    }
    return missing / 2;
}

Graph complete_set(const Graph& g, const VertexSet& w)
{
    std::vector<EdgePair> extra;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!g.has_edge(w[i], w[j]))
                extra.emplace_back(w[i], w[j]);
    return g.with_edges(extra);
}

bool is_clique(const Graph& g, const VertexSet& w)
{
    Bits inside = bits_from_vs(g.vertex_count(), w);
    for (int v : w) {
        Bits miss = inside;
        miss.and_not(g.row(v));
        miss.reset(v);
        if (miss.any())
            return false;
    }
    return true;
}

} // namespace fillin

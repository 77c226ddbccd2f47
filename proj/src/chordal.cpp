#include "fillin/chordal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace fillin {

namespace {

// Maximum cardinality search. Returns the elimination order (position i is
// eliminated first); reversing the visit order makes it a perfect
// elimination ordering exactly when g is chordal.
std::vector<int> mcs_order(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<int> order(n);
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best]))
                best = v;
        visited[best] = 1;
        order[i] = best;
        for (int u : g.neighbors(best))
            if (!visited[u])
                ++weight[u];
    }
    return order;
}

// Perfect elimination check for a given order. On failure reports the
// offending vertex and a nonadjacent pair among its later neighbors.
bool check_peo(const Graph& g, const std::vector<int>& order, int* bad_v,
               int* bad_x, int* bad_y)
{
    int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent = -1;
        for (int u : g.neighbors(v))
            if (pos[u] > i && (parent == -1 || pos[u] < pos[parent]))
                parent = u;
        if (parent == -1)
            continue;
        for (int u : g.neighbors(v)) {
            if (pos[u] > i && u != parent && !g.has_edge(parent, u)) {
                if (bad_v) {
                    *bad_v = v;
                    *bad_x = parent;
                    *bad_y = u;
                }
                return false;
            }
        }
    }
    return true;
}

// Shortest x-y path whose interior avoids `forbidden`, lowest-id
// tie-breaking. Returns the path including endpoints, or empty.
std::vector<int> restricted_shortest_path(const Graph& g, int x, int y,
                                          const Bits& forbidden)
{
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    parent[x] = -1;
    q.push(x);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == y)
            break;
        for (int u : g.neighbors(v)) {
            if (parent[u] != -2)
                continue;
            if (u != y && forbidden.test(u))
                continue;
            parent[u] = v;
            q.push(u);
        }
    }
    if (parent[y] == -2)
        return {};
    std::vector<int> path;
    for (int v = y; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

bool is_chordal(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    return check_peo(g, mcs_order(g), nullptr, nullptr, nullptr);
}

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g)
{
    int n = g.vertex_count();
    if (is_chordal(g))
        return std::nullopt;
    // bv has nonadjacent neighbors bx, by. Scan common-neighbor triples in
    // deterministic order; at least one admits a connecting path avoiding
    // the closed neighborhood of the middle vertex, closing a chordless
    // cycle v-x-...-y-v.
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.has_edge(x, y))
                    continue;
                Bits forbidden = g.row(v);
                forbidden.set(v);
                forbidden.reset(x);
                forbidden.reset(y);
                auto path = restricted_shortest_path(g, x, y, forbidden);
                if (!path.empty()) {
                    std::vector<int> cycle;
                    cycle.push_back(v);
                    cycle.insert(cycle.end(), path.begin(), path.end());
                    return cycle;
                }
            }
        }
    }
    // unreachable for non-chordal inputs
    throw std::logic_error("find_chordless_cycle: inconsistent state");
}

Triangulation elimination_game(const Graph& g, const EliminationOrdering& pi)
{
    int n = g.vertex_count();
    if (static_cast<int>(pi.order.size()) != n)
        throw std::invalid_argument("elimination_game: ordering size mismatch");
    std::vector<Bits> rows(n);
    for (int v = 0; v < n; ++v)
        rows[v] = g.row(v);
    Bits remaining(n);
    remaining.fill_all();
    for (int step = 0; step < n; ++step) {
        int v = pi.order[step];
        if (v < 0 || v >= n || !remaining.test(v))
            throw std::invalid_argument("elimination_game: not a permutation");
        remaining.reset(v);
        Bits later = rows[v];
        later &= remaining;
        later.for_each([&](int a) {
            Bits add = later;
            add.and_not(rows[a]);
            add.reset(a);
            rows[a] |= add;
        });
    }
    std::vector<EdgePair> fill;
    for (int u = 0; u < n; ++u) {
        Bits added = rows[u];
        added.and_not(g.row(u));
        added.for_each([&](int v) {
            if (u < v)
                fill.emplace_back(u, v);
        });
    }
    Triangulation t;
    t.base = g;
    t.fill = std::move(fill);
    t.result = g.with_edges(t.fill);
    t.ordering = pi;
    return t;
}

bool is_minimal_triangulation(const Triangulation& t)
{
    if (!is_chordal(t.result))
        return false;
    for (std::size_t i = 0; i < t.fill.size(); ++i) {
        std::vector<EdgePair> rest;
        rest.reserve(t.fill.size() - 1);
        for (std::size_t j = 0; j < t.fill.size(); ++j)
            if (j != i)
                rest.push_back(t.fill[j]);
        if (is_chordal(t.base.with_edges(rest)))
            return false;
    }
    return true;
}

Triangulation minimal_triangulation(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<EdgePair> fill;

    constexpr int kNoPath = std::numeric_limits<int>::max();
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!numbered[u] && (v == -1 || weight[u] > weight[v]))
                v = u;
        // reach[u] = min over v-u paths with unnumbered interior of the
        // maximum interior weight; -1 when a direct edge exists. Paths are
        // taken in the input graph, not the partially filled one.
        std::vector<int> reach(n, kNoPath);
        std::set<std::pair<int, int>> pq; // (cost, vertex)
        for (int u : g.neighbors(v)) {
            if (!numbered[u]) {
                reach[u] = -1;
                pq.insert({-1, u});
            }
        }
        while (!pq.empty()) {
            auto [cost, x] = *pq.begin();
            pq.erase(pq.begin());
            if (cost > reach[x])
                continue;
            int through = std::max(cost, weight[x]);
            for (int u : g.neighbors(x)) {
                if (numbered[u] || u == v)
                    continue;
                if (through < reach[u]) {
                    reach[u] = through;
                    pq.insert({through, u});
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            if (numbered[u] || u == v || reach[u] == kNoPath)
                continue;
            if (reach[u] < weight[u]) {
                ++weight[u];
                if (!g.has_edge(v, u))
                    fill.emplace_back(v, u);
            }
        }
        numbered[v] = 1;
    }
    std::sort(fill.begin(), fill.end());
    Triangulation t;
    t.base = g;
    t.fill = std::move(fill);
    t.result = g.with_edges(t.fill);
    return t;
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& h)
{
    if (!is_chordal(h))
        throw std::invalid_argument("maximal_cliques_chordal: graph is not chordal");
    int n = h.vertex_count();
    if (n == 0)
        return {};
    auto order = mcs_order(h);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    std::vector<Bits> cand;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        Bits c(n);
        c.set(v);
        for (int u : h.neighbors(v))
            if (pos[u] > i)
                c.set(u);
        cand.push_back(c);
    }
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size() && maximal; ++j)
            if (j != i && cand[i].is_subset_of(cand[j]) && !(cand[j] == cand[i]))
                maximal = false;
        if (maximal) {
            VertexSet c = vs_from_bits(cand[i]);
            if (std::find(out.begin(), out.end(), c) == out.end())
                out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> minimal_separators_chordal(const Graph& h)
{
    if (!is_chordal(h))
        throw std::invalid_argument("minimal_separators_chordal: graph is not chordal");
    int n = h.vertex_count();
    auto order = mcs_order(h);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    std::set<VertexSet> candidates;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        VertexSet later;
        for (int u : h.neighbors(v))
            if (pos[u] > i)
                later.push_back(u);
        std::sort(later.begin(), later.end());
        candidates.insert(later);
    }
    auto cliques = maximal_cliques_chordal(h);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j)
            candidates.insert(vs_intersection(cliques[i], cliques[j]));

    std::vector<VertexSet> out;
    for (const auto& s : candidates) {
        // keep exactly the sets with two or more full components
        auto comps = components(h, s);
        int full = 0;
        for (const auto& c : comps)
            if (neighborhood(h, c) == s)
                ++full;
        if (full >= 2)
            out.push_back(s);
    }
    return out;
}

} // namespace fillin

#include "fillin/sandwich.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "fillin/chordal.hpp"

namespace fillin {

namespace {

bool connected_through(const Graph& g, int x, int y, const Bits& allowed)
{
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == y)
            return true;
        for (int u : g.neighbors(v)) {
            if (!seen[u] && allowed.test(u)) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return false;
}

VertexSet a_xy_in(const Graph& g, int x, int y, const Bits& candidates)
{
    if (g.has_edge(x, y))
        throw std::invalid_argument("a_xy: vertices are adjacent");
    int n = g.vertex_count();
    Bits common = g.row(x);
    common &= g.row(y);
    common &= candidates;
    VertexSet out;
    common.for_each([&](int w) {
        Bits allowed(n);
        allowed.fill_all();
        allowed.and_not(g.row(w));
        allowed.reset(w);
        allowed.set(x);
        allowed.set(y);
        if (connected_through(g, x, y, allowed))
            out.push_back(w);
    });
    return out;
}

struct KernelState {
    Graph g;
    std::set<EdgePair> allowed;
    int k;
    std::vector<char> in_a;
    int a_size = 0;
    std::set<EdgePair> forced;

    VertexSet b_vertices() const
    {
        VertexSet b;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_a[v])
                b.push_back(v);
        return b;
    }

    void move_to_a(int v)
    {
        if (!in_a[v]) {
            in_a[v] = 1;
            ++a_size;
        }
    }
};

// One P2 step: find a chordless path of B vertices lying on a chordless
// cycle of G and move it (with the anchor u) to A. Returns false when no
// such path exists.
//
// The cycle is x-u-b1-...-y-x with u,b1 in B and x in A: sources are the
// B-neighbors of u invisible to x, targets the neighbors of x invisible to
// u. The connecting walk may pass through A but never through N[u] or x,
// and stops at the first target, which keeps the closed cycle chordless.
// Only the contiguous B-run at the u end is moved.
bool p2_move(KernelState& st)
{
    const Graph& g = st.g;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (st.in_a[u])
            continue;
        for (int x : g.neighbors(u)) {
            if (!st.in_a[x])
                continue;
            Bits interior(n);
            interior.fill_all();
            interior.and_not(g.row(u));
            interior.reset(u);
            interior.reset(x);
            Bits target = g.row(x);
            target.and_not(g.row(u));
            target.reset(u);

            std::vector<int> parent(n, -2);
            std::queue<int> q;
            for (int s : g.neighbors(u)) {
                if (!st.in_a[s] && !g.has_edge(s, x)) {
                    parent[s] = -1;
                    q.push(s);
                }
            }
            while (!q.empty()) {
                int b = q.front();
                q.pop();
                if (target.test(b)) {
                    std::vector<int> path;
                    for (int v = b; v != -1; v = parent[v])
                        path.push_back(v);
                    std::reverse(path.begin(), path.end());
                    st.move_to_a(u);
                    for (int v : path) {
                        if (st.in_a[v])
                            break;
                        st.move_to_a(v);
                    }
                    return true;
                }
                for (int c : g.neighbors(b)) {
                    if (parent[c] == -2 && interior.test(c)) {
                        parent[c] = b;
                        q.push(c);
                    }
                }
            }
        }
    }
    return false;
}

} // namespace

VertexSet a_xy(const SandwichInstance& inst, int x, int y)
{
    Bits all(inst.graph.vertex_count());
    all.fill_all();
    return a_xy_in(inst.graph, x, y, all);
}

bool no_cycle_vertex_applies(const SandwichInstance& inst, int u)
{
    const Graph& g = inst.graph;
    VertexSet closed = vs_from_bits(g.row(u));
    closed = vs_union(closed, VertexSet{u});
    for (const auto& c : components(g, closed))
        if (!is_clique(g, neighborhood(g, c)))
            return false;
    return true;
}

KernelResult kernelize(const SandwichInstance& inst)
{
    for (const auto& e : inst.allowed)
        if (inst.graph.has_edge(e.u, e.v))
            throw std::invalid_argument("kernelize: allowed edge already present");

    KernelState st{inst.graph, inst.allowed, inst.k,
                   std::vector<char>(inst.graph.vertex_count(), 0), 0, {}};

    KernelResult no;
    no.status = KernelStatus::No;

    // P1: pull chordless cycles of G[B] into A
    while (true) {
        if (4 * st.k < st.a_size)
            return no;
        auto [sub, ids] = st.g.induced(st.b_vertices());
        auto cyc = find_chordless_cycle(sub);
        if (!cyc)
            break;
        for (int v : *cyc)
            st.move_to_a(ids[v]);
    }

    // P2: pull chordless B-paths lying on chordless cycles of G into A
    while (true) {
        if (4 * st.k < st.a_size)
            return no;
        if (!p2_move(st))
            break;
    }

    // P3/P4: per nonadjacent pair of the current A, either absorb A_{x,y}
    // or apply the Safe-edge rule
    VertexSet a0;
    for (int v = 0; v < st.g.vertex_count(); ++v)
        if (st.in_a[v])
            a0.push_back(v);
    for (std::size_t i = 0; i < a0.size(); ++i) {
        for (std::size_t j = i + 1; j < a0.size(); ++j) {
            int x = a0[i], y = a0[j];
            if (st.g.has_edge(x, y))
                continue;
            Bits b_mask(st.g.vertex_count());
            for (int v = 0; v < st.g.vertex_count(); ++v)
                if (!st.in_a[v])
                    b_mask.set(v);
            VertexSet axy = a_xy_in(st.g, x, y, b_mask);
            if (static_cast<int>(axy.size()) <= 2 * st.k) {
                for (int w : axy)
                    st.move_to_a(w);
            } else if (!st.allowed.count(EdgePair(x, y))) {
                return no;
            } else if (st.k == 0) {
                return no;
            } else {
                EdgePair e(x, y);
                st.g = st.g.with_edges({e});
                st.allowed.erase(e);
                st.forced.insert(e);
                st.k -= 1;
            }
        }
    }

    // P5: delete B
    KernelResult res;
    res.forced_fill = st.forced;
    VertexSet a_final;
    for (int v = 0; v < st.g.vertex_count(); ++v)
        if (st.in_a[v])
            a_final.push_back(v);
    if (a_final.empty()) {
        res.status = KernelStatus::TrivialYes;
        return res;
    }
    auto [sub, ids] = st.g.induced(a_final);
    std::vector<int> pos(st.g.vertex_count(), -1);
    for (std::size_t i = 0; i < a_final.size(); ++i)
        pos[a_final[i]] = static_cast<int>(i);
    std::set<EdgePair> allowed_sub;
    for (const auto& e : st.allowed)
        if (pos[e.u] >= 0 && pos[e.v] >= 0)
            allowed_sub.insert(EdgePair(pos[e.u], pos[e.v]));
    res.status = KernelStatus::Reduced;
    res.instance = SandwichInstance{std::move(sub), std::move(allowed_sub), st.k};
    res.vertex_map = ids;
    return res;
}

KernelResult fillin_kernel(const Graph& g, int k)
{
    std::set<EdgePair> allowed;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v))
                allowed.insert(EdgePair(u, v));
    return kernelize(SandwichInstance{g, std::move(allowed), k});
}

} // namespace fillin

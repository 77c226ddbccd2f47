#include "fillin/pmc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fillin/chordal.hpp"

namespace fillin {

namespace {

// Bron-Kerbosch with pivoting; used for the k = 0 fast path where the vital
// PMCs are exactly the maximal cliques that pass verification.
void bron_kerbosch(const Graph& g, Bits r, Bits p, Bits x,
                   std::vector<VertexSet>& out)
{
    if (p.none() && x.none()) {
        out.push_back(vs_from_bits(r));
        return;
    }
    Bits px = p;
    px |= x;
    int pivot = -1, best = -1;
    px.for_each([&](int u) {
        Bits t = p;
        t &= g.row(u);
        int c = t.count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bits cand = p;
    cand.and_not(g.row(pivot));
    cand.for_each([&](int v) {
        Bits r2 = r;
        r2.set(v);
        Bits p2 = p;
        p2 &= g.row(v);
        Bits x2 = x;
        x2 &= g.row(v);
        bron_kerbosch(g, r2, p2, x2, out);
        p.reset(v);
        x.set(v);
    });
}

std::vector<VertexSet> maximal_cliques_general(const Graph& g)
{
    int n = g.vertex_count();
    Bits r(n), p(n), x(n);
    p.fill_all();
    std::vector<VertexSet> out;
    if (n > 0)
        bron_kerbosch(g, r, p, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Streams all subsets of {0..n-1} of size min_size..max_size in size-then-
// lexicographic order. The callback returns false to abort.
template <class F>
void for_each_subset(int n, int min_size, int max_size, F f)
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
    for (int size = min_size; size <= std::min(max_size, n); ++size)
        rec(rec, 0, size);
}

} // namespace

bool PmcCatalog::insert(Pmc p)
{
    if (p.fill > budget_)
        return false;
    entries_.emplace(p.omega, std::move(p));
    return true;
}

std::string PmcCatalog::export_text() const
{
    std::ostringstream out;
    for (const auto& [omega, pmc] : entries_) {
        for (std::size_t i = 0; i < omega.size(); ++i) {
            if (i)
                out << ' ';
            out << omega[i];
        }
        out << '\n';
    }
    return out.str();
}

PmcCatalog PmcCatalog::import_text(const std::string& text, const Graph& g, int budget)
{
    PmcCatalog cat(g.fingerprint(), budget);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        VertexSet omega;
        int v;
        while (ls >> v)
            omega.push_back(v);
        auto p = verify_pmc(g, omega);
        if (!p)
            throw std::invalid_argument("PmcCatalog::import_text: line is not a PMC");
        cat.insert(*p);
    }
    return cat;
}

int sqrt_threshold(int k)
{
    int t = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
    while (static_cast<long long>(t) * t < k)
        ++t;
    while (t > 1 && static_cast<long long>(t - 1) * (t - 1) >= k)
        --t;
    return std::max(1, t);
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s)
{
    std::vector<VertexSet> out;
    for (auto& c : components(g, s))
        if (neighborhood(g, c) == s)
            out.push_back(std::move(c));
    return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s)
{
    return full_components(g, s).size() >= 2;
}

std::optional<Pmc> verify_pmc(const Graph& g, const VertexSet& omega)
{
    if (omega.empty())
        return std::nullopt;
    int n = g.vertex_count();
    Bits inside = bits_from_vs(n, omega);

    std::vector<Bits> sep_bits;
    for (const auto& c : components(g, omega)) {
        Bits nb(n);
        for (int v : c)
            nb |= g.row(v);
        nb.and_not(bits_from_vs(n, c));
        if (nb == inside)
            return std::nullopt; // full component associated to omega
        sep_bits.push_back(std::move(nb));
    }

    // completing every separator must make g[omega] complete
    int missing = 0;
    for (int v : omega) {
        Bits cover = g.row(v);
        for (const auto& s : sep_bits)
            if (s.test(v))
                cover |= s;
        Bits uncovered = inside;
        uncovered.and_not(cover);
        uncovered.reset(v);
        if (uncovered.any())
            return std::nullopt;
        Bits miss = inside;
        miss.and_not(g.row(v));
        miss.reset(v);
        missing += miss.count();
    }

    Pmc p;
    p.omega = omega;
    p.fill = missing / 2;
    std::vector<VertexSet> seps;
    for (const auto& s : sep_bits)
        seps.push_back(vs_from_bits(s));
    std::sort(seps.begin(), seps.end());
    seps.erase(std::unique(seps.begin(), seps.end()), seps.end());
    p.separators = std::move(seps);
    return p;
}

bool is_vital(const Graph& g, const VertexSet& omega, int k)
{
    return fill_count(g, omega) <= k;
}

namespace {

// Shared candidate generation for one choice of Z on host graph h: build a
// minimal triangulation of h \ Z and test the three candidate families from
// the almost-clique case analysis.
void quasi_candidates_for_z(const Graph& h, const VertexSet& z, PmcCatalog& out)
{
    int n = h.vertex_count();
    VertexSet all(n);
    for (int i = 0; i < n; ++i)
        all[i] = i;
    VertexSet rest = vs_difference(all, z);

    auto [sub, ids] = h.induced(rest);
    Triangulation tri = minimal_triangulation(sub);

    auto lift = [&](const VertexSet& s) {
        VertexSet m;
        m.reserve(s.size());
        for (int v : s)
            m.push_back(ids[v]);
        std::sort(m.begin(), m.end());
        return m;
    };

    auto test = [&](const VertexSet& cand) {
        if (cand.empty())
            return;
        if (auto p = verify_pmc(h, cand))
            out.insert(std::move(*p));
    };

    // X with two or more full components: X is a clique minimal separator
    // of h \ Z and survives into the minimal triangulation.
    for (const auto& s : minimal_separators_chordal(tri.result)) {
        VertexSet sm = lift(s);
        if (is_clique(h, sm))
            test(vs_union(sm, z));
    }

    std::vector<VertexSet> cliques = maximal_cliques_chordal(tri.result);

    // X with no full component: X is a maximal clique of the triangulation.
    for (const auto& kclq : cliques) {
        VertexSet km = lift(kclq);
        if (is_clique(h, km))
            test(vs_union(km, z));
    }

    // X with exactly one full component: omega is recovered from y and the
    // components of h \ (K u Z) seen by y, via omega = N(Y) u {y}.
    for (const auto& kclq : cliques) {
        VertexSet km = lift(kclq);
        VertexSet kz = vs_union(km, z);
        auto comps = components(h, kz);
        for (int y : z) {
            VertexSet ybig{y};
            for (const auto& b : comps) {
                bool sees = false;
                for (int v : b) {
                    if (h.has_edge(v, y)) {
                        sees = true;
                        break;
                    }
                }
                if (sees)
                    ybig = vs_union(ybig, b);
            }
            VertexSet cand = vs_union(neighborhood(h, ybig), VertexSet{y});
            test(cand);
        }
    }
}

} // namespace

PmcCatalog enumerate_quasi_cliques(const Graph& g, int k, int z_max)
{
    if (k < 0)
        throw std::invalid_argument("enumerate_quasi_cliques: negative budget");
    int t = sqrt_threshold(k);
    if (z_max < 0)
        z_max = 5 * t;
    PmcCatalog cat(g.fingerprint(), k);
    int n = g.vertex_count();
    for_each_subset(n, 0, z_max, [&](const VertexSet& z) {
        quasi_candidates_for_z(g, z, cat);
    });
    return cat;
}

PmcCatalog enumerate_vital_pmcs(const Graph& g, int k)
{
    if (k < 0)
        throw std::invalid_argument("enumerate_vital_pmcs: negative budget");
    int n = g.vertex_count();
    int t = sqrt_threshold(k);
    PmcCatalog cat(g.fingerprint(), k);

    // Chordal graphs have a unique minimal triangulation (themselves), so
    // the PMCs are exactly the maximal cliques.
    if (is_chordal(g)) {
        for (const auto& c : maximal_cliques_chordal(g))
            if (auto p = verify_pmc(g, c))
                cat.insert(std::move(*p));
        return cat;
    }

    // k = 0: a vital PMC induces a clique, and a clique PMC is a maximal
    // clique of g (otherwise the surrounding clique yields a full
    // component). Testing the maximal cliques is therefore complete.
    if (k == 0) {
        for (const auto& c : maximal_cliques_general(g))
            if (auto p = verify_pmc(g, c))
                cat.insert(std::move(*p));
        return cat;
    }

    // (a) every subset of size at most 5t+2
    int small_cap = 5 * t + 2;
    for_each_subset(n, 1, std::min(small_cap, n), [&](const VertexSet& omega) {
        if (auto p = verify_pmc(g, omega))
            cat.insert(std::move(*p));
    });
    if (small_cap >= n)
        return cat; // (a) already enumerated every subset

    // (b) quasi-cliques of g itself
    PmcCatalog quasi = enumerate_quasi_cliques(g, k, 5 * t);
    for (const auto& [omega, pmc] : quasi.entries())
        cat.insert(pmc);

    // (c) large vital PMCs have a witness w outside with |omega \ N(w)| at
    // most 5t+2; they become quasi-cliques once N(w) is completed.
    for (int w = 0; w < n; ++w) {
        VertexSet nw = vs_from_bits(g.row(w));
        Graph h = complete_set(g, nw);
        PmcCatalog sub(h.fingerprint(), k);
        for_each_subset(n, 0, 5 * t + 2, [&](const VertexSet& z) {
            quasi_candidates_for_z(h, z, sub);
        });
        for (const auto& [omega, pmc] : sub.entries()) {
            if (auto p = verify_pmc(g, omega))
                cat.insert(std::move(*p));
        }
    }
    return cat;
}

} // namespace fillin

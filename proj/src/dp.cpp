#include "fillin/dp.hpp"

#include <algorithm>
#include <limits>

#include "fillin/chordal.hpp"
#include "fillin/errors.hpp"
#include "fillin/sandwich.hpp"

namespace fillin {

namespace {

int sat_add(int a, int b, int cap)
{
    return std::min(a + b, cap);
}

// Non-edges inside omega, pairs fully inside s excluded (the parent PMC
// already paid for them).
int relative_fill(const Graph& g, const VertexSet& omega, const VertexSet& s)
{
    int count = 0;
    for (std::size_t i = 0; i < omega.size(); ++i)
        for (std::size_t j = i + 1; j < omega.size(); ++j)
            if (!g.has_edge(omega[i], omega[j]) &&
                !(vs_contains(s, omega[i]) && vs_contains(s, omega[j])))
                ++count;
    return count;
}

// Components of g[(s u c) \ omega].
std::vector<VertexSet> inner_components(const Graph& g, const VertexSet& sc,
                                        const VertexSet& omega)
{
    Bits keep = bits_from_vs(g.vertex_count(), sc);
    keep.and_not(bits_from_vs(g.vertex_count(), omega));
    Bits removed(g.vertex_count());
    removed.fill_all();
    removed.and_not(keep);
    return components(g, vs_from_bits(removed));
}

void check_catalog(const Graph& g, const PmcCatalog& catalog)
{
    if (catalog.graph_fingerprint() != g.fingerprint())
        throw std::invalid_argument("dp: catalog was built from a different graph");
}

} // namespace

int chordless_cycle_lower_bound(const Graph& g)
{
    Graph cur = g;
    int lb = 0;
    while (auto cyc = find_chordless_cycle(cur)) {
        lb += static_cast<int>(cyc->size()) - 3;
        VertexSet all(cur.vertex_count());
        for (int i = 0; i < cur.vertex_count(); ++i)
            all[i] = i;
        VertexSet cyc_sorted = *cyc;
        std::sort(cyc_sorted.begin(), cyc_sorted.end());
        cur = cur.induced(vs_difference(all, cyc_sorted)).first;
    }
    return lb;
}

int mfi_block(const Graph& g, const Block& b, const PmcCatalog& catalog,
              DpTable& table, int k)
{
    check_catalog(g, catalog);
    auto it = table.memo.find(b);
    if (it != table.memo.end())
        return it->second.value;

    const int cap = k + 1;
    VertexSet sc = vs_union(b.s, b.c);
    Bits s_bits = bits_from_vs(g.vertex_count(), b.s);
    Bits sc_bits = bits_from_vs(g.vertex_count(), sc);

    DpEntry entry{cap, std::nullopt};
    for (const auto& [omega, pmc] : catalog.entries()) {
        Bits ob = bits_from_vs(g.vertex_count(), omega);
        if (!s_bits.is_subset_of(ob) || !ob.is_subset_of(sc_bits))
            continue;
        if (static_cast<int>(omega.size()) == static_cast<int>(b.s.size()))
            continue; // need strict superset of s
        int total = std::min(relative_fill(g, omega, b.s), cap);
        for (const auto& child : inner_components(g, sc, omega)) {
            if (total >= cap)
                break;
            Block cb{neighborhood(g, child), child};
            total = sat_add(total, mfi_block(g, cb, catalog, table, k), cap);
        }
        if (total < entry.value) {
            entry.value = total;
            entry.choice = omega;
        }
    }
    if (entry.value > k)
        entry.choice.reset();
    table.memo.emplace(b, entry);
    return entry.value;
}

int mfi_root(const Graph& g, const PmcCatalog& catalog, int k, DpTable& table)
{
    check_catalog(g, catalog);
    if (g.vertex_count() == 0) {
        table.root = DpEntry{0, std::nullopt};
        return 0;
    }
    if (components(g, {}).size() != 1)
        throw std::invalid_argument("mfi_root: graph must be connected");

    const int cap = k + 1;
    DpEntry root{cap, std::nullopt};
    for (const auto& [omega, pmc] : catalog.entries()) {
        int total = std::min(pmc.fill, cap);
        for (const auto& comp : components(g, omega)) {
            if (total >= cap)
                break;
            Block cb{neighborhood(g, comp), comp};
            total = sat_add(total, mfi_block(g, cb, catalog, table, k), cap);
        }
        if (total < root.value) {
            root.value = total;
            root.choice = omega;
        }
    }
    if (root.value > k)
        root.choice.reset();
    table.root = root;
    return root.value;
}

namespace {

void collect_pairs(const Graph& g, const VertexSet& omega, const VertexSet& exclude_inside,
                   std::set<EdgePair>& fill)
{
    for (std::size_t i = 0; i < omega.size(); ++i) {
        for (std::size_t j = i + 1; j < omega.size(); ++j) {
            if (g.has_edge(omega[i], omega[j]))
                continue;
            if (vs_contains(exclude_inside, omega[i]) &&
                vs_contains(exclude_inside, omega[j]))
                continue;
            if (!fill.insert(EdgePair(omega[i], omega[j])).second)
                throw internal_error("reconstruct: overlapping fill contributions");
        }
    }
}

void walk_block(const Graph& g, const Block& b, DpTable& table,
                std::set<EdgePair>& fill)
{
    auto it = table.memo.find(b);
    if (it == table.memo.end() || !it->second.choice)
        throw internal_error("reconstruct: missing block choice");
    const VertexSet& omega = *it->second.choice;
    collect_pairs(g, omega, b.s, fill);
    for (const auto& child : inner_components(g, vs_union(b.s, b.c), omega))
        walk_block(g, Block{neighborhood(g, child), child}, table, fill);
}

} // namespace

std::optional<FillSolution> reconstruct(const Graph& g, const PmcCatalog& catalog,
                                        DpTable& table, int k)
{
    check_catalog(g, catalog);
    if (!table.root)
        throw std::invalid_argument("reconstruct: run mfi_root first");
    if (table.root->value > k || !table.root->choice)
        return std::nullopt;

    std::set<EdgePair> fill;
    const VertexSet& omega = *table.root->choice;
    collect_pairs(g, omega, {}, fill);
    for (const auto& comp : components(g, omega))
        walk_block(g, Block{neighborhood(g, comp), comp}, table, fill);

    if (static_cast<int>(fill.size()) != table.root->value)
        throw internal_error("reconstruct: fill size disagrees with DP value");
    FillSolution sol;
    sol.fill.assign(fill.begin(), fill.end());
    if (!is_chordal(g.with_edges(sol.fill)))
        throw internal_error("reconstruct: result is not chordal");
    return sol;
}

namespace detail {

std::optional<std::vector<EdgePair>> solve_component(const Graph& g, int budget,
                                                     const EdgeFilter& admit,
                                                     const Graph* clique_host,
                                                     PipelineStats* stats)
{
    auto leaves = reduce_to_nonreducible(FillInInstance{g, budget, {}}, admit);
    if (stats)
        stats->branch_leaves += static_cast<long long>(leaves.size());
    constexpr int kInf = std::numeric_limits<int>::max();
    int best_total = kInf;
    std::vector<EdgePair> best_fill;
    for (const auto& leaf : leaves) {
        int forced = static_cast<int>(leaf.forced.size());
        if (forced >= best_total)
            continue;
        if (chordless_cycle_lower_bound(leaf.graph) > leaf.k)
            continue;
        PmcCatalog catalog = enumerate_vital_pmcs(leaf.graph, leaf.k);
        if (stats)
            stats->catalog_entries += static_cast<long long>(catalog.size());
        if (clique_host) {
            PmcCatalog filtered(catalog.graph_fingerprint(), catalog.budget());
            for (const auto& [omega, pmc] : catalog.entries())
                if (is_clique(*clique_host, omega))
                    filtered.insert(pmc);
            catalog = std::move(filtered);
        }
        DpTable table;
        int value = mfi_root(leaf.graph, catalog, leaf.k, table);
        if (value > leaf.k)
            continue;
        int total = forced + value;
        if (total >= best_total)
            continue;
        auto sol = reconstruct(leaf.graph, catalog, table, leaf.k);
        if (!sol)
            throw internal_error("solve: reconstruct failed after feasible DP value");
        best_total = total;
        best_fill.assign(leaf.forced.begin(), leaf.forced.end());
        best_fill.insert(best_fill.end(), sol->fill.begin(), sol->fill.end());
    }
    if (best_total == kInf)
        return std::nullopt;
    std::sort(best_fill.begin(), best_fill.end());
    return best_fill;
}

} // namespace detail

std::optional<FillSolution> solve(const Graph& g, int k, PipelineStats* stats)
{
    if (k < 0)
        return std::nullopt;
    KernelResult kr = fillin_kernel(g, k);
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
            auto fill = detail::solve_component(sub, remaining, {}, nullptr, stats);
            if (!fill)
                return std::nullopt;
            remaining -= static_cast<int>(fill->size());
            for (const auto& e : *fill)
                total.insert(EdgePair(kr.vertex_map[ids[e.u]], kr.vertex_map[ids[e.v]]));
        }
    }

    for (const auto& e : total)
        if (g.has_edge(e.u, e.v))
            throw internal_error("solve: fill edge already present in input");
    if (static_cast<int>(total.size()) > k)
        throw internal_error("solve: fill exceeds budget");
    FillSolution sol;
    sol.fill.assign(total.begin(), total.end());
    if (!is_chordal(g.with_edges(sol.fill)))
        throw internal_error("solve: final graph is not chordal");
    return sol;
}

} // namespace fillin

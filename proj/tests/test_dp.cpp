#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fillin/chordal.hpp"
#include "fillin/dp.hpp"
#include "fillin/oracles.hpp"
#include "fillin/pmc.hpp"
#include "support.hpp"

using namespace fillin;
using namespace fillin::test;

TEST_CASE("mfi_block on a C4 block")
{
    Graph c4 = cycle_graph(4);
    PmcCatalog cat = enumerate_vital_pmcs(c4, 1);
    DpTable table;
    CHECK(mfi_block(c4, Block{{0, 2}, {1}}, cat, table, 1) == 0);
    CHECK(mfi_block(c4, Block{{0, 2}, {3}}, cat, table, 1) == 0);
}

TEST_CASE("mfi_root values")
{
    Graph c4 = cycle_graph(4);
    PmcCatalog cat = enumerate_vital_pmcs(c4, 1);
    DpTable table;
    CHECK(mfi_root(c4, cat, 1, table) == 1);

    Graph k4 = complete_graph(4);
    PmcCatalog kcat = enumerate_vital_pmcs(k4, 0);
    DpTable ktable;
    CHECK(mfi_root(k4, kcat, 0, ktable) == 0);

    Graph c5 = cycle_graph(5);
    PmcCatalog ccat = enumerate_vital_pmcs(c5, 1);
    DpTable ctable;
    CHECK(mfi_root(c5, ccat, 1, ctable) == 2); // saturated at k+1
}

TEST_CASE("mfi_root refuses foreign catalogs and disconnected graphs")
{
    Graph c4 = cycle_graph(4);
    PmcCatalog cat = enumerate_vital_pmcs(cycle_graph(5), 1);
    DpTable table;
    CHECK_THROWS_AS(mfi_root(c4, cat, 1, table), std::invalid_argument);

    Graph two(2, {}); // two isolated vertices
    PmcCatalog tcat = enumerate_vital_pmcs(two, 1);
    DpTable ttable;
    CHECK_THROWS_AS(mfi_root(two, tcat, 1, ttable), std::invalid_argument);
}

TEST_CASE("reconstruct on C4 and C5")
{
    Graph c4 = cycle_graph(4);
    PmcCatalog cat = enumerate_vital_pmcs(c4, 1);
    DpTable table;
    mfi_root(c4, cat, 1, table);
    auto sol = reconstruct(c4, cat, table, 1);
    REQUIRE(sol.has_value());
    REQUIRE(sol->fill.size() == 1);
    bool chord02 = sol->fill[0] == EdgePair(0, 2);
    bool chord13 = sol->fill[0] == EdgePair(1, 3);
    CHECK((chord02 || chord13));
    CHECK(is_chordal(c4.with_edges(sol->fill)));

    Graph c5 = cycle_graph(5);
    PmcCatalog ccat = enumerate_vital_pmcs(c5, 1);
    DpTable ctable;
    mfi_root(c5, ccat, 1, ctable);
    CHECK(!reconstruct(c5, ccat, ctable, 1).has_value());
}

TEST_CASE("reconstruct on a chordal graph gives the empty fill")
{
    Graph p4 = path_graph(4);
    PmcCatalog cat = enumerate_vital_pmcs(p4, 0);
    DpTable table;
    CHECK(mfi_root(p4, cat, 0, table) == 0);
    auto sol = reconstruct(p4, cat, table, 0);
    REQUIRE(sol.has_value());
    CHECK(sol->fill.empty());
}

TEST_CASE("solve on the canonical small graphs")
{
    auto c4 = solve(cycle_graph(4), 1);
    REQUIRE(c4.has_value());
    CHECK(c4->size() == 1);

    CHECK(!solve(cycle_graph(5), 1).has_value());
    auto c5 = solve(cycle_graph(5), 2);
    REQUIRE(c5.has_value());
    CHECK(c5->size() == 2);

    auto chordal = solve(path_graph(6), 0);
    REQUIRE(chordal.has_value());
    CHECK(chordal->fill.empty());

    CHECK(!solve(cycle_graph(4), -1).has_value());
}

TEST_CASE("solve handles tiny and disconnected graphs")
{
    auto empty = solve(Graph(0), 0);
    REQUIRE(empty.has_value());
    CHECK(empty->fill.empty());

    // two C4 components need two chords
    std::vector<EdgePair> edges;
    for (int base : {0, 4})
        for (int i = 0; i < 4; ++i)
            edges.emplace_back(base + i, base + (i + 1) % 4);
    Graph two_c4(8, edges);
    CHECK(!solve(two_c4, 1).has_value());
    auto both = solve(two_c4, 2);
    REQUIRE(both.has_value());
    CHECK(both->size() == 2);
    CHECK(is_chordal(two_c4.with_edges(both->fill)));
}

TEST_CASE("solve agrees with the oracle and returns minimum fills (random)")
{
    std::mt19937 rng(446688);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        int k = static_cast<int>(rng() % 5);
        Graph g = random_connected_graph(rng, n, 0.45);
        int mfi = oracle_mfi(g);
        auto sol = solve(g, k);
        CHECK(sol.has_value() == (mfi <= k));
        if (sol) {
            CHECK(sol->size() == mfi);
            CHECK(is_chordal(g.with_edges(sol->fill)));
            for (const auto& e : sol->fill)
                CHECK(!g.has_edge(e.u, e.v));
        }
    }
}

TEST_CASE("solve matches the oracle at larger budgets")
{
    // budgets past 4 push the branch threshold to 3
    std::mt19937 rng(99001);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 5 + static_cast<int>(rng() % 5);
        int k = 5 + static_cast<int>(rng() % 3);
        Graph g = random_connected_graph(rng, n, 0.35);
        int mfi = oracle_mfi(g);
        auto sol = solve(g, k);
        CHECK(sol.has_value() == (mfi <= k));
        if (sol)
            CHECK(sol->size() == mfi);
    }
}

TEST_CASE("solve stays deterministic")
{
    std::mt19937 rng(5555);
    for (int iter = 0; iter < 30; ++iter) {
        Graph g = random_connected_graph(rng, 6, 0.4);
        auto a = solve(g, 3);
        auto b = solve(g, 3);
        CHECK(a.has_value() == b.has_value());
        if (a && b)
            CHECK(a->fill == b->fill);
    }
}

TEST_CASE("chordless cycle lower bound is sound")
{
    CHECK(chordless_cycle_lower_bound(cycle_graph(4)) == 1);
    CHECK(chordless_cycle_lower_bound(cycle_graph(7)) == 4);
    CHECK(chordless_cycle_lower_bound(path_graph(5)) == 0);
    std::mt19937 rng(7777);
    for (int iter = 0; iter < 80; ++iter) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.45);
        CHECK(chordless_cycle_lower_bound(g) <= oracle_mfi(g));
    }
}

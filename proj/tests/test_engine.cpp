#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strongcolor/constructions.hpp"
#include "strongcolor/engine.hpp"
#include "strongcolor/errors.hpp"
#include "strongcolor/oracle.hpp"
#include "test_util.hpp"

#include <string>

using namespace strongcolor;

namespace {

BlockPartition three_blocks_of(int k)
{
    std::vector<std::vector<int>> blocks(3);
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < k; ++i)
            blocks[b].push_back(b * k + i);
    return BlockPartition(std::move(blocks));
}

} // namespace

TEST_CASE("compute_swap_sets")
{
    SUBCASE("empty coloring keeps whole blocks")
    {
        Graph g = Graph::from_edges(6, {{0, 2}, {0, 4}, {2, 4}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        Pivots piv{{0, 2, 4}};
        SwapSets s = compute_swap_sets(g, p, chi, piv);
        CHECK(s.x[0] == std::vector<int>{0, 1});
        CHECK(s.x[1] == std::vector<int>{2, 3});
        CHECK(s.x[2] == std::vector<int>{4, 5});
        CHECK(s.t == std::array<int, 3>{2, 2, 2});
    }
    SUBCASE("isolated pivot keeps its whole block even with colored classes")
    {
        Graph g = Graph::from_edges(6, {{1, 4}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        chi.add_class({1, 3, 5});
        Pivots piv{{0, 2, 4}};
        SwapSets s = compute_swap_sets(g, p, chi, piv);
        CHECK(s.x[0] == std::vector<int>{0, 1}); // pivot 0 is isolated
        CHECK(s.x[1] == std::vector<int>{2, 3});
        CHECK(s.x[2] == std::vector<int>{4});    // pivot 4 sees color of 1
    }
    SUBCASE("pivot triangle with one colored class")
    {
        // v_1 ~ a_2 only: the class-a member of block 1 drops out of X_1
        Graph g = Graph::from_edges(6, {{0, 2}, {0, 4}, {2, 4}, {0, 3}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        chi.add_class({1, 3, 5});
        Pivots piv{{0, 2, 4}};
        SwapSets s = compute_swap_sets(g, p, chi, piv);
        CHECK(s.x[0] == std::vector<int>{0});
        CHECK(s.x[1] == std::vector<int>{2, 3});
        CHECK(s.x[2] == std::vector<int>{4, 5});
    }
}

TEST_CASE("uncolor_triple")
{
    Graph g = testutil::edgeless(12);
    BlockPartition p = three_blocks_of(4);
    Pivots piv{{0, 4, 8}};

    SUBCASE("all three colored")
    {
        PartialColoring chi(g, p);
        chi.add_class({1, 5, 9});   // a
        chi.add_class({2, 6, 10});  // b
        chi.add_class({3, 7, 11});  // c
        uncolor_triple(chi, piv, {1, 6, 11});
        CHECK(chi.class_members(0) == std::array<int, 3>{0, 5, 9});
        CHECK(chi.class_members(1) == std::array<int, 3>{2, 4, 10});
        CHECK(chi.class_members(2) == std::array<int, 3>{3, 7, 8});
        CHECK(!chi.is_colored(1));
        CHECK(!chi.is_colored(6));
        CHECK(!chi.is_colored(11));
        chi.validate();
    }
    SUBCASE("one uncolored member needs no action in its block")
    {
        PartialColoring chi(g, p);
        chi.add_class({1, 5, 9});
        chi.add_class({2, 6, 10});
        uncolor_triple(chi, piv, {1, 6, 8});
        CHECK(chi.class_members(0) == std::array<int, 3>{0, 5, 9});
        CHECK(chi.class_members(1) == std::array<int, 3>{2, 4, 10});
        CHECK(!chi.is_colored(8));
        chi.validate();
    }
    SUBCASE("all uncolored leaves the coloring unchanged")
    {
        PartialColoring chi(g, p);
        chi.add_class({1, 5, 9});
        chi.mark_edits();
        uncolor_triple(chi, piv, {0, 4, 8});
        CHECK(chi.edits_since_mark() == 0);
        CHECK(chi.class_count() == 1);
    }
    SUBCASE("repeated color rejected")
    {
        PartialColoring chi(g, p);
        chi.add_class({1, 5, 9});
        CHECK_THROWS_AS(uncolor_triple(chi, piv, {1, 5, 8}), PreconditionError);
    }
    SUBCASE("non-member rejected")
    {
        Graph h = Graph::from_edges(12, {{0, 5}}); // v_1 sees the color of 5
        PartialColoring chi(h, p);
        chi.add_class({1, 5, 9});
        CHECK_THROWS_AS(uncolor_triple(chi, piv, {1, 6, 10}), PreconditionError);
    }
}

TEST_CASE("enlarge_independent_multicolored")
{
    Graph g = testutil::edgeless(9);
    BlockPartition p = three_blocks_of(3);
    Pivots piv{{0, 3, 6}};

    SUBCASE("base step on the empty coloring")
    {
        PartialColoring chi(g, p);
        enlarge_independent_multicolored(chi, piv, {1, 4, 7});
        CHECK(chi.class_count() == 1);
        CHECK(chi.class_members(0) == std::array<int, 3>{1, 4, 7});
        chi.validate();
    }
    SUBCASE("three distinctly colored members switch then enlarge")
    {
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7});
        chi.add_class({2, 5, 8});
        enlarge_independent_multicolored(chi, piv, {1, 5, 6});
        CHECK(chi.class_count() == 3);
        CHECK(chi.class_members(0) == std::array<int, 3>{0, 4, 7});
        CHECK(chi.class_members(1) == std::array<int, 3>{2, 3, 8});
        CHECK(chi.class_members(2) == std::array<int, 3>{1, 5, 6});
        chi.validate();
    }
    SUBCASE("invariants hold on a 9-vertex instance with one prior class")
    {
        Graph h = Graph::from_edges(9, {{0, 4}, {3, 8}});
        PartialColoring chi(h, p);
        chi.add_class({1, 4, 7});
        enlarge_independent_multicolored(chi, piv, {2, 5, 8});
        CHECK(chi.class_count() == 2);
        chi.validate();
    }
}

TEST_CASE("enlarge_quadruple")
{
    BlockPartition p = three_blocks_of(3);
    Pivots piv{{0, 3, 6}};

    SUBCASE("forced color pattern produces the three replacement classes")
    {
        Graph g = testutil::edgeless(9);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7}); // a
        chi.add_class({2, 5, 8}); // b
        enlarge_quadruple(chi, piv, 0, 1, 2, 1, 5, 2, 7);
        CHECK(chi.class_count() == 3);
        CHECK(chi.class_members(0) == std::array<int, 3>{1, 4, 6}); // {a_1, a_2, v_3}
        CHECK(chi.class_members(1) == std::array<int, 3>{2, 3, 8}); // {b_1, v_2, b_3}
        CHECK(chi.class_members(2) == std::array<int, 3>{0, 5, 7}); // {v_1, b_2, a_3}
        chi.validate();
    }
    SUBCASE("an uncolored vertex delegates to the multicolored route")
    {
        Graph g = testutil::edgeless(9);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7});
        chi.add_class({2, 5, 8});
        enlarge_quadruple(chi, piv, 0, 1, 2, 1, 5, 2, 6);
        CHECK(chi.class_count() == 3);
        CHECK(chi.class_members(2) == std::array<int, 3>{1, 5, 6});
        chi.validate();
    }
    SUBCASE("doubled block in the middle position")
    {
        Graph g = testutil::edgeless(12);
        BlockPartition p4 = three_blocks_of(4);
        Pivots piv4{{0, 4, 8}};
        PartialColoring chi(g, p4);
        chi.add_class({1, 5, 9});  // a
        chi.add_class({2, 6, 10}); // b
        enlarge_quadruple(chi, piv4, 1, 5, 6, 2, 10, 0, 1);
        CHECK(chi.class_count() == 3);
        CHECK(chi.class_members(0) == std::array<int, 3>{0, 5, 9});
        CHECK(chi.class_members(1) == std::array<int, 3>{2, 6, 8});
        CHECK(chi.class_members(2) == std::array<int, 3>{1, 4, 10});
        chi.validate();
    }
}

TEST_CASE("resolve_mixed_triple")
{
    SUBCASE("all members share one color: the class splits")
    {
        Graph g = Graph::from_edges(6, {{0, 2}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        chi.add_class({1, 3, 5});
        Pivots piv{{0, 2, 4}};
        StepOutcome out = resolve_mixed_triple(chi, piv, {1, 3, 5});
        CHECK(out.enlarged);
        CHECK(chi.class_count() == 2);
        CHECK(chi.class_members(0) == std::array<int, 3>{1, 2, 4}); // {x_1, v_2, v_3}
        CHECK(chi.class_members(1) == std::array<int, 3>{0, 3, 5}); // {v_1, x_2, x_3}
        chi.validate();
    }
    SUBCASE("pair on the pivot edge with the third member adjacent to both: repivot")
    {
        Graph g = Graph::from_edges(9, {{0, 3}, {0, 8}, {3, 8}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7});
        Pivots piv{{0, 3, 6}};
        StepOutcome out = resolve_mixed_triple(chi, piv, {1, 4, 8});
        CHECK(!out.enlarged);
        CHECK(out.pivots.v == std::array<int, 3>{0, 3, 8});
        CHECK(chi.class_count() == 1); // same classes, new pivots form a K_3
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(g.has_edge(out.pivots.v[i], out.pivots.v[j]));
        chi.validate();
    }
    SUBCASE("repivot substitutes the colored third member out of its class")
    {
        Graph g = Graph::from_edges(9, {{0, 3}, {0, 8}, {3, 8}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7}); // a
        chi.add_class({2, 5, 8}); // d, holds the third member
        Pivots piv{{0, 3, 6}};
        StepOutcome out = resolve_mixed_triple(chi, piv, {1, 4, 8});
        CHECK(!out.enlarged);
        CHECK(out.pivots.v == std::array<int, 3>{0, 3, 8});
        CHECK(chi.class_members(1) == std::array<int, 3>{2, 5, 6});
        chi.validate();
    }
    SUBCASE("uncolored triple enlarges directly")
    {
        Graph g = Graph::from_edges(6, {{0, 2}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        Pivots piv{{0, 2, 4}};
        StepOutcome out = resolve_mixed_triple(chi, piv, {1, 3, 5});
        CHECK(out.enlarged);
        CHECK(chi.class_count() == 1);
        chi.validate();
    }
    SUBCASE("pair off the pivot edge splits around the off vertices")
    {
        // x_1, x_2 share color a but v_1 !~ v_2; the only pivot edge is v_1 v_3
        Graph g = Graph::from_edges(9, {{0, 6}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7}); // a
        Pivots piv{{0, 3, 6}};
        StepOutcome out = resolve_mixed_triple(chi, piv, {1, 4, 8});
        CHECK(out.enlarged);
        CHECK(chi.class_count() == 2);
        chi.validate();
    }
}

TEST_CASE("case1_enlarge")
{
    SUBCASE("empty coloring with a pivot triangle")
    {
        Graph g = Graph::from_edges(12, {{0, 4}, {0, 8}, {4, 8}});
        BlockPartition p = three_blocks_of(4);
        PartialColoring chi(g, p);
        case1_enlarge(g, p, chi, Pivots{{0, 4, 8}});
        CHECK(chi.class_count() == 1);
        chi.validate();
    }
    SUBCASE("maximizer outside block 1 exercises the relabeling path")
    {
        Graph g = Graph::from_edges(9,
            {{0, 3}, {0, 6}, {3, 6}, {4, 7}, {4, 8}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        case1_enlarge(g, p, chi, Pivots{{0, 3, 6}});
        CHECK(chi.class_count() == 1);
        CHECK(chi.class_members(0) == std::array<int, 3>{1, 4, 6});
        chi.validate();
    }
    SUBCASE("choice sets empty only when the size precondition is violated")
    {
        Graph g = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
        BlockPartition p({{0}, {1}, {2}});
        PartialColoring chi(g, p);
        CHECK_THROWS_AS(case1_enlarge(g, p, chi, Pivots{{0, 1, 2}}),
            InternalContradiction);
    }
}

TEST_CASE("case2_step")
{
    SUBCASE("empty coloring with a two-edge pivot path enlarges")
    {
        Graph g = Graph::from_edges(6, {{0, 2}, {0, 4}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        StepOutcome out = case2_step(g, p, chi, Pivots{{0, 2, 4}});
        CHECK(out.enlarged);
        CHECK(chi.class_count() == 1);
        chi.validate();
    }
    SUBCASE("mid-run instance keeps all invariants")
    {
        Graph g = Graph::from_edges(15, {{0, 5}, {0, 10}, {1, 6}, {2, 12}});
        BlockPartition p = three_blocks_of(5);
        PartialColoring chi(g, p);
        chi.add_class({1, 7, 11});
        chi.add_class({2, 8, 13});
        StepOutcome out = case2_step(g, p, chi, Pivots{{0, 5, 10}});
        CHECK(out.enlarged);
        CHECK(chi.class_count() == 3);
        chi.validate();
    }
}

TEST_CASE("case3_step")
{
    SUBCASE("multicolored transversal path: repivot to two or more edges")
    {
        Graph g = Graph::from_edges(6, {{0, 2}, {1, 3}, {1, 5}});
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        StepOutcome out = case3_step(g, p, chi, Pivots{{0, 2, 4}});
        CHECK(!out.enlarged);
        CHECK(out.pivots.v == std::array<int, 3>{1, 3, 5});
        int e = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.has_edge(out.pivots.v[i], out.pivots.v[j]))
                    ++e;
        CHECK(e >= 2);
        chi.validate();
    }
    SUBCASE("same-colored path ends with an uncolored middle")
    {
        Graph g = Graph::from_edges(9, {{0, 3}, {2, 4}, {2, 7}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7}); // a
        StepOutcome out = case3_step(g, p, chi, Pivots{{0, 3, 6}});
        CHECK(!out.enlarged);
        CHECK(out.pivots.v == std::array<int, 3>{2, 4, 7});
        CHECK(chi.class_members(0) == std::array<int, 3>{1, 3, 6}); // {a_1, v_2, v_3}
        chi.validate();
    }
    SUBCASE("same-colored path ends with a colored middle frees two classes")
    {
        Graph g = Graph::from_edges(9, {{0, 3}, {2, 4}, {2, 7}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        chi.add_class({1, 4, 7}); // a, the path ends
        chi.add_class({2, 5, 8}); // b, holds the middle
        StepOutcome out = case3_step(g, p, chi, Pivots{{0, 3, 6}});
        CHECK(!out.enlarged);
        CHECK(out.pivots.v == std::array<int, 3>{2, 4, 7});
        CHECK(chi.class_members(0) == std::array<int, 3>{1, 3, 6}); // {a_1, v_2, v_3}
        CHECK(chi.class_members(1) == std::array<int, 3>{0, 5, 8}); // {v_1, b_2, b_3}
        chi.validate();
    }
    SUBCASE("no transversal path: an independent transversal is found and delegated")
    {
        Graph g = Graph::from_edges(9, {{0, 3}});
        BlockPartition p = three_blocks_of(3);
        PartialColoring chi(g, p);
        // confirm by exhaustion that an independent transversal exists
        bool exists = false;
        for (int a = 0; a < 3 && !exists; ++a)
            for (int b = 3; b < 6 && !exists; ++b)
                for (int c = 6; c < 9 && !exists; ++c)
                    exists = !g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c);
        REQUIRE(exists);
        StepOutcome out = case3_step(g, p, chi, Pivots{{0, 3, 6}});
        CHECK(out.enlarged);
        CHECK(chi.class_count() == 1);
        CHECK(chi.class_members(0) == std::array<int, 3>{0, 4, 6});
        chi.validate();
    }
    SUBCASE("blocked configuration raises the diagnostic contradiction")
    {
        // blocks of size 1 violate the solver bound, forcing the dead end
        Graph g = Graph::from_edges(3, {{0, 1}});
        BlockPartition p({{0}, {1}, {2}});
        PartialColoring chi(g, p);
        try {
            case3_step(g, p, chi, Pivots{{0, 1, 2}});
            FAIL("expected InternalContradiction");
        } catch (const InternalContradiction& e) {
            CHECK(e.dump.find("B1") != std::string::npos);
            CHECK(e.dump.find("pivots") != std::string::npos);
        }
    }
}

TEST_CASE("manual chain: repivot from a mixed triple feeds case 1")
{
    Graph g = Graph::from_edges(9, {{0, 3}, {0, 6}, {0, 8}, {3, 8}});
    BlockPartition p = three_blocks_of(3);
    PartialColoring chi(g, p);
    chi.add_class({1, 4, 7});
    Pivots piv{{0, 3, 6}};
    REQUIRE(g.has_edge(0, 3));
    StepOutcome out = resolve_mixed_triple(chi, piv, {1, 4, 8});
    REQUIRE(!out.enlarged);
    case1_enlarge(g, p, chi, out.pivots);
    CHECK(chi.class_count() == 2);
    chi.validate();
}

TEST_CASE("enlarge_once")
{
    SUBCASE("independent pivots get a fresh class directly")
    {
        Graph g = testutil::edgeless(6);
        BlockPartition p = three_blocks_of(2);
        PartialColoring chi(g, p);
        EngineStats stats;
        enlarge_once(g, p, chi, &stats);
        CHECK(chi.class_count() == 1);
        CHECK(stats.direct == 1);
        CHECK(chi.class_members(0) == std::array<int, 3>{0, 2, 4});
    }
    SUBCASE("full run colors everything in exactly k calls")
    {
        for (uint64_t seed = 1; seed <= 25; ++seed) {
            SplitMix64 rng(seed);
            const int delta = 1 + static_cast<int>(rng.below(4));
            const int k = 2 * delta + static_cast<int>(rng.below(3));
            const int n = 2 * k + 1 + static_cast<int>(rng.below(static_cast<uint64_t>(k)));
            Graph g = random_bounded_degree_graph(n, delta, seed * 13);
            BlockPartition p = random_equal_partition(3 * k, k, seed * 17);
            Graph padded(3 * k);
            for (auto [u, v] : g.edges())
                padded.add_edge(u, v);
            PartialColoring chi(padded, p);
            EngineStats stats;
            int calls = 0;
            while (!chi.complete()) {
                enlarge_once(padded, p, chi, &stats);
                ++calls;
                chi.validate();
            }
            CHECK(calls == k);
            CHECK(chi.class_count() == k);
            CHECK(stats.max_chain <= 3);
            CHECK(stats.max_edits <= 12);
            CHECK(static_cast<bool>(
                verify_strong_coloring(padded, p, chi.to_strong_coloring())));
        }
    }
}

TEST_CASE("strong_coloring regimes")
{
    SUBCASE("single block: all distinct colors")
    {
        Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        BlockPartition p({{0, 1, 2, 3, 4, 5, 6, 7}});
        StrongColoring c = strong_coloring(star, p);
        CHECK(static_cast<bool>(verify_strong_coloring(star, p, c)));
    }
    SUBCASE("two blocks: every partition of the padded K_{2,2} + isolated works")
    {
        Graph g(6);
        for (auto [u, v] : testutil::complete_bipartite(2, 2).edges())
            g.add_edge(u, v);
        int checked = 0;
        for_each_equal_partition(8, 2, 4, [&](const std::vector<std::vector<int>>& blocks) {
            BlockPartition p(blocks);
            StrongColoring c = strong_coloring(g, p);
            CHECK(static_cast<bool>(verify_strong_coloring(g, p, c)));
            CHECK(color_partition_exact(g, p).has_value());
            ++checked;
            return false;
        });
        CHECK(checked == 35);
    }
    SUBCASE("three blocks at n = 60, delta = 12")
    {
        Graph g = random_bounded_degree_graph(60, 12, 2024);
        const int k = 24;
        BlockPartition p = random_equal_partition(72, k, 99);
        EngineStats stats;
        StrongColoring c = strong_coloring(g, p, &stats);
        CHECK(static_cast<bool>(verify_strong_coloring(g, p, c)));
        CHECK(stats.enlarge_calls == k);
    }
    SUBCASE("regime gate errors")
    {
        Graph g = testutil::cycle(6); // delta 2
        CHECK_THROWS_AS(strong_coloring(g, adversarial_partition(2, 6, 3)),
            UnsupportedRegime);
        Graph sparse = Graph::from_edges(12, {{0, 1}});
        CHECK_THROWS_AS(strong_coloring(sparse, random_equal_partition(12, 2, 1)),
            UnsupportedRegime);
        CHECK_THROWS_AS(strong_coloring(g, three_blocks_of(4)), PreconditionError);
    }
    SUBCASE("engine success agrees with the oracle at desk scale")
    {
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            SplitMix64 rng(seed);
            const int n = 4 + static_cast<int>(rng.below(5));
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.below(100) < 30)
                        g.add_edge(u, v);
            const int delta = max_degree(g);
            if (delta < 1)
                continue;
            const int k = 2 * delta;
            const int padded = ((n + k - 1) / k) * k;
            if (padded > 12 || padded / k > 3)
                continue;
            BlockPartition p = random_equal_partition(padded, k, seed * 7);
            StrongColoring c = strong_coloring(g, p);
            CHECK(static_cast<bool>(verify_strong_coloring(g, p, c)));
            CHECK(color_partition_exact(g, p).has_value());
        }
    }
}

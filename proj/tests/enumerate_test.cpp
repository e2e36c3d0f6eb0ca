#include "cdpoly/cdpoly.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace cdpoly;

namespace {

std::set<std::uint64_t> as_masks(const std::vector<BipartiteSubgraph>& hs)
{
    std::set<std::uint64_t> out;
    for (const auto& h : hs) out.insert(h.vertices.words()[0]);
    return out;
}

}  // namespace

TEST(EnumBipartite, Examples)
{
    auto k1 = enum_bipartite(Graph(1), Anchors::one(0));
    ASSERT_EQ(k1.size(), 1U);
    EXPECT_EQ(k1[0].class_a, VertexSet::single(0));
    EXPECT_EQ(k1[0].a(), 1);
    EXPECT_EQ(k1[0].b(), 0);

    auto k2 = enum_bipartite(graphs::complete(2), Anchors::two(0, 1));
    ASSERT_EQ(k2.size(), 1U);
    EXPECT_EQ(k2[0].vertices, VertexSet::first(2));
    EXPECT_EQ(k2[0].dist_uv, Distance(1));

    auto p3 = enum_bipartite(graphs::path(3));
    EXPECT_EQ(p3.size(), 6U);
    EXPECT_EQ(std::count_if(p3.begin(), p3.end(), [](const auto& h) { return h.order() == 1; }), 3);
    EXPECT_EQ(std::count_if(p3.begin(), p3.end(), [](const auto& h) { return h.order() == 2; }), 2);

    auto k3 = enum_bipartite(graphs::complete(3));
    EXPECT_EQ(k3.size(), 6U);
    for (const auto& h : k3) EXPECT_LE(h.order(), 2);

    EXPECT_THROW(enum_bipartite(graphs::complete(2), Anchors::two(1, 1)), std::invalid_argument);
    EXPECT_THROW(enum_bipartite(graphs::complete(2), Anchors::one(2)), std::out_of_range);
}

TEST(EnumBipartite, MatchesSubsetScan)
{
    Lcg64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(7));
        Graph g = random_gnp(n, {static_cast<std::uint32_t>(1 + rng.below(3)), 5}, rng);
        EXPECT_EQ(as_masks(enum_bipartite(g)), oracle::bipartite_sets(g, 0));
        const int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n - 1));
        if (v >= u) ++v;
        EXPECT_EQ(as_masks(enum_bipartite(g, Anchors::one(u))), oracle::bipartite_sets(g, 1ULL << u));
        EXPECT_EQ(as_masks(enum_bipartite(g, Anchors::two(u, v))),
                  oracle::bipartite_sets(g, (1ULL << u) | (1ULL << v)));
    }
}

TEST(EnumBipartite, NoDuplicatesAndValidClasses)
{
    Lcg64 rng(78);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnp(9, {1, 3}, rng);
        auto hs = enum_bipartite(g);
        for (std::size_t i = 1; i < hs.size(); ++i) EXPECT_NE(hs[i - 1].vertices, hs[i].vertices);
        for (const auto& h : hs) {
            EXPECT_EQ(h.class_a | h.class_b, h.vertices);
            EXPECT_FALSE(h.class_a.intersects(h.class_b));
            EXPECT_TRUE(is_independent(g, h.class_a));
            EXPECT_TRUE(is_independent(g, h.class_b));
            EXPECT_TRUE(is_connected(g, h.vertices));
            EXPECT_TRUE(h.class_a.test(h.vertices.lowest()));
        }
    }
}

TEST(EnumBipartite, AnchorClassAndParityLaw)
{
    Lcg64 rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnp(9, {2, 5}, rng);
        for (int u = 0; u < 9; ++u) {
            for (const auto& h : enum_bipartite(g, Anchors::one(u))) EXPECT_TRUE(h.class_a.test(u));
            for (int v = 0; v < 9; ++v) {
                if (v == u) continue;
                for (const auto& h : enum_bipartite(g, Anchors::two(u, v))) {
                    ASSERT_TRUE(h.dist_uv && h.dist_uv->finite());
                    EXPECT_TRUE(h.class_a.test(u));
                    EXPECT_EQ(h.dist_uv->odd(), h.class_b.test(v));
                    const auto sub = induced(g, h.vertices);
                    const auto d = oracle::all_distances(sub.graph);
                    int iu = 0, iv = 0;
                    for (std::size_t i = 0; i < sub.parent.size(); ++i) {
                        if (sub.parent[i] == u) iu = static_cast<int>(i);
                        if (sub.parent[i] == v) iv = static_cast<int>(i);
                    }
                    EXPECT_EQ(h.dist_uv->value(), d[iu][iv]);
                }
            }
        }
    }
}

TEST(EnumBipartite, ClawFreeGraphsYieldPathsAndCycles)
{
    const auto levels = graphs_by_order(7, [](const Graph& g) { return is_claw_free(g).claw_free; });
    for (const auto& level : levels)
        for (const Graph& g : level)
            for (const auto& h : enum_bipartite(g)) {
                for (int v : h.vertices) EXPECT_LE((g.neighbors(v) & h.vertices).count(), 2);
                EXPECT_LE(std::abs(h.a() - h.b()), 1);
            }
}

TEST(EnumPaths, Examples)
{
    EXPECT_EQ(enum_paths(Graph(1), 0), (std::vector<SimplePath>{{0}}));
    EXPECT_EQ(enum_paths(graphs::path(3), 0), (std::vector<SimplePath>{{0}, {0, 1}, {0, 1, 2}}));
    EXPECT_EQ(enum_paths(graphs::cycle(4), 0, 2), (std::vector<SimplePath>{{0, 1, 2}, {0, 3, 2}}));
    EXPECT_EQ(enum_paths(graphs::complete(2), 0, 1), (std::vector<SimplePath>{{0, 1}}));
    EXPECT_THROW(enum_paths(graphs::path(3), 1, 1), std::invalid_argument);
}

TEST(EnumPaths, CountInCompleteGraphs)
{
    for (int n = 1; n <= 7; ++n) {
        long long expected = 0, term = 1;
        for (int k = 0; k <= n - 1; ++k) {
            expected += term;
            term *= n - 1 - k;
        }
        EXPECT_EQ(static_cast<long long>(enum_paths(graphs::complete(n), 0).size()), expected);
    }
}

TEST(EnumPaths, MatchesPermutationScan)
{
    Lcg64 rng(80);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_gnp(7, {1, 2}, rng);
        const int u = static_cast<int>(rng.below(7));
        const int v = (u + 1 + static_cast<int>(rng.below(6))) % 7;
        EXPECT_EQ(enum_paths(g, u), oracle::paths_by_permutation(g, u));
        EXPECT_EQ(enum_paths(g, u, v), oracle::paths_by_permutation(g, u, v));
    }
}

TEST(EnumOddPaths, Examples)
{
    EXPECT_EQ(enum_odd_paths(Graph(1)).size(), 1U);
    EXPECT_EQ(enum_odd_paths(graphs::path(3)), (std::vector<SimplePath>{{0}, {0, 1, 2}, {1}, {2}}));
    EXPECT_EQ(enum_odd_paths(graphs::complete(2)).size(), 2U);
}

TEST(PathMultiplicities, AgreeWithEnumeratedPaths)
{
    Lcg64 rng(81);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_gnp(8, {1, 2}, rng);
        const int u = static_cast<int>(rng.below(8));
        std::map<std::pair<VertexSet, int>, long long> expected;
        for (const auto& p : enum_paths(g, u)) ++expected[{VertexSet::of(p), p.back()}];
        std::map<std::pair<VertexSet, int>, long long> got;
        const PathMultiplicities table(g, u);
        for (const auto& e : table.entries())
            got[{e.set, e.end}] = static_cast<long long>(e.count);
        EXPECT_EQ(got, expected);
    }
}

#include "cdpoly/cdpoly.hpp"

#include <gtest/gtest.h>

using namespace cdpoly;

TEST(Lcg64, FixedSequence)
{
    Lcg64 a(42), b(42);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
    // state' = state * 6364136223846793005 + 1442695040888963407, output = high 32 bits.
    Lcg64 c(0);
    EXPECT_EQ(c.next(), static_cast<std::uint32_t>(1442695040888963407ULL >> 32));
    EXPECT_THROW(c.below(0), std::invalid_argument);
}

TEST(Isomorphism, DetectsRelabelling)
{
    Lcg64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_gnp(9, {1, 2}, rng);
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 8; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint32_t>(i + 1))]);
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
        EXPECT_TRUE(isomorphic(g, Graph::from_edges(9, es)));
    }
    EXPECT_FALSE(isomorphic(graphs::cycle(6), disjoint_union(graphs::cycle(3), graphs::cycle(3))));
    EXPECT_FALSE(isomorphic(graphs::path(4), graphs::star(3)));
}

TEST(Isomorphism, ClassCountsByOrder)
{
    const auto levels = all_graphs_by_order(7);
    std::vector<std::size_t> counts;
    for (const auto& l : levels) counts.push_back(l.size());
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1, 2, 4, 11, 34, 156, 1044}));
}

TEST(Isomorphism, ConnectedClawFreeCounts)
{
    const auto levels = graphs_by_order(7, [](const Graph& g) { return is_claw_free(g).claw_free; });
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 7; ++n)
        counts.push_back(static_cast<std::size_t>(
            std::count_if(levels[n].begin(), levels[n].end(), [](const Graph& g) { return is_connected(g); })));
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1, 2, 5, 14, 50, 191}));
}

TEST(Isomorphism, GraphsByEdgeCount)
{
    // Graphs without isolated vertices: 1, 1, 2, 5, 11, 26 for m = 0..5.
    const auto levels = graphs_by_edge_count(5);
    std::vector<std::size_t> counts;
    for (const auto& l : levels) counts.push_back(l.size());
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 1, 2, 5, 11, 26}));
}

TEST(Corpus, DeterministicForSeed)
{
    CorpusSpec spec;
    spec.model = GnpModel{8, 12, {{1, 5}, {1, 2}, {4, 5}}, false};
    spec.count = 30;
    spec.seed = 7;
    const auto a = generate_corpus(spec);
    const auto b = generate_corpus(spec);
    ASSERT_EQ(a.size(), 30U);
    EXPECT_EQ(a, b);
    spec.seed = 8;
    EXPECT_NE(generate_corpus(spec), a);
}

TEST(Corpus, FiltersApply)
{
    CorpusSpec spec;
    spec.model = GnpModel{10, 10, {{1, 2}}, false};
    spec.count = 20;
    spec.seed = 7;
    spec.filters.claw_free = true;
    for (const Graph& g : generate_corpus(spec)) EXPECT_TRUE(is_claw_free(g).claw_free);

    spec.model = GnpModel{6, 12, {{1, 3}}, true};
    spec.filters = {};
    spec.filters.bipartite = true;
    spec.filters.connected = true;
    for (const Graph& g : generate_corpus(spec)) {
        EXPECT_TRUE(is_bipartite(g));
        EXPECT_TRUE(is_connected(g));
    }
}

TEST(Corpus, ExhaustiveAndLineGraphModels)
{
    CorpusSpec spec;
    spec.model = ExhaustiveModel{5};
    EXPECT_EQ(generate_corpus(spec).size(), 34U);
    spec.count = 10;
    EXPECT_EQ(generate_corpus(spec).size(), 10U);
    spec.count = 0;
    spec.model = LineGraphModel{4};
    for (const Graph& g : generate_corpus(spec)) EXPECT_TRUE(is_claw_free(g).claw_free);
    spec.model = ExhaustiveModel{11};
    EXPECT_THROW(generate_corpus(spec), std::invalid_argument);
}

TEST(Probability, Parse)
{
    auto p = parse_probability("4/5");
    EXPECT_EQ(p.num, 4U);
    EXPECT_EQ(p.den, 5U);
    EXPECT_THROW(parse_probability("6/5"), std::invalid_argument);
    EXPECT_THROW(parse_probability("1/0"), std::invalid_argument);
}

TEST(Batch, StableOrderAcrossWorkerCounts)
{
    CorpusSpec spec;
    spec.model = GnpModel{6, 9, {{1, 2}}, false};
    spec.count = 12;
    spec.seed = 3;
    const auto corpus = generate_corpus(spec);
    BatchOptions one;
    BatchOptions four;
    four.workers = 4;
    const auto a = run_batch(corpus, one);
    const auto b = run_batch(corpus, four);
    EXPECT_EQ(a.tsv, b.tsv);
    EXPECT_EQ(a.exit_code, exit_code::kOk);
    EXPECT_EQ(a.failures, 0U);

    BatchOptions certify;
    certify.action = CorpusAction::CertifyAll;
    const auto c = run_batch(corpus, certify);
    EXPECT_EQ(c.tsv.substr(0, c.tsv.find('\n')),
              "id\tgraph6\tn\tm\tclaw_free\tall_real\tdistinct_real_roots\tdegree_squarefree\ttheorem_holds\tstatus");
}

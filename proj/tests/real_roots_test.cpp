#include "cdpoly/cdpoly.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace cdpoly;

namespace {

// Real roots found numerically, clustered to one per distinct value.
int numeric_distinct_real_roots(const UniPoly& p)
{
    std::vector<long double> reals;
    for (auto z : oracle::numeric_roots(p))
        if (std::abs(z.imag()) < 1e-6L) reals.push_back(z.real());
    std::sort(reals.begin(), reals.end());
    int distinct = 0;
    for (std::size_t i = 0; i < reals.size(); ++i)
        if (i == 0 || reals[i] - reals[i - 1] > 1e-5L) ++distinct;
    return distinct;
}

}  // namespace

TEST(SturmCount, Examples)
{
    auto c = sturm_count(UniPoly{1, 2});
    EXPECT_EQ(c.distinct_real_roots, 1);
    EXPECT_TRUE(c.all_real);

    c = sturm_count(UniPoly{1, 0, 1});
    EXPECT_EQ(c.distinct_real_roots, 0);
    EXPECT_FALSE(c.all_real);

    c = sturm_count(UniPoly{1, 4, 3, 1});
    EXPECT_EQ(c.distinct_real_roots, 1);
    EXPECT_EQ(c.degree_squarefree, 3);
    EXPECT_FALSE(c.all_real);

    c = sturm_count(UniPoly{1, 4, 2});
    EXPECT_EQ(c.distinct_real_roots, 2);
    EXPECT_TRUE(c.all_real);

    EXPECT_THROW(sturm_count(UniPoly()), std::invalid_argument);
}

TEST(SturmCount, RepeatedRootsUseSquarefreePart)
{
    // (x+1)^3 (x-2)^2
    const UniPoly p = pow(UniPoly{1, 1}, 3) * pow(UniPoly{-2, 1}, 2);
    auto c = sturm_count(p);
    EXPECT_EQ(c.degree_squarefree, 2);
    EXPECT_EQ(c.distinct_real_roots, 2);
    EXPECT_TRUE(c.all_real);
    // (x^2+1)^2 has repeated non-real roots.
    c = sturm_count(pow(UniPoly{1, 0, 1}, 2));
    EXPECT_EQ(c.degree_squarefree, 2);
    EXPECT_FALSE(c.all_real);
    // Constants have no roots and count as real-rooted.
    EXPECT_TRUE(sturm_count(UniPoly{5}).all_real);
}

TEST(SturmCount, MatchesProductsOfKnownFactors)
{
    Lcg64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly p = UniPoly::one();
        std::set<Rational> roots;
        int complex_pairs = 0;
        for (int k = 0, factors = 1 + static_cast<int>(rng.below(5)); k < factors; ++k) {
            if (rng.chance(1, 4)) {
                p *= UniPoly{static_cast<long long>(1 + rng.below(5)), 0, 1};
                ++complex_pairs;
            } else {
                const long long num = static_cast<long long>(rng.below(21)) - 10;
                const long long den = 1 + static_cast<long long>(rng.below(3));
                p *= UniPoly{-num, den};
                roots.insert(Rational(num, den));
            }
        }
        auto c = sturm_count(p);
        EXPECT_EQ(c.distinct_real_roots, static_cast<int>(roots.size()));
        EXPECT_EQ(c.all_real, complex_pairs == 0);
    }
}

TEST(SturmCount, AgreesWithNumericRootsOnIndependencePolys)
{
    const auto levels = all_graphs_by_order(6);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : levels[n]) {
            const UniPoly p = independence_poly(g);
            auto c = sturm_count(p);
            // Durand-Kerner is unreliable at repeated roots; compare squarefree cases only.
            if (c.degree_squarefree != p.degree()) continue;
            EXPECT_EQ(c.distinct_real_roots, numeric_distinct_real_roots(p)) << render_graph6(g);
        }
}

TEST(IsolateRoots, Examples)
{
    auto c = isolate_roots(sturm_count(UniPoly{1, 2}));
    ASSERT_TRUE(c.isolating_intervals);
    ASSERT_EQ(c.isolating_intervals->size(), 1U);
    const auto& iv = c.isolating_intervals->front();
    EXPECT_LE(iv.lo, Rational(-1, 2));
    EXPECT_GE(iv.hi, Rational(-1, 2));

    c = isolate_roots(sturm_count(UniPoly{1, 4, 2}));
    ASSERT_EQ(c.isolating_intervals->size(), 2U);
    for (const auto& i : *c.isolating_intervals) {
        EXPECT_LT(i.hi, 0);
        const Rational a = c.squarefree_part.evaluate(i.lo), b = c.squarefree_part.evaluate(i.hi);
        EXPECT_LE(a * b, 0);
    }
}

TEST(IsolateRoots, IntervalsAreDisjointNarrowAndBracketRoots)
{
    Lcg64 rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_gnp(8, {1, 2}, rng);
        auto c = isolate_roots(sturm_count(matching_poly(g)));
        const auto& ivs = *c.isolating_intervals;
        EXPECT_EQ(static_cast<int>(ivs.size()), c.distinct_real_roots);
        const Rational width = cauchy_bound(c.squarefree_part) / Rational(BigInt(1) << 20);
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            EXPECT_LE(ivs[i].hi - ivs[i].lo, width);
            if (i > 0) EXPECT_LE(ivs[i - 1].hi, ivs[i].lo);
            const Rational a = c.squarefree_part.evaluate(ivs[i].lo), b = c.squarefree_part.evaluate(ivs[i].hi);
            EXPECT_TRUE(b == 0 || a * b < 0);
        }
    }
}

TEST(CertifyClawFree, Examples)
{
    auto c = certify_claw_free(graphs::star(3));
    EXPECT_FALSE(c.claw_free);
    ASSERT_TRUE(c.witness);
    ASSERT_TRUE(c.cert);
    EXPECT_FALSE(c.cert->all_real);
    EXPECT_FALSE(c.theorem_holds);

    c = certify_claw_free(graphs::cycle(5));
    EXPECT_TRUE(c.claw_free);
    EXPECT_EQ(c.cert->poly, (UniPoly{1, 5, 5}));
    EXPECT_TRUE(c.cert->all_real);
    EXPECT_EQ(c.theorem_holds, true);

    for (const auto& level : graphs_by_edge_count(5))
        for (const Graph& h : level) {
            auto lc = certify_claw_free(line_graph(h));
            EXPECT_TRUE(lc.claw_free);
            EXPECT_EQ(lc.theorem_holds, true);
        }
}

TEST(CertifyClawFree, WithoutCertificateForClaws)
{
    auto c = certify_claw_free(graphs::star(4), false);
    EXPECT_FALSE(c.claw_free);
    EXPECT_FALSE(c.cert);
    EXPECT_FALSE(c.theorem_holds);
}

TEST(HeilmannLieb, MatchingPolynomialsAreRealRooted)
{
    Lcg64 rng(13);
    for (int trial = 0; trial < 60; ++trial) EXPECT_TRUE(sturm_count(matching_poly(random_gnp(9, {1, 2}, rng))).all_real);
}

#ifndef CDPOLY_GPOLY_HPP
#define CDPOLY_GPOLY_HPP

#include "cdpoly/graph.hpp"
#include "cdpoly/poly.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cdpoly {

inline constexpr int kIndependenceOracleMaxVertices = 25;
inline constexpr int kMatchingOracleMaxEdges = 20;

/// Memoized I(G[S], x) and mu(G[S], x) for vertex subsets S of one fixed
/// parent graph. Not thread-safe; use one engine per worker.
class PolyEngine {
public:
    explicit PolyEngine(Graph g) : g_(std::move(g)) {}

    const Graph& graph() const { return g_; }

    /// I(G[s], x), via I(G) = I(G-u) + x I(G-N[u]) pivoting on a
    /// maximum-degree vertex of s (lowest index on ties).
    const UniPoly& independence(const VertexSet& s)
    {
        check_subset(g_, s);
        return independence_rec(s);
    }

    /// I(G - removed, x)
    const UniPoly& independence_without(const VertexSet& removed) { return independence(g_.vertices() - removed); }

    /// mu(G[s], x) = sum_k (-1)^k m_k x^{|s|-2k}, via
    /// mu(G) = x mu(G-u) - sum_{v ~ u} mu(G-u-v).
    const UniPoly& matching(const VertexSet& s)
    {
        check_subset(g_, s);
        return matching_rec(s);
    }

    const UniPoly& matching_without(const VertexSet& removed) { return matching(g_.vertices() - removed); }

    std::size_t memo_entries() const { return ind_.size() + match_.size(); }

private:
    int pivot(const VertexSet& s) const
    {
        int best = -1;
        int best_deg = -1;
        for (int v : s) {
            int d = (g_.neighbors(v) & s).count();
            if (d > best_deg) {
                best = v;
                best_deg = d;
            }
        }
        return best;
    }

    const UniPoly& independence_rec(const VertexSet& s)
    {
        if (auto it = ind_.find(s); it != ind_.end()) return it->second;
        UniPoly out;
        if (s.empty()) {
            out = UniPoly::one();
        } else {
            const int u = pivot(s);
            out = independence_rec(s.without(u));
            out += independence_rec(s - g_.neighbors(u) - VertexSet::single(u)).shifted(1);
        }
        return ind_.emplace(s, std::move(out)).first->second;
    }

    const UniPoly& matching_rec(const VertexSet& s)
    {
        if (auto it = match_.find(s); it != match_.end()) return it->second;
        UniPoly out;
        if (s.empty()) {
            out = UniPoly::one();
        } else {
            const int u = pivot(s);
            const VertexSet rest = s.without(u);
            out = matching_rec(rest).shifted(1);
            for (int v : g_.neighbors(u) & s) out -= matching_rec(rest.without(v));
        }
        return match_.emplace(s, std::move(out)).first->second;
    }

    Graph g_;
    std::unordered_map<VertexSet, UniPoly, VertexSetHash> ind_;
    std::unordered_map<VertexSet, UniPoly, VertexSetHash> match_;
};

inline UniPoly independence_poly(const Graph& g, const VertexSet& s)
{
    PolyEngine e(g);
    return e.independence(s);
}
inline UniPoly independence_poly(const Graph& g) { return independence_poly(g, g.vertices()); }

inline UniPoly matching_poly(const Graph& g, const VertexSet& s)
{
    PolyEngine e(g);
    return e.matching(s);
}
inline UniPoly matching_poly(const Graph& g) { return matching_poly(g, g.vertices()); }

/// Counts independent subsets of s by size, scanning all 2^|s| subsets.
inline UniPoly independence_poly_oracle(const Graph& g, const VertexSet& s)
{
    check_subset(g, s);
    const std::vector<int> vs = s.to_vector();
    const int k = static_cast<int>(vs.size());
    if (k > kIndependenceOracleMaxVertices)
        throw std::length_error("independence oracle limited to " + std::to_string(kIndependenceOracleMaxVertices) +
                                " vertices, got " + std::to_string(k));
    // Local adjacency masks so the scan is a pure bit test.
    std::vector<std::uint32_t> adj(vs.size(), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (g.adjacent(vs[i], vs[j])) adj[i] |= std::uint32_t{1} << j;
    std::vector<long long> counts(static_cast<std::size_t>(k) + 1, 0);
    const std::uint32_t limit = std::uint32_t{1} << k;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        bool independent = true;
        for (std::uint32_t rest = mask; rest && independent; rest &= rest - 1)
            independent = (adj[std::countr_zero(rest)] & mask) == 0;
        if (independent) ++counts[std::popcount(mask)];
    }
    std::vector<BigInt> c(counts.begin(), counts.end());
    return UniPoly(std::move(c));
}
inline UniPoly independence_poly_oracle(const Graph& g) { return independence_poly_oracle(g, g.vertices()); }

/// Enumerates all edge subsets of G[s], keeps matchings, and tallies
/// (-1)^k x^{|s|-2k} per k-matching.
inline UniPoly matching_poly_oracle(const Graph& g, const VertexSet& s)
{
    check_subset(g, s);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (s.test(u) && s.test(v)) es.emplace_back(u, v);
    const int m = static_cast<int>(es.size());
    if (m > kMatchingOracleMaxEdges)
        throw std::length_error("matching oracle limited to " + std::to_string(kMatchingOracleMaxEdges) +
                                " edges, got " + std::to_string(m));
    const int n = s.count();
    std::vector<long long> by_size(static_cast<std::size_t>(n / 2) + 1, 0);
    const std::uint32_t limit = std::uint32_t{1} << m;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        VertexSet covered;
        bool matching = true;
        for (std::uint32_t rest = mask; rest && matching; rest &= rest - 1) {
            auto [u, v] = es[std::countr_zero(rest)];
            if (covered.test(u) || covered.test(v)) matching = false;
            covered.set(u);
            covered.set(v);
        }
        if (matching) ++by_size[std::popcount(mask)];
    }
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < by_size.size(); ++k) c[n - 2 * k] = (k % 2 ? -1 : 1) * BigInt(by_size[k]);
    return UniPoly(std::move(c));
}
inline UniPoly matching_poly_oracle(const Graph& g) { return matching_poly_oracle(g, g.vertices()); }

/// I'(G, x) == sum_u I(G - N[u], x), each side computed separately.
inline bool independence_derivative_check(PolyEngine& engine)
{
    const Graph& g = engine.graph();
    UniPoly lhs = engine.independence(g.vertices()).derivative();
    UniPoly rhs;
    for (int u = 0; u < g.order(); ++u) rhs += engine.independence_without(closed_neighborhood(g, VertexSet::single(u)));
    return lhs == rhs;
}

inline bool independence_derivative_check(const Graph& g)
{
    PolyEngine e(g);
    return independence_derivative_check(e);
}

}  // namespace cdpoly

#endif  // CDPOLY_GPOLY_HPP

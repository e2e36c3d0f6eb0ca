#ifndef CDPOLY_ISOMORPHISM_HPP
#define CDPOLY_ISOMORPHISM_HPP

#include "cdpoly/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cdpoly {

/// Stable colour refinement (1-WL) with canonically numbered colours, plus a
/// 64-bit hash of the whole refinement trace. Isomorphic graphs get equal
/// traces and equal colours on corresponding vertices.
struct Refinement {
    std::vector<int> colour;
    std::uint64_t trace_hash = 0;
};

inline Refinement refine(const Graph& g)
{
    const int n = g.order();
    Refinement r;
    r.colour.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) r.colour[v] = g.degree(v);

    auto mix = [](std::uint64_t h, std::uint64_t v) {
        h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return h * 0xFF51AFD7ED558CCDULL;
    };
    r.trace_hash = mix(0, static_cast<std::uint64_t>(n));

    int classes = -1;
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int round = 0; round <= n; ++round) {
        for (int v = 0; v < n; ++v) {
            auto& sig = signature[v];
            sig.clear();
            for (int w : g.neighbors(v)) sig.push_back(r.colour[w]);
            std::sort(sig.begin(), sig.end());
            sig.insert(sig.begin(), r.colour[v]);
        }
        std::vector<std::vector<int>> distinct(signature.begin(), signature.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            r.colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
        // Trace: each distinct signature with its multiplicity, in canonical order.
        for (const auto& sig : distinct) {
            std::uint64_t count = static_cast<std::uint64_t>(std::count(signature.begin(), signature.end(), sig));
            for (int c : sig) r.trace_hash = mix(r.trace_hash, static_cast<std::uint64_t>(c));
            r.trace_hash = mix(r.trace_hash, 0xABCDEFULL + count);
        }
        const int now = static_cast<int>(distinct.size());
        if (now == classes) break;
        classes = now;
    }
    return r;
}

namespace detail {

inline bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& order,
                               const std::vector<int>& colour_a, const std::vector<int>& colour_b,
                               std::vector<int>& map, VertexSet& used, std::size_t depth)
{
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < b.order(); ++w) {
        if (used.test(w) || colour_b[w] != colour_a[v]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
            const int p = order[i];
            ok = a.adjacent(v, p) == b.adjacent(w, map[p]);
        }
        if (!ok) continue;
        map[v] = w;
        used.set(w);
        if (extend_isomorphism(a, b, order, colour_a, colour_b, map, used, depth + 1)) return true;
        used.reset(w);
    }
    return false;
}

}  // namespace detail

/// Backtracking isomorphism test constrained by refined colours.
inline bool isomorphic(const Graph& a, const Refinement& ra, const Graph& b, const Refinement& rb)
{
    if (a.order() != b.order() || a.size() != b.size() || ra.trace_hash != rb.trace_hash) return false;
    const int n = a.order();
    std::vector<int> size(static_cast<std::size_t>(n) + 1, 0);
    for (int c : ra.colour) ++size[c];
    // Small colour classes first, then prefer vertices adjacent to ones already placed.
    std::vector<int> order;
    VertexSet placed;
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed.test(v)) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            auto key = [&](int x) {
                return std::make_pair(size[ra.colour[x]], -(a.neighbors(x) & placed).count());
            };
            if (key(v) < key(best)) best = v;
        }
        order.push_back(best);
        placed.set(best);
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    VertexSet used;
    return detail::extend_isomorphism(a, b, order, ra.colour, rb.colour, map, used, 0);
}

inline bool isomorphic(const Graph& a, const Graph& b) { return isomorphic(a, refine(a), b, refine(b)); }

/// Keeps one representative per isomorphism class, in insertion order.
class IsomorphismClasses {
public:
    /// True when g was new (and is now stored).
    bool insert(const Graph& g)
    {
        Refinement r = refine(g);
        auto& bucket = buckets_[r.trace_hash];
        for (std::size_t idx : bucket)
            if (isomorphic(g, r, graphs_[idx], refinements_[idx])) return false;
        bucket.push_back(graphs_.size());
        graphs_.push_back(g);
        refinements_.push_back(std::move(r));
        return true;
    }

    const std::vector<Graph>& graphs() const { return graphs_; }
    std::vector<Graph> release() { return std::move(graphs_); }

private:
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
    std::vector<Graph> graphs_;
    std::vector<Refinement> refinements_;
};

/// All graphs on exactly n vertices up to isomorphism that satisfy a
/// hereditary predicate (closed under vertex deletion), grown one vertex at a
/// time. With an always-true predicate this lists every graph.
template <class Keep>
std::vector<std::vector<Graph>> graphs_by_order(int max_n, Keep&& keep)
{
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(0)});
    for (int n = 1; n <= max_n; ++n) {
        IsomorphismClasses classes;
        for (const Graph& base : levels.back()) {
            const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                std::vector<VertexSet> rows(static_cast<std::size_t>(n));
                for (int v = 0; v < n - 1; ++v) {
                    rows[v] = base.neighbors(v);
                    if ((mask >> v) & 1) {
                        rows[v].set(n - 1);
                        rows[n - 1].set(v);
                    }
                }
                Graph g = Graph::from_adjacency(std::move(rows));
                if (keep(g)) classes.insert(g);
            }
        }
        levels.push_back(classes.release());
    }
    return levels;
}

inline std::vector<std::vector<Graph>> all_graphs_by_order(int max_n)
{
    return graphs_by_order(max_n, [](const Graph&) { return true; });
}

/// Graphs with exactly m edges and no isolated vertices, up to isomorphism,
/// for m = 0..max_edges.
inline std::vector<std::vector<Graph>> graphs_by_edge_count(int max_edges)
{
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(0)});
    for (int m = 1; m <= max_edges; ++m) {
        IsomorphismClasses classes;
        for (const Graph& base : levels.back()) {
            const int n = base.order();
            auto with_edge = [&](int extra_vertices, int u, int v) {
                auto es = base.edges();
                es.emplace_back(u, v);
                classes.insert(Graph::from_edges(n + extra_vertices, es));
            };
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!base.adjacent(u, v)) with_edge(0, u, v);
            for (int u = 0; u < n; ++u) with_edge(1, u, n);
            if (n + 2 <= kMaxVertices) with_edge(2, n, n + 1);
        }
        levels.push_back(classes.release());
    }
    return levels;
}

}  // namespace cdpoly

#endif  // CDPOLY_ISOMORPHISM_HPP

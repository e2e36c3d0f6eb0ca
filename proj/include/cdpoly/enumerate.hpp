#ifndef CDPOLY_ENUMERATE_HPP
#define CDPOLY_ENUMERATE_HPP

#include "cdpoly/graph.hpp"
#include "cdpoly/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cdpoly {

/// An induced, connected, bipartite subgraph H with its colour classes.
/// class_a holds the anchor u when one is given, otherwise the lowest vertex of H.
struct BipartiteSubgraph {
    VertexSet vertices;
    VertexSet class_a;
    VertexSet class_b;
    std::optional<int> anchor_u;
    std::optional<int> anchor_v;
    std::optional<Distance> dist_uv;  // d_H(u, v), present iff both anchors are

    int a() const { return class_a.count(); }
    int b() const { return class_b.count(); }
    int order() const { return vertices.count(); }
};

struct Anchors {
    std::optional<int> u;
    std::optional<int> v;

    static Anchors none() { return {}; }
    static Anchors one(int u) { return {u, std::nullopt}; }
    static Anchors two(int u, int v) { return {u, v}; }
};

namespace detail {

// Grows connected sets from `set` by binary branching on frontier vertices:
// each frontier vertex w is first included, then forbidden for the rest of
// the loop. Every connected superset avoiding `forbidden` is reached once.
// The 2-colouring is extended incrementally and a branch dies as soon as w
// sees both colours (odd cycle; bipartiteness is hereditary).
template <class Visit>
void grow_bipartite(const Graph& g, VertexSet set, VertexSet colour_a, VertexSet frontier, VertexSet forbidden,
                    Visit& visit)
{
    visit(set, colour_a);
    while (!frontier.empty()) {
        const int w = frontier.lowest();
        frontier.reset(w);
        const VertexSet& nw = g.neighbors(w);
        const bool sees_a = nw.intersects(colour_a);
        const bool sees_b = nw.intersects(set - colour_a);
        if (!(sees_a && sees_b)) {
            VertexSet next_a = sees_a ? colour_a : colour_a.with(w);
            VertexSet next_set = set.with(w);
            VertexSet next_frontier = frontier | (nw - next_set - forbidden);
            grow_bipartite(g, next_set, next_a, next_frontier, forbidden, visit);
        }
        forbidden.set(w);
    }
}

}  // namespace detail

/// Streams every member of B, B_u or B_{u,v} to `visit` exactly once, in
/// generation order (not sorted). With two anchors, dist_uv is filled.
template <class Visit>
void for_each_bipartite(const Graph& g, const Anchors& anchors, Visit&& visit)
{
    if (anchors.v && !anchors.u) throw std::invalid_argument("second anchor given without the first");
    if (anchors.u) check_vertex(g, *anchors.u);
    if (anchors.v) {
        check_vertex(g, *anchors.v);
        if (*anchors.u == *anchors.v) throw std::invalid_argument("the two anchors must be distinct vertices");
    }

    auto emit = [&](const VertexSet& set, const VertexSet& colour_a) {
        BipartiteSubgraph h;
        h.vertices = set;
        h.class_a = colour_a;
        h.class_b = set - colour_a;
        h.anchor_u = anchors.u;
        h.anchor_v = anchors.v;
        if (anchors.v) {
            if (!set.test(*anchors.v)) return;
            h.dist_uv = distance_within(g, set, *anchors.u, *anchors.v);
        }
        visit(static_cast<const BipartiteSubgraph&>(h));
    };

    if (anchors.u) {
        const int r = *anchors.u;
        const VertexSet root = VertexSet::single(r);
        detail::grow_bipartite(g, root, root, g.neighbors(r), root, emit);
        return;
    }
    for (int r = 0; r < g.order(); ++r) {
        const VertexSet root = VertexSet::single(r);
        const VertexSet below = VertexSet::first(r + 1);
        detail::grow_bipartite(g, root, root, g.neighbors(r) - below, below, emit);
    }
}

/// Materialized enumeration, sorted by vertex bitset.
inline std::vector<BipartiteSubgraph> enum_bipartite(const Graph& g, const Anchors& anchors = Anchors::none())
{
    std::vector<BipartiteSubgraph> out;
    for_each_bipartite(g, anchors, [&](const BipartiteSubgraph& h) { out.push_back(h); });
    std::sort(out.begin(), out.end(),
              [](const BipartiteSubgraph& a, const BipartiteSubgraph& b) { return a.vertices < b.vertices; });
    return out;
}

/// Ordered list of distinct vertices, consecutive ones adjacent.
using SimplePath = std::vector<int>;

namespace detail {

template <class Visit>
void extend_path(const Graph& g, SimplePath& path, VertexSet& used, std::optional<int> target, Visit& visit)
{
    const int end = path.back();
    if (target) {
        if (end == *target) {
            visit(static_cast<const SimplePath&>(path));
            return;
        }
    } else {
        visit(static_cast<const SimplePath&>(path));
    }
    for (int w : g.neighbors(end) - used) {
        path.push_back(w);
        used.set(w);
        extend_path(g, path, used, target, visit);
        used.reset(w);
        path.pop_back();
    }
}

}  // namespace detail

/// DFS over simple paths starting at `from`. Without `to`, every path from
/// `from` is visited, including the one-vertex path (from). With `to`, only
/// paths ending at `to` (at least two vertices).
template <class Visit>
void for_each_path(const Graph& g, int from, std::optional<int> to, Visit&& visit)
{
    check_vertex(g, from);
    if (to) {
        check_vertex(g, *to);
        if (*to == from) throw std::invalid_argument("path endpoints must differ");
    }
    SimplePath path{from};
    VertexSet used = VertexSet::single(from);
    detail::extend_path(g, path, used, to, visit);
}

inline std::vector<SimplePath> enum_paths(const Graph& g, int from, std::optional<int> to = std::nullopt)
{
    std::vector<SimplePath> out;
    for_each_path(g, from, to, [&](const SimplePath& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Undirected simple paths with an odd number of vertices, each once, oriented
/// so the first vertex is smaller than the last. Single vertices included.
inline std::vector<SimplePath> enum_odd_paths(const Graph& g)
{
    std::vector<SimplePath> out;
    for (int s = 0; s < g.order(); ++s)
        for_each_path(g, s, std::nullopt, [&](const SimplePath& p) {
            if (p.size() % 2 == 1 && (p.size() == 1 || p.front() < p.back())) out.push_back(p);
        });
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of simple paths starting at `from`, grouped by vertex set and end
/// vertex. Built layer by layer over path length, so the work is bounded by
/// the number of (vertex set, end) states rather than the number of paths.
class PathMultiplicities {
public:
    struct Key {
        VertexSet set;
        int end;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.set.hash() * 31 + static_cast<std::size_t>(k.end); }
    };

    PathMultiplicities(const Graph& g, int from) : from_(from)
    {
        check_vertex(g, from);
        std::unordered_map<Key, BigInt, KeyHash> layer;
        layer.emplace(Key{VertexSet::single(from), from}, 1);
        while (!layer.empty()) {
            std::unordered_map<Key, BigInt, KeyHash> next;
            for (const auto& [key, count] : layer) {
                entries_.push_back({key.set, key.end, count});
                for (int w : g.neighbors(key.end) - key.set) next[Key{key.set.with(w), w}] += count;
            }
            layer = std::move(next);
        }
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            return a.set != b.set ? a.set < b.set : a.end < b.end;
        });
    }

    struct Entry {
        VertexSet set;
        int end;
        BigInt count;
    };

    int from() const { return from_; }
    /// All (vertex set, end, count) triples sorted by vertex set then end.
    const std::vector<Entry>& entries() const { return entries_; }

private:
    int from_;
    std::vector<Entry> entries_;
};

}  // namespace cdpoly

#endif  // CDPOLY_ENUMERATE_HPP

#ifndef CDPOLY_GRAPH_HPP
#define CDPOLY_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdpoly {

inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex indices, always interpreted relative to one
/// parent Graph. Ordered as a 128-bit unsigned integer (bit v = vertex v).
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet single(int v)
    {
        VertexSet s;
        s.set(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first(int n)
    {
        VertexSet s;
        if (n >= 64) {
            s.words_[0] = ~std::uint64_t{0};
            s.words_[1] = n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
        } else {
            s.words_[0] = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    template <class Range>
    static VertexSet of(const Range& vertices)
    {
        VertexSet s;
        for (int v : vertices) s.set(v);
        return s;
    }

    static VertexSet of(std::initializer_list<int> vertices)
    {
        VertexSet s;
        for (int v : vertices) s.set(v);
        return s;
    }

    constexpr bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    constexpr void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr VertexSet with(int v) const
    {
        VertexSet s = *this;
        s.set(v);
        return s;
    }
    constexpr VertexSet without(int v) const
    {
        VertexSet s = *this;
        s.reset(v);
        return s;
    }

    constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

    /// Lowest member, or -1 when empty.
    constexpr int lowest() const
    {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    /// Highest member, or -1 when empty.
    constexpr int highest() const
    {
        if (words_[1]) return 127 - std::countl_zero(words_[1]);
        if (words_[0]) return 63 - std::countl_zero(words_[0]);
        return -1;
    }

    constexpr bool subset_of(const VertexSet& o) const
    {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    constexpr bool intersects(const VertexSet& o) const
    {
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }

    constexpr VertexSet operator|(const VertexSet& o) const
    {
        return VertexSet(words_[0] | o.words_[0], words_[1] | o.words_[1]);
    }
    constexpr VertexSet operator&(const VertexSet& o) const
    {
        return VertexSet(words_[0] & o.words_[0], words_[1] & o.words_[1]);
    }
    /// Set difference.
    constexpr VertexSet operator-(const VertexSet& o) const
    {
        return VertexSet(words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]);
    }
    constexpr VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    constexpr VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    constexpr VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr std::strong_ordering operator<=>(const VertexSet& o) const
    {
        if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
        return words_[0] <=> o.words_[0];
    }

    std::size_t hash() const
    {
        std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
        h ^= words_[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }

    const std::array<std::uint64_t, 2>& words() const { return words_; }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::array<std::uint64_t, 2> w) : w_(w) {}
        int operator*() const { return w_[0] ? std::countr_zero(w_[0]) : 64 + std::countr_zero(w_[1]); }
        iterator& operator++()
        {
            if (w_[0]) w_[0] &= w_[0] - 1;
            else w_[1] &= w_[1] - 1;
            return *this;
        }
        iterator operator++(int)
        {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::array<std::uint64_t, 2> w_{};
    };

    iterator begin() const { return iterator(words_); }
    iterator end() const { return iterator(); }

    std::vector<int> to_vector() const { return std::vector<int>(begin(), end()); }

private:
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}

    std::array<std::uint64_t, 2> words_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Shortest-path length, or infinite when the endpoints are disconnected.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(int value) : value_(value) {}
    static constexpr Distance infinite() { return Distance(); }

    constexpr bool finite() const { return value_ >= 0; }
    constexpr int value() const
    {
        if (!finite()) throw std::logic_error("Distance::value on infinite distance");
        return value_;
    }
    constexpr bool odd() const { return finite() && (value_ & 1); }
    constexpr bool operator==(const Distance&) const = default;

    std::string to_string() const { return finite() ? std::to_string(value_) : "inf"; }

private:
    int value_ = -1;
};

/// Immutable simple undirected graph on vertices 0..n-1, n <= kMaxVertices.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n))
    {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 128]");
    }

    /// Rejects self-loops, duplicate edges and out-of-range endpoints.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges)
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") has an endpoint outside [0," + std::to_string(n) + ")");
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (g.adj_[u].test(v))
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
    {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    /// Rows must be symmetric, loop-free and confined to [0, rows.size()).
    static Graph from_adjacency(std::vector<VertexSet> rows)
    {
        Graph g(static_cast<int>(rows.size()));
        const VertexSet all = VertexSet::first(g.n_);
        for (int u = 0; u < g.n_; ++u) {
            if (!rows[u].subset_of(all)) throw std::invalid_argument("adjacency row references a missing vertex");
            if (rows[u].test(u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            for (int v : rows[u])
                if (!rows[v].test(u)) throw std::invalid_argument("adjacency is not symmetric");
            g.m_ += rows[u].count();
        }
        g.m_ /= 2;
        g.adj_ = std::move(rows);
        return g;
    }

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::first(n_); }

    const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }

    /// Edges (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const
    {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("label count does not match vertex count");
        Graph g = *this;
        g.labels_ = std::move(labels);
        return g;
    }

    /// Structural equality; labels are ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

inline void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0," + std::to_string(g.order()) + ")");
}

inline void check_subset(const Graph& g, const VertexSet& s)
{
    if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set references vertices outside the graph");
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> parent;  // parent[i] = index of vertex i in the original graph
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s)
{
    check_subset(g, s);
    InducedSubgraph out;
    out.parent = s.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.parent.size(); ++i) local[out.parent[i]] = static_cast<int>(i);
    std::vector<VertexSet> rows(out.parent.size());
    for (std::size_t i = 0; i < out.parent.size(); ++i)
        for (int w : g.neighbors(out.parent[i]) & s) rows[i].set(local[w]);
    out.graph = Graph::from_adjacency(std::move(rows));
    return out;
}

/// Union of the neighbourhoods of h, excluding nothing (h itself is not added).
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& h)
{
    VertexSet out;
    for (int v : h) out |= g.neighbors(v);
    return out;
}

/// N[H] = H together with every vertex adjacent to H.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& h)
{
    check_subset(g, h);
    return open_neighborhood(g, h) | h;
}

inline bool is_independent(const Graph& g, const VertexSet& s)
{
    check_subset(g, s);
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

/// Vertices of the component of `start` inside induced(g, within).
inline VertexSet reach(const Graph& g, const VertexSet& within, int start)
{
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = (open_neighborhood(g, frontier) & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// The empty set is not connected.
inline bool is_connected(const Graph& g, const VertexSet& h)
{
    check_subset(g, h);
    if (h.empty()) return false;
    return reach(g, h, h.lowest()) == h;
}

inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// BFS distance between u and v inside induced(g, within); both must lie in `within`.
inline Distance distance_within(const Graph& g, const VertexSet& within, int u, int v)
{
    if (u == v) return Distance(0);
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    for (int d = 1; !frontier.empty(); ++d) {
        VertexSet next = (open_neighborhood(g, frontier) & within) - seen;
        if (next.test(v)) return Distance(d);
        seen |= next;
        frontier = next;
    }
    return Distance::infinite();
}

inline Distance distance(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    return distance_within(g, g.vertices(), u, v);
}

/// 2-colouring of a connected induced subgraph. The first class contains the
/// lowest vertex of h. Empty optional when the subgraph has an odd cycle.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g, const VertexSet& h)
{
    if (!is_connected(g, h)) throw std::invalid_argument("bipartition requires a connected, nonempty vertex set");
    VertexSet side[2];
    side[0] = VertexSet::single(h.lowest());
    VertexSet frontier = side[0];
    int colour = 0;
    VertexSet seen = frontier;
    while (!frontier.empty()) {
        VertexSet next = (open_neighborhood(g, frontier) & h);
        if (next.intersects(side[colour])) return std::nullopt;
        next -= seen;
        colour ^= 1;
        side[colour] |= next;
        seen |= next;
        frontier = next;
    }
    return std::make_pair(side[0], side[1]);
}

inline bool is_bipartite(const Graph& g)
{
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = reach(g, g.vertices(), left.lowest());
        if (!bipartition(g, comp)) return false;
        left -= comp;
    }
    return true;
}

/// A vertex with three pairwise nonadjacent neighbours, as {centre, a, b, c}.
inline std::optional<VertexSet> find_claw(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet& nu = g.neighbors(u);
        for (int a : nu) {
            VertexSet after_a = nu - g.neighbors(a) - VertexSet::first(a + 1);
            for (int b : after_a) {
                VertexSet after_b = after_a - g.neighbors(b) - VertexSet::first(b + 1);
                if (!after_b.empty()) return VertexSet::of({u, a, b, after_b.lowest()});
            }
        }
    }
    return std::nullopt;
}

struct ClawCheck {
    bool claw_free = true;
    std::optional<VertexSet> witness;
};

inline ClawCheck is_claw_free(const Graph& g)
{
    auto w = find_claw(g);
    return ClawCheck{!w.has_value(), w};
}

/// L(g): one vertex per edge of g (in g.edges() order), adjacent when the edges share an endpoint.
inline Graph line_graph(const Graph& g)
{
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m > kMaxVertices) throw std::invalid_argument("line graph exceeds the vertex cap");
    std::vector<VertexSet> rows(es.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    return Graph::from_adjacency(std::move(rows));
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), es);
}

namespace graphs {

inline Graph complete(int n)
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph path(int n)
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph::from_edges(n, es);
}

inline Graph cycle(int n)
{
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u) es.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
    return Graph::from_edges(n, es);
}

/// K_{1,k}; vertex 0 is the centre.
inline Graph star(int k)
{
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v <= k; ++v) es.emplace_back(0, v);
    return Graph::from_edges(k + 1, es);
}

inline Graph complete_bipartite(int a, int b)
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph::from_edges(a + b, es);
}

}  // namespace graphs

}  // namespace cdpoly

template <>
struct std::hash<cdpoly::VertexSet> {
    std::size_t operator()(const cdpoly::VertexSet& s) const noexcept { return s.hash(); }
};

#endif  // CDPOLY_GRAPH_HPP

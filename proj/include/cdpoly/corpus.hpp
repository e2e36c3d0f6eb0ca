#ifndef CDPOLY_CORPUS_HPP
#define CDPOLY_CORPUS_HPP

#include "cdpoly/graph.hpp"
#include "cdpoly/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cdpoly {

/// 64-bit linear congruential generator, state' = state * 6364136223846793005
/// + 1442695040888963407 (mod 2^64). Only the high 32 bits of each state are
/// used. Fixed arithmetic, so a seed yields the same stream on every platform.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next()
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform-ish integer in [0, bound); bound must be positive.
    std::uint32_t below(std::uint32_t bound)
    {
        if (bound == 0) throw std::invalid_argument("Lcg64::below(0)");
        return next() % bound;
    }

    /// True with probability num/den.
    bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

struct Probability {
    std::uint32_t num = 1;
    std::uint32_t den = 2;
};

inline Probability parse_probability(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            // Decimal such as "0.25" is not accepted; keep corpora exact.
            const unsigned long v = std::stoul(text);
            if (v > 1) throw std::invalid_argument("probability above 1");
            return {static_cast<std::uint32_t>(v), 1};
        }
        const unsigned long num = std::stoul(text.substr(0, slash));
        const unsigned long den = std::stoul(text.substr(slash + 1));
        if (den == 0 || num > den) throw std::invalid_argument("bad probability");
        return {static_cast<std::uint32_t>(num), static_cast<std::uint32_t>(den)};
    } catch (const std::exception&) {
        throw std::invalid_argument("probability must be 'num/den' with num <= den, got '" + text + "'");
    }
}

/// G(n, p): each of the n(n-1)/2 pairs, in order (0,1), (0,2), ..., (1,2), ...,
/// becomes an edge with probability p.
inline Graph random_gnp(int n, Probability p, Lcg64& rng)
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p.num, p.den)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

/// Random bipartite graph: each vertex gets a side by a fair coin, then each
/// cross pair becomes an edge with probability p.
inline Graph random_bipartite(int n, Probability p, Lcg64& rng)
{
    std::vector<int> side(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng.below(2));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v] && rng.chance(p.num, p.den)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

struct CorpusFilters {
    bool claw_free = false;
    bool bipartite = false;
    bool connected = false;

    bool accepts(const Graph& g) const
    {
        if (claw_free && !is_claw_free(g).claw_free) return false;
        if (bipartite && !is_bipartite(g)) return false;
        if (connected && !is_connected(g)) return false;
        return true;
    }
};

/// Random graphs: n uniform in [n_min, n_max], p uniform over `ps`.
struct GnpModel {
    int n_min = 10;
    int n_max = 10;
    std::vector<Probability> ps{Probability{}};
    bool bipartite_sides = false;  // draw from random_bipartite instead of random_gnp
};

/// Every graph on exactly n vertices, one per isomorphism class.
struct ExhaustiveModel {
    int n = 5;
};

/// Line graphs of every graph with 1..max_edges edges and no isolated vertex.
struct LineGraphModel {
    int max_edges = 7;
};

struct CorpusSpec {
    std::variant<GnpModel, ExhaustiveModel, LineGraphModel> model;
    std::size_t count = 0;  // random models: graphs to emit; enumerated models: 0 = all
    std::uint64_t seed = 1;
    CorpusFilters filters;
};

inline constexpr std::size_t kMaxAttemptsPerGraph = 100000;

/// Deterministic: the same spec always yields the same graphs in the same order.
/// Random models draw until `count` graphs pass the filters.
inline std::vector<Graph> generate_corpus(const CorpusSpec& spec)
{
    std::vector<Graph> out;
    if (const auto* gnp = std::get_if<GnpModel>(&spec.model)) {
        if (gnp->n_min < 0 || gnp->n_max < gnp->n_min || gnp->n_max > kMaxVertices || gnp->ps.empty())
            throw std::invalid_argument("invalid random corpus parameters");
        Lcg64 rng(spec.seed);
        std::size_t attempts = 0;
        while (out.size() < spec.count) {
            if (++attempts > kMaxAttemptsPerGraph * std::max<std::size_t>(spec.count, 1))
                throw std::runtime_error("corpus filters rejected too many random graphs");
            const int n = gnp->n_min + static_cast<int>(rng.below(static_cast<std::uint32_t>(gnp->n_max - gnp->n_min + 1)));
            const Probability p = gnp->ps[rng.below(static_cast<std::uint32_t>(gnp->ps.size()))];
            Graph g = gnp->bipartite_sides ? random_bipartite(n, p, rng) : random_gnp(n, p, rng);
            if (spec.filters.accepts(g)) out.push_back(std::move(g));
        }
        return out;
    }
    std::vector<Graph> all;
    if (const auto* ex = std::get_if<ExhaustiveModel>(&spec.model)) {
        const int cap = spec.filters.claw_free ? 10 : 9;
        if (ex->n < 0 || ex->n > cap)
            throw std::invalid_argument("exhaustive corpus supports 0 <= n <= " + std::to_string(cap));
        if (spec.filters.claw_free)
            all = graphs_by_order(ex->n, [](const Graph& g) { return is_claw_free(g).claw_free; })[ex->n];
        else
            all = all_graphs_by_order(ex->n)[ex->n];
    } else {
        const auto& lg = std::get<LineGraphModel>(spec.model);
        if (lg.max_edges < 0 || lg.max_edges > 12) throw std::invalid_argument("line-graph corpus supports up to 12 edges");
        auto levels = graphs_by_edge_count(lg.max_edges);
        for (std::size_t m = 1; m < levels.size(); ++m)
            for (const Graph& h : levels[m]) all.push_back(line_graph(h));
    }
    for (auto& g : all) {
        if (spec.count && out.size() == spec.count) break;
        if (spec.filters.accepts(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace cdpoly

#endif  // CDPOLY_CORPUS_HPP

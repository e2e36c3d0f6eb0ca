#ifndef CDPOLY_IDENTITIES_HPP
#define CDPOLY_IDENTITIES_HPP

#include "cdpoly/enumerate.hpp"
#include "cdpoly/gpoly.hpp"
#include "cdpoly/graph.hpp"
#include "cdpoly/poly.hpp"

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cdpoly {

enum class IdentityId { T1, T2, T3, C1a, C1b, M1, M2, MS };

inline constexpr std::array<IdentityId, 8> kAllIdentities = {IdentityId::T1,  IdentityId::T2,  IdentityId::T3,
                                                             IdentityId::C1a, IdentityId::C1b, IdentityId::M1,
                                                             IdentityId::M2,  IdentityId::MS};

inline std::string_view to_string(IdentityId id)
{
    switch (id) {
    case IdentityId::T1: return "T1";
    case IdentityId::T2: return "T2";
    case IdentityId::T3: return "T3";
    case IdentityId::C1a: return "C1a";
    case IdentityId::C1b: return "C1b";
    case IdentityId::M1: return "M1";
    case IdentityId::M2: return "M2";
    case IdentityId::MS: return "MS";
    }
    return "?";
}

/// Case-insensitive: "t1", "C1a", ...
inline IdentityId parse_identity(std::string_view text)
{
    for (IdentityId id : kAllIdentities) {
        std::string_view name = to_string(id);
        if (name.size() != text.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < name.size(); ++i)
            same = same && std::tolower(static_cast<unsigned char>(name[i])) == std::tolower(static_cast<unsigned char>(text[i]));
        if (same) return id;
    }
    throw std::invalid_argument("unknown identity '" + std::string(text) + "'");
}

/// Number of anchor vertices an identity takes.
inline int anchor_arity(IdentityId id)
{
    switch (id) {
    case IdentityId::T1:
    case IdentityId::M1:
    case IdentityId::MS: return 2;
    case IdentityId::T2:
    case IdentityId::C1a:
    case IdentityId::M2: return 1;
    default: return 0;
    }
}

using Polynomial = std::variant<UniPoly, BiPoly>;

inline std::string to_string(const Polynomial& p)
{
    return std::visit([](const auto& q) { return q.to_string(); }, p);
}

struct IdentityReport {
    IdentityId identity_id = IdentityId::T1;
    std::vector<int> anchors;
    Polynomial lhs;
    Polynomial rhs;
    bool holds = false;
    BigInt term_count = 0;  // summands on the right-hand side
    std::string notes;
};

namespace detail {

inline void require_distinct(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw std::invalid_argument("anchors must be distinct vertices");
}

// Right-hand sides are gathered per N[H]: every H with the same closed
// neighbourhood shares the factor I(G - N[H]), so only the weights differ.
template <class Weight>
using WeightsByClosure = std::map<VertexSet, Weight>;

inline UniPoly square_sum(PolyEngine& e, const WeightsByClosure<UniPoly>& weights)
{
    UniPoly rhs;
    for (const auto& [closure, w] : weights) {
        if (w.is_zero()) continue;
        const UniPoly& rest = e.independence_without(closure);
        rhs += w * (rest * rest);
    }
    return rhs;
}

inline BiPoly product_sum(PolyEngine& e, const WeightsByClosure<BiPoly>& weights)
{
    BiPoly rhs;
    for (const auto& [closure, w] : weights) {
        if (w.is_zero()) continue;
        const UniPoly& rest = e.independence_without(closure);
        rhs += w * BiPoly::outer(rest, rest);
    }
    return rhs;
}

template <class P>
IdentityReport make_report(IdentityId id, std::vector<int> anchors, P lhs, P rhs, BigInt terms, std::string notes = {})
{
    IdentityReport r;
    r.identity_id = id;
    r.anchors = std::move(anchors);
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.term_count = std::move(terms);
    r.notes = std::move(notes);
    return r;
}

}  // namespace detail

/// I(G-u)I(G-v) - I(G)I(G-u-v) = sum_{H in B_{u,v}} (-1)^{d_H(u,v)+1} x^{|V(H)|} I(G-N[H])^2
inline IdentityReport verify_t1(PolyEngine& e, int u, int v)
{
    const Graph& g = e.graph();
    detail::require_distinct(g, u, v);
    const VertexSet su = VertexSet::single(u);
    const VertexSet sv = VertexSet::single(v);
    UniPoly lhs = e.independence_without(su) * e.independence_without(sv) -
                  e.independence_without({}) * e.independence_without(su | sv);

    detail::WeightsByClosure<UniPoly> weights;
    BigInt terms = 0;
    for_each_bipartite(g, Anchors::two(u, v), [&](const BipartiteSubgraph& h) {
        const int sign = h.dist_uv->odd() ? 1 : -1;
        weights[closed_neighborhood(g, h.vertices)] += UniPoly::monomial(sign, h.order());
        ++terms;
    });
    return detail::make_report(IdentityId::T1, {u, v}, std::move(lhs), detail::square_sum(e, weights), terms);
}

/// I(G,x)I(G-u,y) - I(G-u,x)I(G,y) = sum_{H in B_u} I(G-N[H],x)I(G-N[H],y)(x^a y^b - x^b y^a)
inline IdentityReport verify_t2(PolyEngine& e, int u)
{
    const Graph& g = e.graph();
    check_vertex(g, u);
    const UniPoly& whole = e.independence_without({});
    const UniPoly& minus_u = e.independence_without(VertexSet::single(u));
    BiPoly lhs = BiPoly::outer(whole, minus_u) - BiPoly::outer(minus_u, whole);

    detail::WeightsByClosure<BiPoly> weights;
    BigInt terms = 0;
    for_each_bipartite(g, Anchors::one(u), [&](const BipartiteSubgraph& h) {
        weights[closed_neighborhood(g, h.vertices)] += BiPoly::antisymmetric(h.a(), h.b());
        ++terms;
    });
    return detail::make_report(IdentityId::T2, {u}, std::move(lhs), detail::product_sum(e, weights), terms);
}

inline constexpr std::string_view kT3ProofOrientation = "x*I'(G,x)*I(G,y) - y*I(G,x)*I'(G,y)";
inline constexpr std::string_view kT3StatementOrientation = "y*I(G,x)*I'(G,y) - x*I'(G,x)*I(G,y)";

/// sum_{H in B} (p-r)(x^p y^r - x^r y^p) I(G-N[H],x) I(G-N[H],y), compared
/// against both sign orientations of the two-variable derivative expression.
/// The report's lhs is the x*I'(x)I(y) - y*I(x)I'(y) orientation; notes
/// record which orientations match.
inline IdentityReport verify_t3(PolyEngine& e)
{
    const Graph& g = e.graph();
    const UniPoly& whole = e.independence_without({});
    const UniPoly x_deriv = whole.derivative().shifted(1);
    BiPoly proof_lhs = BiPoly::outer(x_deriv, whole) - BiPoly::outer(whole, x_deriv);
    BiPoly statement_lhs = -proof_lhs;

    detail::WeightsByClosure<BiPoly> weights;
    BigInt terms = 0;
    for_each_bipartite(g, Anchors::none(), [&](const BipartiteSubgraph& h) {
        const int diff = h.a() - h.b();
        if (diff != 0) weights[closed_neighborhood(g, h.vertices)] += BiPoly::antisymmetric(h.a(), h.b()) * BigInt(diff);
        ++terms;
    });
    BiPoly rhs = detail::product_sum(e, weights);

    const bool proof_ok = proof_lhs == rhs;
    const bool statement_ok = statement_lhs == rhs;
    std::string notes = "proof orientation [" + std::string(kT3ProofOrientation) + "] " +
                        (proof_ok ? "matches" : "does not match") + " RHS; statement orientation [" +
                        std::string(kT3StatementOrientation) + "] " + (statement_ok ? "matches" : "does not match") +
                        " RHS";
    if (proof_ok && statement_ok) notes += " (RHS is zero)";
    return detail::make_report(IdentityId::T3, {}, std::move(proof_lhs), std::move(rhs), terms, std::move(notes));
}

/// x I'(G-u) I(G) - x I(G-u) I'(G) = sum_{H in B_u} (b-a) x^{|V(H)|} I(G-N[H])^2
inline IdentityReport verify_c1a(PolyEngine& e, int u)
{
    const Graph& g = e.graph();
    check_vertex(g, u);
    const UniPoly& whole = e.independence_without({});
    const UniPoly& minus_u = e.independence_without(VertexSet::single(u));
    UniPoly lhs = (minus_u.derivative() * whole - minus_u * whole.derivative()).shifted(1);

    detail::WeightsByClosure<UniPoly> weights;
    BigInt terms = 0;
    for_each_bipartite(g, Anchors::one(u), [&](const BipartiteSubgraph& h) {
        weights[closed_neighborhood(g, h.vertices)] += UniPoly::monomial(h.b() - h.a(), h.order());
        ++terms;
    });
    return detail::make_report(IdentityId::C1a, {u}, std::move(lhs), detail::square_sum(e, weights), terms);
}

/// x^2 I'^2 - x^2 I'' I - x I' I = -sum_{H in B} (p-r)^2 x^{|V(H)|} I(G-N[H])^2
inline IdentityReport verify_c1b(PolyEngine& e)
{
    const Graph& g = e.graph();
    const UniPoly& whole = e.independence_without({});
    const UniPoly d1 = whole.derivative();
    const UniPoly d2 = d1.derivative();
    UniPoly lhs = (d1 * d1 - d2 * whole).shifted(2) - (d1 * whole).shifted(1);

    detail::WeightsByClosure<UniPoly> weights;
    BigInt terms = 0;
    for_each_bipartite(g, Anchors::none(), [&](const BipartiteSubgraph& h) {
        const int diff = h.a() - h.b();
        if (diff != 0) weights[closed_neighborhood(g, h.vertices)] -= UniPoly::monomial(diff * diff, h.order());
        ++terms;
    });
    return detail::make_report(IdentityId::C1b, {}, std::move(lhs), detail::square_sum(e, weights), terms);
}

/// mu(G-u)mu(G-v) - mu(G)mu(G-u-v) = sum_{P in P_{u,v}} mu(G-P)^2.
/// Paths with the same vertex set contribute the same square, so the sum is
/// taken over vertex sets weighted by path counts (paths must start at u).
inline IdentityReport verify_m1(PolyEngine& e, int u, int v, const PathMultiplicities& paths_from_u)
{
    const Graph& g = e.graph();
    detail::require_distinct(g, u, v);
    if (paths_from_u.from() != u) throw std::invalid_argument("path table does not start at the first anchor");
    const VertexSet su = VertexSet::single(u);
    const VertexSet sv = VertexSet::single(v);
    UniPoly lhs = e.matching_without(su) * e.matching_without(sv) - e.matching_without({}) * e.matching_without(su | sv);

    UniPoly rhs;
    BigInt terms = 0;
    for (const auto& entry : paths_from_u.entries()) {
        if (entry.end != v) continue;
        const UniPoly& rest = e.matching_without(entry.set);
        rhs += (rest * rest) * entry.count;
        terms += entry.count;
    }
    return detail::make_report(IdentityId::M1, {u, v}, std::move(lhs), std::move(rhs), terms);
}

inline IdentityReport verify_m1(PolyEngine& e, int u, int v)
{
    check_vertex(e.graph(), u);
    return verify_m1(e, u, v, PathMultiplicities(e.graph(), u));
}

/// mu(G,x)mu(G-u,y) - mu(G-u,x)mu(G,y) = (x-y) sum_{P in P_u} mu(G-P,x)mu(G-P,y)
inline IdentityReport verify_m2(PolyEngine& e, int u, const PathMultiplicities& paths_from_u)
{
    const Graph& g = e.graph();
    check_vertex(g, u);
    if (paths_from_u.from() != u) throw std::invalid_argument("path table does not start at the anchor");
    const UniPoly& whole = e.matching_without({});
    const UniPoly& minus_u = e.matching_without(VertexSet::single(u));
    BiPoly lhs = BiPoly::outer(whole, minus_u) - BiPoly::outer(minus_u, whole);

    std::map<VertexSet, BigInt> by_set;
    BigInt terms = 0;
    for (const auto& entry : paths_from_u.entries()) {
        by_set[entry.set] += entry.count;
        terms += entry.count;
    }
    BiPoly sum;
    for (const auto& [set, count] : by_set) {
        const UniPoly& rest = e.matching_without(set);
        sum += BiPoly::outer(rest, rest) * count;
    }
    BiPoly rhs = BiPoly::antisymmetric(1, 0) * sum;
    return detail::make_report(IdentityId::M2, {u}, std::move(lhs), std::move(rhs), terms);
}

inline IdentityReport verify_m2(PolyEngine& e, int u)
{
    check_vertex(e.graph(), u);
    return verify_m2(e, u, PathMultiplicities(e.graph(), u));
}

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline std::string_view to_string(Sign s)
{
    switch (s) {
    case Sign::Negative: return "NEGATIVE";
    case Sign::Zero: return "ZERO";
    case Sign::Positive: return "POSITIVE";
    }
    return "?";
}

struct MsSign {
    Sign actual = Sign::Zero;
    Sign predicted = Sign::Zero;
    Rational value;     // I(G-u,x)I(G-v,x) - I(G,x)I(G-u-v,x)
    Distance distance;  // d_G(u, v)
};

/// Sign of I(G-u,x)I(G-v,x) - I(G,x)I(G-u-v,x) at a positive rational x for
/// bipartite G, together with the sign predicted by the parity of d_G(u,v):
/// odd -> positive, even -> negative, infinite -> zero.
inline MsSign ms_sign(PolyEngine& e, int u, int v, const Rational& x)
{
    const Graph& g = e.graph();
    detail::require_distinct(g, u, v);
    if (x <= 0) throw std::invalid_argument("evaluation point must be positive");
    if (!is_bipartite(g)) throw std::invalid_argument("sign rule applies to bipartite graphs only");
    const VertexSet su = VertexSet::single(u);
    const VertexSet sv = VertexSet::single(v);
    MsSign out;
    out.value = e.independence_without(su).evaluate(x) * e.independence_without(sv).evaluate(x) -
                e.independence_without({}).evaluate(x) * e.independence_without(su | sv).evaluate(x);
    out.actual = static_cast<Sign>(sign_of(out.value));
    out.distance = distance(g, u, v);
    out.predicted = !out.distance.finite() ? Sign::Zero : out.distance.odd() ? Sign::Positive : Sign::Negative;
    return out;
}

/// The sign check as a report: lhs and rhs are the constants -1/0/1 for the
/// actual and predicted signs.
inline IdentityReport verify_ms(PolyEngine& e, int u, int v, const Rational& x)
{
    MsSign s = ms_sign(e, u, v, x);
    std::string notes = "x=" + rational_to_string(x) + " D=" + rational_to_string(s.value) + " d_G(u,v)=" +
                        s.distance.to_string() + " actual=" + std::string(to_string(s.actual)) +
                        " predicted=" + std::string(to_string(s.predicted));
    return detail::make_report(IdentityId::MS, {u, v}, UniPoly::constant(static_cast<int>(s.actual)),
                               UniPoly::constant(static_cast<int>(s.predicted)), BigInt(1), std::move(notes));
}

/// Runs one identity over every valid anchor choice of the engine's graph
/// (ordered pairs u < v for two-anchor identities). MS is skipped for
/// non-bipartite graphs.
inline std::vector<IdentityReport> verify_all_anchors(PolyEngine& e, IdentityId id, const Rational& ms_x = Rational(1))
{
    const Graph& g = e.graph();
    const int n = g.order();
    std::vector<IdentityReport> out;
    switch (id) {
    case IdentityId::T1:
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) out.push_back(verify_t1(e, u, v));
        break;
    case IdentityId::T2:
        for (int u = 0; u < n; ++u) out.push_back(verify_t2(e, u));
        break;
    case IdentityId::T3: out.push_back(verify_t3(e)); break;
    case IdentityId::C1a:
        for (int u = 0; u < n; ++u) out.push_back(verify_c1a(e, u));
        break;
    case IdentityId::C1b: out.push_back(verify_c1b(e)); break;
    case IdentityId::M1:
        for (int u = 0; u < n; ++u) {
            PathMultiplicities table(g, u);
            for (int v = u + 1; v < n; ++v) out.push_back(verify_m1(e, u, v, table));
        }
        break;
    case IdentityId::M2:
        for (int u = 0; u < n; ++u) out.push_back(verify_m2(e, u));
        break;
    case IdentityId::MS:
        if (!is_bipartite(g)) break;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) out.push_back(verify_ms(e, u, v, ms_x));
        break;
    }
    return out;
}

}  // namespace cdpoly

#endif  // CDPOLY_IDENTITIES_HPP

#ifndef CDPOLY_REAL_ROOTS_HPP
#define CDPOLY_REAL_ROOTS_HPP

#include "cdpoly/gpoly.hpp"
#include "cdpoly/graph.hpp"
#include "cdpoly/poly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace cdpoly {

/// Half-open (lo, hi] holding exactly one root; lo == hi when the root was hit exactly.
struct RationalInterval {
    Rational lo;
    Rational hi;
};

struct SturmCertificate {
    UniPoly poly;
    RatPoly squarefree_part;
    int sturm_chain_length = 0;
    int distinct_real_roots = 0;
    int degree_squarefree = 0;
    bool all_real = false;
    std::optional<std::vector<RationalInterval>> isolating_intervals;
};

/// p / gcd(p, p')
inline RatPoly squarefree_part(const RatPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    return p.divmod(gcd(p, p.derivative())).first;
}

/// s0 = p, s1 = p', s_{k+1} = -(s_{k-1} mod s_k), until the remainder vanishes.
inline std::vector<RatPoly> sturm_chain(const RatPoly& p)
{
    std::vector<RatPoly> chain{p};
    RatPoly next = p.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        next = -chain[chain.size() - 2].divmod(chain.back()).second;
    }
    return chain;
}

namespace detail {

inline int count_variations(const std::vector<int>& signs)
{
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace detail

/// Sign changes of the chain evaluated at x (zeros skipped).
inline int sign_variations(const std::vector<RatPoly>& chain, const Rational& x)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign_of(q.evaluate(x)));
    return detail::count_variations(signs);
}

/// Sign changes at +infinity (positive) or -infinity, from leading coefficients.
inline int sign_variations_at_infinity(const std::vector<RatPoly>& chain, bool positive)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        int s = sign_of(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return detail::count_variations(signs);
}

/// Counts distinct real roots of p exactly. p is real-rooted iff its
/// squarefree part has as many distinct real roots as its degree.
inline SturmCertificate sturm_count(const UniPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("cannot count roots of the zero polynomial");
    SturmCertificate cert;
    cert.poly = p;
    cert.squarefree_part = squarefree_part(RatPoly(p));
    const auto chain = sturm_chain(cert.squarefree_part);
    cert.sturm_chain_length = static_cast<int>(chain.size());
    cert.distinct_real_roots = sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
    cert.degree_squarefree = cert.squarefree_part.degree();
    cert.all_real = cert.distinct_real_roots == cert.degree_squarefree;
    return cert;
}

/// 1 + max |a_i / a_n|: every root lies strictly inside (-B, B).
inline Rational cauchy_bound(const RatPoly& p)
{
    Rational worst = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeffs()[i] / p.leading());
        if (r > worst) worst = r;
    }
    return worst + 1;
}

/// Adds isolating intervals to a certificate by Sturm-count bisection of
/// (-B, B]. Each interval is narrowed until its width is at most B * 2^-20.
inline SturmCertificate isolate_roots(SturmCertificate cert)
{
    const RatPoly& sqf = cert.squarefree_part;
    std::vector<RationalInterval> out;
    if (sqf.degree() >= 1) {
        const auto chain = sturm_chain(sqf);
        const Rational bound = cauchy_bound(sqf);
        const Rational target = bound / Rational(BigInt(1) << 20);

        struct Pending {
            Rational lo, hi;
            int v_lo, v_hi;
        };
        std::vector<Pending> stack{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
        while (!stack.empty()) {
            Pending cur = stack.back();
            stack.pop_back();
            const int roots = cur.v_lo - cur.v_hi;  // roots in (lo, hi]
            if (roots == 0) continue;
            if (sqf.evaluate(cur.hi) == 0 && roots == 1) {
                out.push_back({cur.hi, cur.hi});
                continue;
            }
            if (roots == 1 && cur.hi - cur.lo <= target) {
                out.push_back({cur.lo, cur.hi});
                continue;
            }
            Rational mid = (cur.lo + cur.hi) / 2;
            int v_mid = sign_variations(chain, mid);
            // Push the right half first so intervals come out in ascending order.
            stack.push_back({mid, cur.hi, v_mid, cur.v_hi});
            stack.push_back({cur.lo, mid, cur.v_lo, v_mid});
        }
    }
    cert.isolating_intervals = std::move(out);
    return cert;
}

struct ClawFreeCertificate {
    bool claw_free = false;
    std::optional<VertexSet> witness;
    std::optional<SturmCertificate> cert;
    std::optional<bool> theorem_holds;  // set only for claw-free graphs
};

/// For claw-free graphs, certifies real-rootedness of I(G, x); theorem_holds
/// is false only if a claw-free graph has a non-real root. Graphs with a claw
/// get the witness and, when `certify_with_claw` is set, a certificate too.
inline ClawFreeCertificate certify_claw_free(const Graph& g, bool certify_with_claw = true, bool with_intervals = false)
{
    ClawFreeCertificate out;
    ClawCheck check = is_claw_free(g);
    out.claw_free = check.claw_free;
    out.witness = check.witness;
    if (out.claw_free || certify_with_claw) {
        SturmCertificate cert = sturm_count(independence_poly(g));
        if (with_intervals) cert = isolate_roots(std::move(cert));
        if (out.claw_free) out.theorem_holds = cert.all_real;
        out.cert = std::move(cert);
    }
    return out;
}

}  // namespace cdpoly

#endif  // CDPOLY_REAL_ROOTS_HPP

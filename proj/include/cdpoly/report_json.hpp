#ifndef CDPOLY_REPORT_JSON_HPP
#define CDPOLY_REPORT_JSON_HPP

#include "cdpoly/identities.hpp"
#include "cdpoly/io.hpp"
#include "cdpoly/real_roots.hpp"

#include <json.hpp>

#include <string>

namespace cdpoly {

/// JSON objects keep insertion order so reports list fields as declared.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Integers that fit in 63 bits become JSON numbers, larger ones strings.
inline Json bigint_json(const BigInt& v)
{
    if (v >= BigInt(INT64_MIN) && v <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json to_json(const UniPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(bigint_json(c));
    return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

/// Coefficients as [i, j, c] triples in (i, j) order.
inline Json to_json(const BiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, bigint_json(c)});
    return {{"text", p.to_string()}, {"coefficients", terms}};
}

inline Json to_json(const Polynomial& p)
{
    return std::visit([](const auto& q) { return to_json(q); }, p);
}

inline Json to_json(const IdentityReport& r)
{
    return {{"schema", kReportSchema},
            {"identity_id", std::string(to_string(r.identity_id))},
            {"anchors", r.anchors},
            {"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)},
            {"holds", r.holds},
            {"term_count", bigint_json(r.term_count)},
            {"notes", r.notes}};
}

inline Json to_json(const VertexSet& s) { return s.to_vector(); }

inline Json to_json(const SturmCertificate& c)
{
    Json sqf = Json::array();
    for (const auto& q : c.squarefree_part.coeffs()) sqf.push_back(rational_to_string(q));
    Json out = {{"schema", kReportSchema},
                {"poly", to_json(c.poly)},
                {"squarefree_part", {{"text", c.squarefree_part.to_string()}, {"coefficients", sqf}}},
                {"sturm_chain_length", c.sturm_chain_length},
                {"distinct_real_roots", c.distinct_real_roots},
                {"degree_squarefree", c.degree_squarefree},
                {"all_real", c.all_real},
                {"isolating_intervals", nullptr}};
    if (c.isolating_intervals) {
        Json iv = Json::array();
        for (const auto& i : *c.isolating_intervals) iv.push_back({rational_to_string(i.lo), rational_to_string(i.hi)});
        out["isolating_intervals"] = iv;
    }
    return out;
}

inline Json to_json(const ClawFreeCertificate& c)
{
    Json out = {{"schema", kReportSchema},
                {"claw_free", c.claw_free},
                {"witness", nullptr},
                {"cert", nullptr},
                {"theorem_holds", nullptr}};
    if (c.witness) out["witness"] = to_json(*c.witness);
    if (c.cert) {
        out["cert"] = to_json(*c.cert);
        out["cert"].erase("schema");
    }
    if (c.theorem_holds) out["theorem_holds"] = *c.theorem_holds;
    return out;
}

}  // namespace cdpoly

#endif  // CDPOLY_REPORT_JSON_HPP

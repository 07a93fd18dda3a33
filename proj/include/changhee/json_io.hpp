#ifndef CHANGHEE_JSON_IO_HPP
#define CHANGHEE_JSON_IO_HPP

#include "json.hpp"

#include "changhee/ode_coeffs.hpp"
#include "changhee/polynomial.hpp"
#include "changhee/series.hpp"
#include "changhee/verify.hpp"

namespace changhee {

using Json = nlohmann::ordered_json;

/// Polynomial as a JSON array of reduced rational strings, ascending degree;
/// the zero polynomial is the empty array.
inline Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.str());
    return a;
}

/// {"order": T, "coefficients": [polynomial, ...]} with exactly T+1 entries.
inline Json to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
    return Json{{"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

/// {"n_max": N, "rows": [[polynomial, ...], ...]} with row N holding the
/// N+1 coefficient functions a_0(N,x) ... a_N(N,x).
inline Json to_json(const CoeffTable& t) {
    Json rows = Json::array();
    for (std::size_t n = 0; n <= t.n_max(); ++n) {
        Json row = Json::array();
        for (const auto& p : t.row(n)) row.push_back(to_json(p));
        rows.push_back(std::move(row));
    }
    return Json{{"n_max", t.n_max()}, {"rows", std::move(rows)}};
}

inline Json to_json(const Check& c) {
    Json params = Json::object();
    for (const auto& [name, value] : c.parameters) params[name] = value;
    Json j{{"identity", c.identity}, {"parameters", std::move(params)},
           {"status", c.passed ? "pass" : "fail"}};
    if (c.witness)
        j["witness"] = Json{{"where", c.witness->where}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
    return j;
}

/// A report serializes as the JSON array of its check records.
inline Json to_json(const VerificationReport& r) {
    Json a = Json::array();
    for (const auto& c : r.checks) a.push_back(to_json(c));
    return a;
}

}  // namespace changhee

#endif  // CHANGHEE_JSON_IO_HPP

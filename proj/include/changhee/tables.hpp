#ifndef CHANGHEE_TABLES_HPP
#define CHANGHEE_TABLES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "changhee/json_io.hpp"
#include "changhee/ode_coeffs.hpp"
#include "changhee/polynomial.hpp"
#include "changhee/sequences.hpp"
#include "changhee/series.hpp"

namespace changhee {

enum class OutputFormat { csv, json, latex };
enum class TableFamily { changhee, euler, stirling1, stirling2, coeffs };
enum class CoeffMethod { recurrence, closed };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "latex") return OutputFormat::latex;
    return std::nullopt;
}

inline std::optional<TableFamily> parse_family(std::string_view s) {
    if (s == "changhee") return TableFamily::changhee;
    if (s == "euler") return TableFamily::euler;
    if (s == "stirling1") return TableFamily::stirling1;
    if (s == "stirling2") return TableFamily::stirling2;
    if (s == "coeffs") return TableFamily::coeffs;
    return std::nullopt;
}

inline std::optional<CoeffMethod> parse_method(std::string_view s) {
    if (s == "recurrence") return CoeffMethod::recurrence;
    if (s == "closed") return CoeffMethod::closed;
    return std::nullopt;
}

/// Table contents as rows of polynomials. Sequence families produce one cell
/// per row; the Stirling triangles and the coefficient table produce row n
/// with n+1 cells.
inline std::vector<std::vector<Polynomial>> build_table(TableFamily family, unsigned max,
                                                        CoeffMethod method = CoeffMethod::recurrence) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(max + 1);
    switch (family) {
        case TableFamily::changhee:
            for (unsigned n = 0; n <= max; ++n) rows.push_back({changhee_polynomial(n)});
            break;
        case TableFamily::euler:
            for (unsigned n = 0; n <= max; ++n) rows.push_back({euler_polynomial(n)});
            break;
        case TableFamily::stirling1:
        case TableFamily::stirling2:
            for (unsigned n = 0; n <= max; ++n) {
                std::vector<Polynomial> row;
                for (unsigned k = 0; k <= n; ++k)
                    row.emplace_back(Rational(family == TableFamily::stirling1 ? stirling_first(n, k)
                                                                               : stirling_second(n, k)));
                rows.push_back(std::move(row));
            }
            break;
        case TableFamily::coeffs:
            if (method == CoeffMethod::recurrence) {
                CoeffTable table(max);
                for (unsigned n = 0; n <= max; ++n) rows.push_back(table.row(n));
            } else {
                for (unsigned n = 0; n <= max; ++n) {
                    std::vector<Polynomial> row;
                    for (unsigned j = 0; j <= n; ++j) row.push_back(coeff_closed_form(j, n));
                    rows.push_back(std::move(row));
                }
            }
            break;
    }
    return rows;
}

namespace detail {

inline std::string render_csv(const std::vector<std::vector<Polynomial>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ",";
            out += to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

inline std::string render_json(const std::vector<std::vector<Polynomial>>& rows, bool flat) {
    Json a = Json::array();
    for (const auto& row : rows) {
        if (flat) {
            a.push_back(to_string(row[0]));
        } else {
            Json r = Json::array();
            for (const auto& cell : row) r.push_back(to_string(cell));
            a.push_back(std::move(r));
        }
    }
    return a.dump() + "\n";
}

// Square matrix layout: entry (i, j) is cell i of row j, zero where the
// triangle has no entry, so column j lists the coefficient functions of the
// j-th derivative.
inline std::string render_latex_matrix(const std::vector<std::vector<Polynomial>>& rows, bool transpose) {
    const std::size_t n = rows.size();
    std::string out = "\\begin{pmatrix}\n";
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (c > 0) out += " & ";
            const std::size_t row = transpose ? c : r;
            const std::size_t cell = transpose ? r : c;
            out += cell < rows[row].size() ? to_latex(rows[row][cell]) : "0";
        }
        out += r + 1 < n ? " \\\\\n" : "\n";
    }
    out += "\\end{pmatrix}\n";
    return out;
}

inline std::string render_latex_list(const std::vector<std::vector<Polynomial>>& rows,
                                     const std::string& symbol) {
    std::string out = "\\begin{array}{r|l}\nn & " + symbol + "_n(x) \\\\\n\\hline\n";
    for (std::size_t n = 0; n < rows.size(); ++n)
        out += std::to_string(n) + " & " + to_latex(rows[n][0]) + " \\\\\n";
    out += "\\end{array}\n";
    return out;
}

}  // namespace detail

inline std::string render_table(const std::vector<std::vector<Polynomial>>& rows, TableFamily family,
                                OutputFormat format) {
    const bool flat = family == TableFamily::changhee || family == TableFamily::euler;
    switch (format) {
        case OutputFormat::csv:
            return detail::render_csv(rows);
        case OutputFormat::json:
            return detail::render_json(rows, flat);
        case OutputFormat::latex:
            if (family == TableFamily::changhee) return detail::render_latex_list(rows, "Ch");
            if (family == TableFamily::euler) return detail::render_latex_list(rows, "E");
            // coeffs mirrors the a_i(j,x) matrix layout; the Stirling
            // triangles print row-major.
            return detail::render_latex_matrix(rows, family == TableFamily::coeffs);
    }
    return {};
}

inline std::string render_series(const TruncatedSeries& s, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: {
            std::string out;
            for (const auto& c : s.coefficients()) out += to_string(c) + "\n";
            return out;
        }
        case OutputFormat::json:
            return to_json(s).dump() + "\n";
        case OutputFormat::latex: {
            std::string out = "\\begin{array}{r|l}\nk & c_k(x) \\\\\n\\hline\n";
            for (std::size_t k = 0; k <= s.order(); ++k)
                out += std::to_string(k) + " & " + to_latex(s.coeff(k)) + " \\\\\n";
            out += "\\end{array}\n";
            return out;
        }
    }
    return {};
}

}  // namespace changhee

#endif  // CHANGHEE_TABLES_HPP

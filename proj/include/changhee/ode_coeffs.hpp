#ifndef CHANGHEE_ODE_COEFFS_HPP
#define CHANGHEE_ODE_COEFFS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"

namespace changhee {

/// Lower-triangular table of the coefficient functions a_i(N,x) appearing in
/// the decomposition of the N-th t-derivative of the kernel,
///
///   d^N/dt^N F = ( sum_{i=0}^{N} a_i(N,x) (1+t)^{-i} (2+t)^{i-N} ) F,
///
/// built row by row from the single seed a_0(0,x) = 1 via
///   a_0(N+1)     = -(N+1) a_0(N)
///   a_{N+1}(N+1) = (x-N) a_N(N)
///   a_i(N+1)     = (x+1-i) a_{i-1}(N) + (i-N-1) a_i(N)   for 1 <= i <= N.
class CoeffTable {
public:
    explicit CoeffTable(std::size_t n_max) {
        rows_.reserve(n_max + 1);
        rows_.push_back({Polynomial(1)});
        for (std::size_t n = 0; n < n_max; ++n) {
            const auto& prev = rows_.back();
            const auto N = static_cast<long long>(n);
            std::vector<Polynomial> row(n + 2);
            row[0] = prev[0] * Rational(-(N + 1));
            for (std::size_t i = 1; i <= n; ++i) {
                const auto ii = static_cast<long long>(i);
                row[i] = Polynomial{Rational(1 - ii), Rational(1)} * prev[i - 1] +
                         prev[i] * Rational(ii - N - 1);
            }
            row[n + 1] = Polynomial{Rational(-N), Rational(1)} * prev[n];
            rows_.push_back(std::move(row));
        }
    }

    std::size_t n_max() const { return rows_.size() - 1; }

    const Polynomial& entry(std::size_t N, std::size_t i) const {
        if (N >= rows_.size() || i >= rows_[N].size())
            throw std::invalid_argument("CoeffTable: entry out of range");
        return rows_[N][i];
    }

    /// Row N holds a_0(N,x) ... a_N(N,x).
    const std::vector<Polynomial>& row(std::size_t N) const {
        if (N >= rows_.size()) throw std::invalid_argument("CoeffTable: row out of range");
        return rows_[N];
    }

private:
    std::vector<std::vector<Polynomial>> rows_;
};

namespace detail {

inline void require_nested_sum_args(unsigned j, unsigned N) {
    if (j < 1 || j > N) throw std::invalid_argument("nested_sum: requires 1 <= j <= N");
}

}  // namespace detail

/// The inner sum of the closed form for a_j(N,x): over all (j-1)-tuples
/// (i_{j-1}, ..., i_1) of nonnegative integers with i_{j-1} + ... + i_1 <=
/// N-j, the summand N - i_{j-1} - ... - i_1 - j + 1. For j == 1 the nesting
/// is empty and the value is the bare summand N. Direct enumeration of the
/// index tuples; the trusted oracle for nested_sum.
inline Integer nested_sum_by_enumeration(unsigned j, unsigned N) {
    detail::require_nested_sum_args(j, N);
    Integer total = 0;
    // Walk tuples depth-first; `budget` is what the remaining indices may
    // still sum to, `used` what the chosen ones already consumed.
    auto walk = [&](auto&& self, unsigned depth, unsigned budget, unsigned used) -> void {
        if (depth == 0) {
            total += Integer(N - used - j + 1);
            return;
        }
        for (unsigned v = 0; v <= budget; ++v) self(self, depth - 1, budget - v, used + v);
    };
    walk(walk, j - 1, N - j, 0);
    return total;
}

/// Same value as nested_sum_by_enumeration, collapsed to a single sum by
/// counting the tuples with a fixed total s: there are binomial(s+j-2, j-2)
/// of them, so the sum equals sum_{s=0}^{N-j} binomial(s+j-2, j-2) *
/// (N-j+1-s). The j == 1 nesting is empty: only s == 0 contributes, once.
inline Integer nested_sum(unsigned j, unsigned N) {
    detail::require_nested_sum_args(j, N);
    if (j == 1) return Integer(N);
    Integer total = 0;
    for (unsigned s = 0; s <= N - j; ++s)
        total += binomial(Integer(s) + j - 2, j - 2) * Integer(N - j + 1 - s);
    return total;
}

/// Closed form for the coefficient functions:
///   a_0(N,x) = (-1)^N N!
///   a_j(N,x) = (x)_j (-1)^(N-j) (N-j)! * nested_sum(j, N)   for 1 <= j <= N.
inline Polynomial coeff_closed_form(unsigned j, unsigned N) {
    if (j > N) throw std::invalid_argument("coeff_closed_form: requires j <= N");
    if (j == 0) {
        Integer v = factorial(N);
        if (N % 2 == 1) v = -v;
        return Polynomial(v);
    }
    Integer scale = factorial(N - j) * nested_sum(j, N);
    if ((N - j) % 2 == 1) scale = -scale;
    return falling_factorial_poly(j) * Rational(scale);
}

}  // namespace changhee

#endif  // CHANGHEE_ODE_COEFFS_HPP

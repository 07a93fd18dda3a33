#ifndef CHANGHEE_SEQUENCES_HPP
#define CHANGHEE_SEQUENCES_HPP

#include <mutex>
#include <vector>

#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"

namespace changhee {

namespace detail {

// Lower-triangular memo for a Stirling-style recurrence; rows are grown on
// demand under a lock, so concurrent readers see either a miss or the exact
// value.
class StirlingTriangle {
public:
    using Step = Integer (*)(unsigned n, unsigned k, const Integer& same_k, const Integer& k_minus_1);

    explicit StirlingTriangle(Step step) : step_(step) { rows_.push_back({Integer(1)}); }

    Integer value(unsigned n, unsigned k) {
        std::scoped_lock lock(mu_);
        while (rows_.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows_.size()) - 1;
            const auto& prev = rows_.back();
            std::vector<Integer> row(m + 2);
            for (unsigned j = 0; j <= m + 1; ++j) {
                const Integer& same = j <= m ? prev[j] : kZero();
                const Integer& below = j >= 1 ? prev[j - 1] : kZero();
                row[j] = step_(m, j, same, below);
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    static const Integer& kZero() {
        static const Integer z(0);
        return z;
    }

    std::mutex mu_;
    std::vector<std::vector<Integer>> rows_;
    Step step_;
};

}  // namespace detail

/// Signed Stirling number of the first kind: the coefficient of x^k in the
/// falling factorial (x)_n. Triangle recurrence
/// S1(n+1, k) = S1(n, k-1) - n * S1(n, k), S1(0,0) = 1.
inline Integer stirling_first(unsigned n, unsigned k) {
    if (k > n) return 0;
    static detail::StirlingTriangle tri(
        +[](unsigned m, unsigned, const Integer& same, const Integer& below) {
            return Integer(below - Integer(m) * same);
        });
    return tri.value(n, k);
}

/// Stirling number of the second kind, via
/// S2(n+1, k) = k * S2(n, k) + S2(n, k-1), S2(0,0) = 1.
inline Integer stirling_second(unsigned n, unsigned k) {
    if (k > n) return 0;
    static detail::StirlingTriangle tri(
        +[](unsigned, unsigned j, const Integer& same, const Integer& below) {
            return Integer(Integer(j) * same + below);
        });
    return tri.value(n, k);
}

/// Euler polynomial E_n(x). The generating relation 2 e^{xt} =
/// (e^t + 1) sum E_k(x) t^k/k! yields the triangular recurrence
/// E_n(x) = x^n - (1/2) sum_{k<n} binomial(n,k) E_k(x).
inline Polynomial euler_polynomial(unsigned n) {
    std::vector<Polynomial> e;
    e.reserve(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        Polynomial s;
        for (unsigned k = 0; k < m; ++k) s += e[k] * Rational(binomial(Integer(m), k));
        e.push_back(Polynomial::monomial(m) - s * Rational(1, 2));
    }
    return e[n];
}

/// Changhee polynomial Ch_n(x). Clearing the denominator of the generating
/// function, (2+t) sum Ch_k(x) t^k/k! = 2 (1+t)^x, gives
/// Ch_n(x) = (x)_n - (n/2) Ch_{n-1}(x), Ch_0 = 1.
inline Polynomial changhee_polynomial(unsigned n) {
    Polynomial ch(1);
    Polynomial ff(1);
    for (unsigned k = 1; k <= n; ++k) {
        ff *= Polynomial{Rational(-static_cast<long long>(k - 1)), Rational(1)};
        ch = ff - ch * Rational(static_cast<long long>(k), 2);
    }
    return ch;
}

/// Ch_m(x) = sum_{n<=m} E_n(x) S1(m, n): the Stirling-first transform of the
/// Euler family. An independent route to changhee_polynomial.
inline Polynomial changhee_from_euler(unsigned m) {
    Polynomial s;
    for (unsigned n = 0; n <= m; ++n) s += euler_polynomial(n) * Rational(stirling_first(m, n));
    return s;
}

/// E_n(x) = sum_{m<=n} Ch_m(x) S2(n, m): the inverse Stirling-second
/// transform.
inline Polynomial euler_from_changhee(unsigned n) {
    Polynomial s;
    for (unsigned m = 0; m <= n; ++m) s += changhee_polynomial(m) * Rational(stirling_second(n, m));
    return s;
}

}  // namespace changhee

#endif  // CHANGHEE_SEQUENCES_HPP

#ifndef CHANGHEE_SERIES_HPP
#define CHANGHEE_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "changhee/polynomial.hpp"
#include "changhee/rational.hpp"

namespace changhee {

/// Formal power series in t truncated at a fixed order T, with Polynomial
/// (in x) coefficients c_0 ... c_T. The order records how far the expansion
/// is valid: arithmetic between two series yields the smaller of the two
/// orders, and differentiation lowers the order by exactly one. Comparisons
/// therefore never look past coefficients both operands actually carry.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t order, std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != order + 1)
            throw std::invalid_argument("TruncatedSeries: need exactly order+1 coefficients");
    }

    static TruncatedSeries zero(std::size_t order) {
        return TruncatedSeries(order, std::vector<Polynomial>(order + 1));
    }

    static TruncatedSeries constant(const Polynomial& c, std::size_t order) {
        auto s = zero(order);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Polynomial& coeff(std::size_t k) const {
        if (k >= coeffs_.size()) throw std::invalid_argument("TruncatedSeries: coefficient beyond order");
        return coeffs_[k];
    }

    const std::vector<Polynomial>& coefficients() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t new_order) const {
        if (new_order > order()) throw std::invalid_argument("TruncatedSeries: cannot extend order");
        return TruncatedSeries(new_order,
                               std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    /// Term-wise d/dt. The top coefficient of the input carries no
    /// information about the derivative's own top term, so the order drops
    /// by one; an order-0 series has no derivative information at all.
    TruncatedSeries derivative() const {
        if (order() == 0) throw std::invalid_argument("TruncatedSeries: cannot differentiate order-0 series");
        std::vector<Polynomial> d(order());
        for (std::size_t k = 0; k + 1 <= order(); ++k)
            d[k] = coeffs_[k + 1] * Rational(static_cast<long long>(k + 1));
        return TruncatedSeries(order() - 1, std::move(d));
    }

    TruncatedSeries scaled(const Rational& s) const {
        auto r = *this;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    TruncatedSeries scaled(const Polynomial& p) const {
        auto r = *this;
        for (auto& c : r.coeffs_) c = c * p;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<Polynomial> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
        return TruncatedSeries(n, std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<Polynomial> c(n + 1);
        for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
        return TruncatedSeries(n, std::move(c));
    }

    /// Cauchy product truncated to the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<Polynomial> c(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return TruncatedSeries(n, std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    std::vector<Polynomial> coeffs_;
};

/// Substitution outer(inner(t)) by Horner evaluation over truncated series.
/// Requires equal orders and a vanishing constant term of the inner series;
/// otherwise the truncation would not determine the result.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (outer.order() != inner.order())
        throw std::invalid_argument("compose: series orders must match");
    if (!inner.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const std::size_t T = outer.order();
    TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(T), T);
    for (std::size_t k = T; k-- > 0;)
        acc = acc * inner + TruncatedSeries::constant(outer.coeff(k), T);
    return acc;
}

/// Expansion of (c+t)^e to the given order, c in {1, 2}, e any integer.
/// Coefficient of t^m is binomial(e, m) * c^(e-m); for c == 2 this is an
/// exact dyadic rational.
inline TruncatedSeries shifted_pow(int c, long long e, std::size_t order) {
    if (c != 1 && c != 2) throw std::invalid_argument("shifted_pow: base must be 1 or 2");
    std::vector<Polynomial> coeffs(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        Rational v(binomial(Integer(e), static_cast<unsigned>(m)));
        if (c == 2) v *= pow2(e - static_cast<long long>(m));
        coeffs[m] = Polynomial(v);
    }
    return TruncatedSeries(order, std::move(coeffs));
}

/// (1+t)^x: coefficient of t^n is (x)_n / n!.
inline TruncatedSeries binomial_x(std::size_t order) {
    std::vector<Polynomial> coeffs(order + 1);
    Polynomial ff(1);
    for (std::size_t n = 0; n <= order; ++n) {
        coeffs[n] = ff * Rational(Integer(1), factorial(static_cast<unsigned>(n)));
        ff *= Polynomial{Rational(-static_cast<long long>(n)), Rational(1)};
    }
    return TruncatedSeries(order, std::move(coeffs));
}

/// log(1+t) = sum_{n>=1} (-1)^(n+1) t^n / n; zero constant term.
inline TruncatedSeries log1p_series(std::size_t order) {
    std::vector<Polynomial> coeffs(order + 1);
    for (std::size_t n = 1; n <= order; ++n)
        coeffs[n] = Polynomial(Rational(n % 2 == 1 ? 1 : -1, static_cast<long long>(n)));
    return TruncatedSeries(order, std::move(coeffs));
}

/// e^t - 1 = sum_{n>=1} t^n / n!; zero constant term.
inline TruncatedSeries expm1_series(std::size_t order) {
    std::vector<Polynomial> coeffs(order + 1);
    for (std::size_t n = 1; n <= order; ++n)
        coeffs[n] = Polynomial(Rational(Integer(1), factorial(static_cast<unsigned>(n))));
    return TruncatedSeries(order, std::move(coeffs));
}

/// The kernel (2+t)^(-1) (1+t)^x whose derivatives the coefficient functions
/// a_i(N,x) describe.
inline TruncatedSeries changhee_kernel(std::size_t order) {
    return shifted_pow(2, -1, order) * binomial_x(order);
}

/// 2 (2+t)^(-1) (1+t)^x; coefficient of t^n is Ch_n(x) / n!.
inline TruncatedSeries changhee_gf(std::size_t order) {
    return changhee_kernel(order).scaled(Rational(2));
}

}  // namespace changhee

#endif  // CHANGHEE_SERIES_HPP

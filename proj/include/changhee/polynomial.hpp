#ifndef CHANGHEE_POLYNOMIAL_HPP
#define CHANGHEE_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "changhee/rational.hpp"

namespace changhee {

/// Dense univariate polynomial in x over Rational. Coefficients are stored in
/// ascending degree with no trailing zeros; the zero polynomial is the empty
/// sequence and its degree is reported as std::nullopt rather than any
/// integer.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant) { coeffs_.push_back(constant); trim(); }
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    Polynomial(const Integer& constant) : Polynomial(Rational(constant)) {}
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

    static Polynomial from_coefficients(std::vector<Rational> ascending) {
        Polynomial p;
        p.coeffs_ = std::move(ascending);
        p.trim();
        return p;
    }

    /// c * x^d
    static Polynomial monomial(std::size_t d, const Rational& c = Rational(1)) {
        Polynomial p;
        if (!c.is_zero()) {
            p.coeffs_.assign(d + 1, Rational());
            p.coeffs_[d] = c;
        }
        return p;
    }

    static Polynomial x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const Rational& coeff(std::size_t d) const {
        static const Rational kZero;
        return d < coeffs_.size() ? coeffs_[d] : kZero;
    }

    const Rational& leading_coeff() const {
        if (coeffs_.empty()) throw std::invalid_argument("Polynomial: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& at) const {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

/// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1. Its coefficients are the signed
/// Stirling numbers of the first kind.
inline Polynomial falling_factorial_poly(unsigned n) {
    Polynomial p(1);
    for (unsigned k = 0; k < n; ++k) p *= Polynomial{Rational(-static_cast<long long>(k)), Rational(1)};
    return p;
}

namespace detail {

// One rendered term, sign split off so callers can join with " + " / " - ".
inline std::string term_body(const Rational& magnitude, std::size_t d, bool latex) {
    std::string body;
    if (d == 0) {
        if (latex && !magnitude.is_integer())
            body = "\\frac{" + magnitude.numerator().str() + "}{" + magnitude.denominator().str() + "}";
        else
            body = magnitude.str();
        return body;
    }
    if (magnitude != Rational(1)) {
        if (latex && !magnitude.is_integer())
            body = "\\frac{" + magnitude.numerator().str() + "}{" + magnitude.denominator().str() + "}";
        else
            body = magnitude.str();
    }
    body += "x";
    if (d > 1) body += latex ? "^{" + std::to_string(d) + "}" : "^" + std::to_string(d);
    return body;
}

inline std::string render(const Polynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_body(neg ? -c : c, i, latex);
    }
    return out;
}

}  // namespace detail

/// Human-readable form, descending degree: "x^2 - 2x + 1/2", "1/2x^2 - x + 1/4".
inline std::string to_string(const Polynomial& p) { return detail::render(p, false); }

inline std::string to_latex(const Polynomial& p) { return detail::render(p, true); }

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

}  // namespace changhee

#endif  // CHANGHEE_POLYNOMIAL_HPP

#ifndef CHANGHEE_RATIONAL_HPP
#define CHANGHEE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace changhee {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always gcd-reduced with a positive
/// denominator; zero is stored as 0/1. The whole library computes over this
/// type, there is no floating point anywhere.
class Rational {
public:
    Rational() = default;
    Rational(int n) : value_(n) {}
    Rational(long long n) : value_(n) {}
    Rational(Integer n) : value_(std::move(n)) {}

    Rational(Integer num, Integer den) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        value_ = Backend(std::move(num), std::move(den));
    }

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "p/q" with q > 0 reduced, or just "p" when q == 1.
    std::string str() const { return value_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.value_;
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    Backend value_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// a(a-1)...(a-k+1); the empty product 1 when k == 0. a may be negative.
inline Integer falling_factorial(const Integer& a, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a - i;
    return r;
}

/// Binomial coefficient extended to arbitrary integer upper argument:
/// binomial(a, k) = a(a-1)...(a-k+1) / k!. Total in a; binomial(a, 0) == 1
/// for every a, including negative ones.
inline Integer binomial(const Integer& a, unsigned k) {
    return falling_factorial(a, k) / factorial(k);
}

/// 2^e as an exact dyadic rational; e may be negative.
inline Rational pow2(long long e) {
    if (e >= 0) return Rational(Integer(1) << static_cast<unsigned>(e));
    return Rational(Integer(1), Integer(1) << static_cast<unsigned>(-e));
}

}  // namespace changhee

#endif  // CHANGHEE_RATIONAL_HPP

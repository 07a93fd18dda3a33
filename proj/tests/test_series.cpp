#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "changhee/sequences.hpp"
#include "changhee/series.hpp"

using changhee::binomial_x;
using changhee::changhee_gf;
using changhee::changhee_kernel;
using changhee::compose;
using changhee::expm1_series;
using changhee::factorial;
using changhee::Integer;
using changhee::log1p_series;
using changhee::Polynomial;
using changhee::Rational;
using changhee::shifted_pow;
using changhee::TruncatedSeries;

namespace {

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool zero_constant) {
    std::uniform_int_distribution<int> deg(0, 2), num(-4, 4), den(1, 3);
    std::vector<Polynomial> c(order + 1);
    for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
        std::vector<Rational> coeffs(deg(rng) + 1);
        for (auto& v : coeffs) v = Rational(num(rng), den(rng));
        c[k] = Polynomial::from_coefficients(std::move(coeffs));
    }
    return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("multiplying (1+t) by its geometric inverse gives 1") {
    const auto one_plus_t = shifted_pow(1, 1, 8);
    const auto inverse = shifted_pow(1, -1, 8);  // sum (-1)^n t^n
    const auto prod = one_plus_t * inverse;
    CHECK(prod.order() == 8);
    CHECK(prod == TruncatedSeries::constant(Polynomial(1), 8));
}

TEST_CASE("product of the dyadic factor and (1+t)^x matches the hand expansion at t^1") {
    const auto p = shifted_pow(2, -1, 4) * binomial_x(4);
    // (1/2 - t/4 + ...)(1 + xt + ...): coefficient of t is x/2 - 1/4.
    CHECK(p.coeff(1) == Polynomial{Rational(-1, 4), Rational(1, 2)});
    CHECK(p.coeff(0) == Polynomial(Rational(1, 2)));
}

TEST_CASE("multiplication by the zero series annihilates") {
    const auto a = binomial_x(6);
    CHECK(a * TruncatedSeries::zero(6) == TruncatedSeries::zero(6));
}

TEST_CASE("multiplication truncates to the smaller order") {
    const auto a = shifted_pow(1, 2, 8);
    const auto b = shifted_pow(1, 3, 5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
}

TEST_CASE("derivative of a constant series is the zero series one order down") {
    const auto one = TruncatedSeries::constant(Polynomial(1), 5);
    const auto d = one.derivative();
    CHECK(d.order() == 4);
    CHECK(d == TruncatedSeries::zero(4));
}

TEST_CASE("derivative follows the coefficient shift rule") {
    std::mt19937 rng(7);
    const auto a = random_series(rng, 7, false);
    const auto d = a.derivative();
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(d.coeff(k) == a.coeff(k + 1) * Rational(static_cast<long long>(k + 1)));
}

TEST_CASE("derivative of an order-0 series is rejected") {
    CHECK_THROWS_AS(TruncatedSeries::constant(Polynomial(1), 0).derivative(), std::invalid_argument);
}

TEST_CASE("kernel derivative matches its first-order decomposition") {
    const auto kernel = changhee_kernel(8);
    const auto lhs = kernel.derivative();
    const auto weight = shifted_pow(2, -1, 8).scaled(Rational(-1)) +
                        shifted_pow(1, -1, 8).scaled(Polynomial::x());
    const auto rhs = (weight * kernel).truncated(7);
    CHECK(lhs == rhs);
}

TEST_CASE("shifted_pow coefficient formulas") {
    const auto half = shifted_pow(2, -1, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        // (2+t)^{-1}: (-1)^n / 2^{n+1}
        const Rational expected(Integer(n % 2 == 0 ? 1 : -1), Integer(1) << (n + 1));
        CHECK(half.coeff(n) == Polynomial(expected));
    }
    const auto sq = shifted_pow(1, -2, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        const long long sign = n % 2 == 0 ? 1 : -1;
        CHECK(sq.coeff(n) == Polynomial(Rational(sign * static_cast<long long>(n + 1))));
    }
    CHECK(shifted_pow(2, 0, 5) == TruncatedSeries::constant(Polynomial(1), 5));
    CHECK(shifted_pow(1, 3, 5).coeff(2) == Polynomial(3));
    CHECK(shifted_pow(1, 3, 5).coeff(4) == Polynomial());
    CHECK_THROWS_AS(shifted_pow(3, 1, 4), std::invalid_argument);
}

TEST_CASE("binomial_x coefficients are falling factorials over factorials") {
    const auto b = binomial_x(6);
    CHECK(b.coeff(0) == Polynomial(1));
    CHECK(b.coeff(2) == Polynomial{Rational(0), Rational(-1, 2), Rational(1, 2)});
    CHECK(b.coeff(3) == Polynomial{Rational(0), Rational(1, 3), Rational(-1, 2), Rational(1, 6)});
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(b.coeff(n) ==
              changhee::falling_factorial_poly(n) * Rational(Integer(1), factorial(n)));
}

TEST_CASE("log and exp series coefficients") {
    const auto lg = log1p_series(5);
    CHECK(lg.coeff(0).is_zero());
    CHECK(lg.coeff(3) == Polynomial(Rational(1, 3)));
    CHECK(lg.coeff(4) == Polynomial(Rational(-1, 4)));
    const auto ex = expm1_series(5);
    CHECK(ex.coeff(0).is_zero());
    CHECK(ex.coeff(4) == Polynomial(Rational(1, 24)));
}

TEST_CASE("exp and log compose to the identity") {
    const std::size_t T = 9;
    const auto id = compose(expm1_series(T), log1p_series(T));
    CHECK(id.coeff(1) == Polynomial(1));
    for (std::size_t k = 0; k <= T; ++k)
        if (k != 1) CHECK(id.coeff(k).is_zero());
    CHECK(compose(log1p_series(T), expm1_series(T)) == id);
}

TEST_CASE("composing with the zero series keeps only the constant term") {
    std::mt19937 rng(11);
    const auto a = random_series(rng, 5, false);
    CHECK(compose(a, TruncatedSeries::zero(5)) == TruncatedSeries::constant(a.coeff(0), 5));
}

TEST_CASE("composition preconditions are enforced") {
    CHECK_THROWS_AS(compose(binomial_x(4), shifted_pow(1, 1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(compose(binomial_x(4), log1p_series(5)), std::invalid_argument);
}

TEST_CASE("substituting log(1+t) into the Euler series yields Changhee coefficients") {
    const std::size_t T = 8;
    std::vector<Polynomial> ec(T + 1);
    for (unsigned n = 0; n <= T; ++n)
        ec[n] = changhee::euler_polynomial(n) * Rational(Integer(1), factorial(n));
    const auto composed = compose(TruncatedSeries(T, std::move(ec)), log1p_series(T));
    for (unsigned m = 0; m <= T; ++m)
        CHECK(composed.coeff(m) ==
              changhee::changhee_polynomial(m) * Rational(Integer(1), factorial(m)));
}

TEST_CASE("kernel constant term and generating-function coefficients") {
    CHECK(changhee_kernel(4).coeff(0) == Polynomial(Rational(1, 2)));
    // 2F at t^2 is Ch_2(x)/2! = (x^2 - 2x + 1/2)/2.
    CHECK(changhee_gf(4).coeff(2) == Polynomial{Rational(1, 4), Rational(-1), Rational(1, 2)});
    // At x = 0 the coefficients collapse to the geometric values (-1)^n/2^n.
    const auto gf = changhee_gf(10);
    for (std::size_t n = 0; n <= 10; ++n) {
        const Rational expected(Integer(n % 2 == 0 ? 1 : -1), Integer(1) << n);
        CHECK(gf.coeff(n).evaluate(Rational(0)) == expected);
    }
}

TEST_CASE("n! times the gf coefficient equals the Changhee polynomial") {
    const auto gf = changhee_gf(16);
    for (unsigned n = 0; n <= 16; ++n)
        CHECK(gf.coeff(n) * Rational(factorial(n)) == changhee::changhee_polynomial(n));
}

TEST_CASE("series times its reciprocal is 1") {
    for (int c : {1, 2})
        for (long long e = -3; e <= 3; ++e) {
            const auto prod = shifted_pow(c, e, 7) * shifted_pow(c, -e, 7);
            CHECK(prod == TruncatedSeries::constant(Polynomial(1), 7));
        }
}

TEST_CASE("Leibniz rule holds on random series") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 6, false);
        const auto b = random_series(rng, 6, false);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("composition is associative for zero-constant inner layers") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_series(rng, 5, false);
        const auto b = random_series(rng, 5, true);
        const auto c = random_series(rng, 5, true);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("truncation shortens and never extends") {
    const auto a = binomial_x(6);
    const auto t = a.truncated(3);
    CHECK(t.order() == 3);
    for (std::size_t k = 0; k <= 3; ++k) CHECK(t.coeff(k) == a.coeff(k));
    CHECK_THROWS_AS(a.truncated(7), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(3, std::vector<Polynomial>(3)), std::invalid_argument);
}

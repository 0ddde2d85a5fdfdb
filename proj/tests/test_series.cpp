#include "hopfbraid/series.hpp"

#include <doctest.h>

#include <random>

using namespace hopfbraid;

namespace {

Series random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Series s(order);
    for (int k = 0; k < order; ++k) {
        Rational c(num(rng), den(rng));
        c.canonicalize(); // the two-int constructor stores fractions verbatim
        s += Series::h_power(k, order) * c;
    }
    return s;
}

} // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("multiplication basics") {
    const int n = 3;
    const Series one = Series::constant(1, n);
    const Series h = Series::h_power(1, n);
    CHECK(one * one == one);

    // truncation kills h^2 at order 2
    const Series h2 = Series::h_power(1, 2);
    CHECK((h2 * h2).is_zero());

    // (1+h)(1-h+h^2) = 1 + h^3 = 1 mod h^3; oracle: direct polynomial product
    const Series a = one + h;
    const Series b = one - h + h * h;
    CHECK(a * b == one);
}

TEST_CASE("inverse") {
    const int n = 3;
    const Series one = Series::constant(1, n);
    const Series h = Series::h_power(1, n);
    CHECK(one.inverse() == one);

    // geometric series oracle: 1/(1+h) = sum (-h)^k
    Series geom(n);
    Series pw = one;
    for (int k = 0; k < n; ++k) {
        geom += pw;
        pw = pw * (-h);
    }
    CHECK((one + h).inverse() == geom);

    CHECK(Series::constant(2, 4).inverse() == Series::constant(Rational(1, 2), 4));
    CHECK_THROWS_AS(h.inverse(), std::invalid_argument);
}

TEST_CASE("exp") {
    const int n = 3;
    const Series zero(n);
    const Series one = Series::constant(1, n);
    const Series h = Series::h_power(1, n);
    CHECK(zero.exp() == one);

    // direct summation oracle: 1 + h + h^2/2
    Series expected = one + h + (h * h) * Rational(1, 2);
    CHECK(h.exp() == expected);

    const Series h4 = Series::h_power(1, 4);
    CHECK(h4.exp() * (-h4).exp() == Series::constant(1, 4));
    CHECK_THROWS_AS(one.exp(), std::invalid_argument);
}

TEST_CASE("valuation") {
    const int n = 5;
    CHECK(Series(n).valuation() == n); // zero reports the ">= N" sentinel
    Series s = Series::h_power(2, n) + Series::h_power(3, n) * 3;
    CHECK(s.valuation() == 2);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Series a = random_series(rng, n);
        const Series b = random_series(rng, n);
        const Series c = random_series(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("valuation is superadditive under products") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Series a = random_series(rng, n);
        const Series b = random_series(rng, n);
        const Series p = a * b;
        CHECK(p.valuation() >= std::min(a.valuation() + b.valuation(), n));
        if (a.valuation() + b.valuation() < n && !a.is_zero() && !b.is_zero()) {
            // leading coefficients are nonzero rationals, so no cancellation
            CHECK(p.valuation() == a.valuation() + b.valuation());
        }
    }
    // val(h*u * h*v) >= 2 for arbitrary u, v
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Series h = Series::h_power(1, n);
        const Series u = random_series(rng, n);
        const Series v = random_series(rng, n);
        CHECK((h * u * (h * v)).valuation() >= 2);
    }
}

TEST_CASE("inverse is two-sided on random units") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        Series a = random_series(rng, n);
        if (a.coeff(0) == 0)
            a += Series::constant(3, n);
        const Series inv = a.inverse();
        CHECK(a * inv == Series::constant(1, n));
        CHECK(inv * a == Series::constant(1, n));
    }
}

TEST_CASE("order mismatch is an error") {
    const Series a(3);
    const Series b(4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(Series(3) + Series(2), std::invalid_argument);
}

TEST_CASE("rendering") {
    const int n = 3;
    Series s = Series::constant(Rational(1, 2), n) - Series::h_power(2, n);
    CHECK(s.str() == "1/2 + 0*h + -1*h^2");
}

TEST_SUITE_END();

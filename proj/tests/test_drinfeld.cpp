#include "hopfbraid/drinfeld.hpp"

#include <doctest.h>

using namespace hopfbraid;

namespace {

TensorElement pure2(const AlgebraElement& a, const AlgebraElement& b) {
    return a.as_tensor().tensor_product(b.as_tensor());
}

} // namespace

TEST_SUITE_BEGIN("drinfeld");

TEST_CASE("membership certificates for elements") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(3);
    const Series h = Series::h_power(1, 3);

    const auto one = certify_hprime(alg.one(), 3, "1");
    CHECK(one.certified);
    CHECK(one.certified_order == 3);

    // delta_1 = id - eps kills nothing of a bare generator
    const auto e = certify_hprime(alg.e(), 3, "E");
    CHECK_FALSE(e.certified);
    REQUIRE(e.valuations.size() == 1); // refutation short-circuits
    CHECK(e.valuations[0] == std::pair<int, int>(1, 0));

    // direct expansion oracle: delta_2(hE) = h E (x) (K-1) has valuation 2
    // and delta_3 reaches 3
    const auto he = certify_hprime(alg.e().scaled(h), 3, "hE");
    CHECK(he.certified);
    CHECK(he.certified_order == 3);
    REQUIRE(he.valuations.size() == 3);
    CHECK(he.valuations[0] == std::pair<int, int>(1, 1));
    CHECK(he.valuations[1] == std::pair<int, int>(2, 2));
    CHECK(he.valuations[2].second >= 3);

    CHECK_THROWS_AS(certify_hprime(alg.e(), 4), std::invalid_argument);
    CHECK_THROWS_AS(certify_hprime(alg.e(), 0), std::invalid_argument);
}

TEST_CASE("membership certificates for rank-2 tensors") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(3);
    const Series h = Series::h_power(1, 3);

    CHECK(certify_hprime_tensor2(TensorElement::unit(alg, 2), 3).certified);

    // legwise certified tensors certify to the full order
    const auto both = certify_hprime_tensor2(
        pure2(alg.e().scaled(h), alg.f().scaled(h)), 3, "hE(x)hF");
    CHECK(both.certified);
    CHECK(both.certified_order == 3);

    const auto bad = certify_hprime_tensor2(pure2(alg.e(), alg.one()), 3, "E(x)1");
    CHECK_FALSE(bad.certified);
    CHECK(bad.valuations[0] == std::pair<int, int>(1, 0));

    CHECK_THROWS_AS(certify_hprime_tensor2(TensorElement::unit(alg, 3), 2),
                    std::invalid_argument);
}

TEST_CASE("certified elements multiply to certified elements") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(4);
    const Series h = Series::h_power(1, 4);
    const std::vector<AlgebraElement> samples{
        alg.one(), alg.e().scaled(h), alg.f().scaled(h), alg.h().scaled(h),
        alg.e().scaled(h) * alg.f().scaled(h)};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            REQUIRE(certify_hprime(a, 4).certified);
            REQUIRE(certify_hprime(a * b, 4).certified);
        }
}

TEST_CASE("approximation-lemma residuals") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(4);
    const Series h = Series::h_power(1, 4);
    const TensorElement unit2 = TensorElement::unit(alg, 2);

    // every subset coproduct of the unit is a unit tensor and the signed
    // binomial sum telescopes to 1, so the residual vanishes identically
    for (int i = 0; i <= 2; ++i)
        for (const auto& sigma : Subset::all_subsets(3)) {
            if (sigma.size() <= i)
                continue;
            REQUIRE(lemma32_residual(unit2, sigma, i) == 4);
        }

    // direct two-sided evaluations
    const TensorElement split =
        pure2(alg.e().scaled(h), alg.one()) + pure2(alg.one(), alg.f().scaled(h));
    CHECK(lemma32_residual(split, Subset(2, {1, 2}), 1) >= 2);

    const TensorElement pure = pure2(alg.e().scaled(h), alg.f().scaled(h));
    CHECK(lemma32_residual(pure, Subset(3, {1, 2, 3}), 2) >= 3);

    // preconditions
    CHECK_THROWS_AS(lemma32_residual(pure, Subset(2, {1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma32_residual(pure2(alg.e(), alg.one()), Subset(2, {1, 2}), 1),
                    std::invalid_argument);
}

TEST_CASE("certified elements are scalars modulo h") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(3);
    const Series h = Series::h_power(1, 3);
    const AlgebraElement x = alg.one().scaled(Rational(5)) + alg.h().scaled(h);
    REQUIRE(certify_hprime(x, 3).certified);
    CHECK((x - alg.one().scaled(x.counit())).valuation() >= 1);
}

TEST_SUITE_END();

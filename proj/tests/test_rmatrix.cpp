#include "hopfbraid/rmatrix.hpp"
#include "hopfbraid/suites.hpp"

#include <doctest.h>

using namespace hopfbraid;

TEST_SUITE_BEGIN("rmatrix");

TEST_CASE("trivial instance has the unit R-matrix") {
    const RMatrix r = RMatrix::build(HopfAlgebra::trivial(4));
    CHECK(r.is_identity());
    CHECK(r.inverse() == r.value());
}

TEST_CASE("first-order expansion") {
    // term-by-term expansion oracle: at N=2 both factors contribute
    // I + h(E(x)F + 1/4 H(x)H)
    const HopfAlgebra alg = HopfAlgebra::uhsl2(2);
    const RMatrix r = RMatrix::build(alg);
    TensorElement expected = TensorElement::unit(alg, 2);
    expected.insert_term({Monomial::E(), Monomial::F()}, Series::h_power(1, 2));
    expected.insert_term({Monomial::H(), Monomial::H()},
                         Series::h_power(1, 2) * Rational(1, 4));
    CHECK(r.value() == expected);
}

TEST_CASE("inverse holds to order 5") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(5);
    const RMatrix r = RMatrix::build(alg);
    CHECK(r.value() * r.inverse() == TensorElement::unit(alg, 2));
    CHECK(r.inverse() * r.value() == TensorElement::unit(alg, 2));
}

TEST_CASE("tensor inversion") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(3);
    const TensorElement unit2 = TensorElement::unit(alg, 2);
    CHECK(tensor_inverse(unit2) == unit2);

    // geometric series oracle; E(x)F commutes with itself so the square is
    // E^2 (x) F^2
    TensorElement t = unit2;
    t.insert_term({Monomial::E(), Monomial::F()}, Series::h_power(1, 3));
    TensorElement expected = unit2;
    expected.insert_term({Monomial::E(), Monomial::F()}, -Series::h_power(1, 3));
    expected.insert_term({Monomial::E(2), Monomial::F(2)}, Series::h_power(2, 3));
    CHECK(tensor_inverse(t) == expected);

    // involution on elements with an invertible scalar constant term
    TensorElement u = unit2.scaled(Rational(3));
    u.insert_term({Monomial::H(), Monomial::E()}, Series::h_power(1, 3) * Rational(1, 2));
    u.insert_term({Monomial::F(), Monomial::F()}, Series::h_power(2, 3) * Rational(-2));
    CHECK(tensor_inverse(tensor_inverse(u)) == u);

    TensorElement bad(alg, 2);
    bad.insert_term({Monomial::E(), Monomial::unit()}, Series::constant(1, 3));
    CHECK_THROWS_AS(tensor_inverse(bad), std::invalid_argument);
}

TEST_CASE("conjugation operator") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(4);
    const RMatrix r = RMatrix::build(alg);
    const TensorElement unit2 = TensorElement::unit(alg, 2);
    CHECK(ad_r(r, unit2) == unit2);

    // trivial instance: conjugation is the identity map
    const RMatrix rt = RMatrix::build(HopfAlgebra::trivial(3));
    TensorElement x(HopfAlgebra::trivial(3), 2);
    x.insert_term({Monomial::E(), Monomial::F()}, Series::constant(1, 3));
    CHECK(ad_r(rt, x) == x);

    // quasitriangularity oracle: Ad(R) takes Delta to the opposite coproduct
    const TensorElement de = coproduct(alg.e());
    CHECK((ad_r(r, de) - de.flip(1, 2)).valuation() >= 4);

    // algebra automorphism on a sampled pair
    TensorElement a(alg, 2), b(alg, 2);
    a.insert_term({Monomial::E(), Monomial::H()}, Series::constant(1, 4));
    b.insert_term({Monomial::F(), Monomial::E()}, Series::h_power(1, 4));
    b.insert_term({Monomial::unit(), Monomial::unit()}, Series::constant(2, 4));
    CHECK(ad_r(r, a * b) == ad_r(r, a) * ad_r(r, b));
    CHECK(ad_r_inverse(r, ad_r(r, a)) == a);
}

TEST_CASE("quasitriangularity report") {
    const RMatrix rt = RMatrix::build(HopfAlgebra::trivial(3));
    const auto trivial_rep =
        quasitriangularity_report(rt, monomials_up_to_degree(rt.algebra(), 2));
    CHECK(trivial_rep.overall());

    const HopfAlgebra alg = HopfAlgebra::uhsl2(4);
    const RMatrix r = RMatrix::build(alg);
    const auto rep = quasitriangularity_report(r, monomials_up_to_degree(alg, 2));
    CHECK(rep.overall());
}

TEST_CASE("first-order QYBE residual for any I + h rho") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(4);
    // rho = E(x)F is not an R-matrix, yet both sides agree to first order
    TensorElement t = TensorElement::unit(alg, 2);
    t.insert_term({Monomial::E(), Monomial::F()}, Series::h_power(1, 4));
    const TensorElement t12 = embed_pair(t, 1, 2, 3);
    const TensorElement t13 = embed_pair(t, 1, 3, 3);
    const TensorElement t23 = embed_pair(t, 2, 3, 3);
    const int v = (t12 * t13 * t23 - t23 * t13 * t12).valuation();
    CHECK(v >= 2);
    CHECK(v < 4); // and genuinely fails at second order, so the check bites
}

TEST_CASE("subset products of R") {
    const HopfAlgebra alg = HopfAlgebra::uhsl2(3);
    const RMatrix r = RMatrix::build(alg);
    // single factor placed at legs (1,2)
    CHECK(r_sigma(r, Subset(1, {1})) == r.value());
    // k=2 instantiation of the full-set pattern: R14 R12 R34 R32
    const TensorElement expected = embed_pair(r.value(), 1, 4, 4) *
                                   embed_pair(r.value(), 1, 2, 4) *
                                   embed_pair(r.value(), 3, 4, 4) *
                                   embed_pair(r.value(), 3, 2, 4);
    CHECK(r_sigma(r, Subset(2, {1, 2})) == expected);
}

TEST_CASE("doubled subset coproduct of R matches the subset product") {
    for (const auto kind : {InstanceKind::Uhsl2, InstanceKind::Trivial}) {
        for (const int order : {3, 4}) {
            const RMatrix r = RMatrix::build(HopfAlgebra::make(kind, order));
            for (const auto& sigma : Subset::all_subsets(3))
                REQUIRE(lemma31_residual(r, sigma) >= order);
        }
    }
}

TEST_CASE("classical r-matrix extraction") {
    CHECK(classical_r(RMatrix::build(HopfAlgebra::trivial(3))).is_zero());

    const RMatrix r = RMatrix::build(HopfAlgebra::uhsl2(4));
    LieTensor expected(2);
    expected.insert_term({LieBasis::E, LieBasis::F}, 1);
    expected.insert_term({LieBasis::H, LieBasis::H}, Rational(1, 4));
    CHECK(classical_r(r) == expected);
}

TEST_SUITE_END();

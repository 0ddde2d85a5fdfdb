#include "hopfbraid/combinatorics.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hopfbraid;

TEST_SUITE_BEGIN("combinatorics");

TEST_CASE("binomial with the zero convention") {
    CHECK(binom_c(0, 5) == 1);
    CHECK(binom_c(2, 5) == 10);
    CHECK(binom_c(5, 5) == 1);
    // zero whenever choosing more than the pool
    CHECK(binom_c(3, 2) == 0);
    // and for negative lower argument (the d=0 term of the alternating sum)
    CHECK(binom_c(2, -1) == 0);
    CHECK(binom_c(0, -1) == 0);
    CHECK(binom_c(0, 0) == 1);
}

TEST_CASE("alternating binomial sums") {
    // (r,t) = (0,1): only d=1 contributes, giving -1
    auto res = lemma33_check(0, 0, 1);
    CHECK(res.sum_a == -1);
    CHECK(res.pass_a);

    // (r,s,t) = (1,0,2): -C(1,1)C(2,1) + C(2,1)C(2,2) = -2 + 2 = 0
    res = lemma33_check(1, 0, 2);
    CHECK(res.sum_b == 0);
    CHECK(res.pass_b);

    // (r,t) = (2,5): direct summation oracle gives -10 + 15 - 6 = -1
    res = lemma33_check(2, 0, 5);
    CHECK(res.sum_a == -1);
    CHECK(res.pass_a);

    CHECK_THROWS_AS(lemma33_check(3, 0, 3), std::invalid_argument);
}

TEST_CASE("alternating sums hold exhaustively") {
    for (int t = 1; t <= 12; ++t)
        for (int r = 0; r < t; ++r)
            for (int s = 0; s <= 8; ++s) {
                const auto res = lemma33_check(r, s, t);
                REQUIRE(res.pass_a);
                REQUIRE(res.pass_b);
            }
}

TEST_CASE("subset-sum expression: worked examples") {
    // n=2, j=0, both empty: three nonempty Sigma plus the indicator term
    CHECK(eprime_value(2, 0, Subset::empty(2), Subset::empty(2)) == 0);
    // n=3, j=1: case II
    CHECK(eprime_value(3, 1, Subset(3, {1}), Subset(3, {2})) == 0);
    // n=4, j=2, sigma2 inside sigma1: case I
    CHECK(eprime_value(4, 2, Subset(4, {1}), Subset(4, {1})) == 0);
    CHECK_THROWS_AS(eprime_value(3, 0, Subset(3, {1}), Subset::empty(3)),
                    std::invalid_argument);
}

TEST_CASE("classification matches the case split") {
    auto c = eprime_classify(4, 2, Subset(4, {1}), Subset(4, {1}));
    CHECK(c.which == EprimeCase::I);
    CHECK(c.admissible);
    c = eprime_classify(3, 1, Subset(3, {1}), Subset(3, {2}));
    CHECK(c.which == EprimeCase::II);
    CHECK(c.admissible);
    c = eprime_classify(4, 3, Subset(4, {1}), Subset(4, {2}));
    CHECK(c.which == EprimeCase::III);
    // a tuple where the closed form needs r < t but r = t: genuinely nonzero
    c = eprime_classify(4, 2, Subset(4, {1}), Subset(4, {2, 3}));
    CHECK(c.which == EprimeCase::II);
    CHECK_FALSE(c.admissible);
    CHECK(eprime_value(4, 2, Subset(4, {1}), Subset(4, {2, 3})) == -1);
}

TEST_CASE("exhaustive scan to n = 6") {
    const EprimeScan scan = eprime_scan(6);
    CHECK(scan.admissible_nonzero == 0);
    CHECK(scan.closed_form_mismatches == 0);
    CHECK(scan.admissible == 7737);
    CHECK(scan.case_counts[0] == 2005); // case I
    // every tuple outside the closed-form hypotheses is genuinely nonzero
    CHECK(scan.inadmissible_zero == 0);
}

TEST_CASE("subset enumeration order is by cardinality then lexicographic") {
    const auto subs = Subset::all_subsets(3);
    REQUIRE(subs.size() == 8);
    CHECK(subs[0].str() == "{}");
    CHECK(subs[1].str() == "{1}");
    CHECK(subs[2].str() == "{2}");
    CHECK(subs[3].str() == "{3}");
    CHECK(subs[4].str() == "{1,2}");
    CHECK(subs[5].str() == "{1,3}");
    CHECK(subs[6].str() == "{2,3}");
    CHECK(subs[7].str() == "{1,2,3}");
}

TEST_CASE("subset validation") {
    CHECK_THROWS_AS(Subset(3, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Subset(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Subset(3, {4}), std::invalid_argument);
    CHECK(Subset(5, {1, 3}).contains(Subset(5, {3})));
    CHECK_FALSE(Subset(5, {1, 3}).contains(Subset(5, {2})));
}

TEST_SUITE_END();

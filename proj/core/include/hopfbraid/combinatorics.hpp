#pragma once

#include "hopfbraid/subset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hopfbraid {

/// binom(b, a) for 0 <= a <= b, and 0 for every other pair, including
/// negative b.  The zero extension is what makes the alternating sums
/// below start cleanly at d = 0.
std::int64_t binom_c(std::int64_t a, std::int64_t b);

/// The two alternating binomial sums over 0 <= d <= t:
///   sum_a = sum (-1)^d binom(d-1, r) binom(t, d),   expected -(-1)^r
///   sum_b = sum (-1)^d binom(d+s, r) binom(t, d),   expected 0
/// Requires r < t.
struct BinomialSumCheck {
    std::int64_t sum_a = 0;
    std::int64_t sum_b = 0;
    bool pass_a = false;
    bool pass_b = false;
    bool pass() const { return pass_a && pass_b; }
};
BinomialSumCheck lemma33_check(int r, int s, int t);

/// Case split for the subset-sum expression below, mirroring how its
/// vanishing is proved: case I when sigma2 is contained in sigma1, cases
/// II/III otherwise depending on whether |sigma1 ∪ sigma2| exceeds j.
enum class EprimeCase { I, II, III };

struct EprimeClassification {
    EprimeCase which;
    /// True exactly when the closed-form reduction applies: always in
    /// case I (given j < n), and in cases II/III iff
    /// j - |sigma1| < n - |sigma1 ∪ sigma2|.  Outside this range the
    /// expression is genuinely nonzero.
    bool admissible;
};

EprimeClassification eprime_classify(int n, int j, const Subset& sigma1, const Subset& sigma2);

/// Direct enumeration of
///   sum over sigma1 ∪ sigma2 ⊆ Sigma ⊆ {1..n}, |Sigma| > j of
///     (-1)^{n-|Sigma|} (-1)^{j-|sigma1|} binom(|Sigma|-1-|sigma1|, j-|sigma1|)
///   + (-1)^{n-|sigma1|} [sigma2 ⊆ sigma1].
/// Requires |sigma1| <= j and consistent ambient sizes.
std::int64_t eprime_value(int n, int j, const Subset& sigma1, const Subset& sigma2);

/// Same expression with the Sigma-sum regrouped by cardinality into a
/// single binomial sum (one form per case).
std::int64_t eprime_closed_form(int n, int j, const Subset& sigma1, const Subset& sigma2);

/// Exhaustive scan over all (n <= max_n, j < n, sigma1, sigma2) with
/// |sigma1| <= j.
struct EprimeScan {
    std::int64_t checked = 0;
    std::int64_t case_counts[3] = {0, 0, 0};
    std::int64_t admissible = 0;
    std::int64_t admissible_nonzero = 0;     // failures of the nullity claim
    std::int64_t inadmissible = 0;
    std::int64_t inadmissible_zero = 0;      // flagged, not failures
    std::int64_t closed_form_mismatches = 0; // regrouping identity failures
    std::vector<std::string> failures;       // descriptions, capped
};
EprimeScan eprime_scan(int max_n);

} // namespace hopfbraid

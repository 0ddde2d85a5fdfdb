#include "hopfbraid/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfbraid {

std::int64_t binom_c(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || a > b)
        return 0;
    if (a > b - a)
        a = b - a;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= a; ++i) {
        r = r * (b - a + i) / i; // divides exactly at each step
    }
    return r;
}

BinomialSumCheck lemma33_check(int r, int s, int t) {
    if (!(r < t))
        throw std::invalid_argument("lemma33_check: requires r < t");
    if (r < 0 || s < 0)
        throw std::invalid_argument("lemma33_check: r, s must be nonnegative");
    BinomialSumCheck out;
    for (int d = 0; d <= t; ++d) {
        const std::int64_t sign = (d % 2 == 0) ? 1 : -1;
        const std::int64_t ct_d = binom_c(d, t);
        out.sum_a += sign * binom_c(r, d - 1) * ct_d;
        out.sum_b += sign * binom_c(r, d + s) * ct_d;
    }
    const std::int64_t expect_a = (r % 2 == 0) ? -1 : 1;
    out.pass_a = (out.sum_a == expect_a);
    out.pass_b = (out.sum_b == 0);
    return out;
}

EprimeClassification eprime_classify(int n, int j, const Subset& sigma1, const Subset& sigma2) {
    const int u = sigma1.unite(sigma2).size();
    const int r = j - sigma1.size();
    const int t = n - u;
    if (sigma1.contains(sigma2))
        return {EprimeCase::I, j < n};
    const EprimeCase which = (u > j) ? EprimeCase::II : EprimeCase::III;
    return {which, r < t};
}

static void check_eprime_args(int n, int j, const Subset& sigma1, const Subset& sigma2) {
    if (sigma1.ambient() > n || sigma2.ambient() > n)
        throw std::invalid_argument("eprime: subset ambient exceeds n");
    if (sigma1.size() > j)
        throw std::invalid_argument("eprime: requires |sigma1| <= j");
    if (j < 0 || j >= n)
        throw std::invalid_argument("eprime: requires 0 <= j < n");
}

std::int64_t eprime_value(int n, int j, const Subset& sigma1, const Subset& sigma2) {
    check_eprime_args(n, j, sigma1, sigma2);
    const Subset u = sigma1.unite(sigma2);
    const int k1 = sigma1.size();
    std::int64_t total = 0;
    // enumerate Sigma as bitmasks over {1..n} containing u
    unsigned umask = 0;
    for (int m : u.members())
        umask |= (1u << (m - 1));
    const unsigned limit = 1u << n;
    for (unsigned mask = 0; mask < limit; ++mask) {
        if ((mask & umask) != umask)
            continue;
        const int d = __builtin_popcount(mask);
        if (d <= j)
            continue;
        const std::int64_t s1 = ((n - d) % 2 == 0) ? 1 : -1;
        const std::int64_t s2 = ((j - k1) % 2 == 0) ? 1 : -1;
        total += s1 * s2 * binom_c(j - k1, d - 1 - k1);
    }
    if (sigma1.contains(sigma2))
        total += ((n - k1) % 2 == 0) ? 1 : -1;
    return total;
}

std::int64_t eprime_closed_form(int n, int j, const Subset& sigma1, const Subset& sigma2) {
    check_eprime_args(n, j, sigma1, sigma2);
    const int k1 = sigma1.size();
    const int u = sigma1.unite(sigma2).size();
    const std::int64_t s2 = ((j - k1) % 2 == 0) ? 1 : -1;
    std::int64_t total = 0;
    if (sigma1.contains(sigma2)) {
        // sum_{d=j+1}^{n} (-1)^{n-d} (-1)^{j-k1} C(d-1-k1, j-k1) C(n-k1, d-k1) + (-1)^{n-k1}
        for (int d = j + 1; d <= n; ++d) {
            const std::int64_t s1 = ((n - d) % 2 == 0) ? 1 : -1;
            total += s1 * s2 * binom_c(j - k1, d - 1 - k1) * binom_c(d - k1, n - k1);
        }
        total += ((n - k1) % 2 == 0) ? 1 : -1;
        return total;
    }
    // cases II and III share the grouped form; only the lower summation
    // bound differs (|Sigma| > j is vacuous in case II)
    const int lo = std::max(j + 1, u);
    for (int d = lo; d <= n; ++d) {
        const std::int64_t s1 = ((n - d) % 2 == 0) ? 1 : -1;
        total += s1 * s2 * binom_c(j - k1, d - 1 - k1) * binom_c(d - u, n - u);
    }
    return total;
}

EprimeScan eprime_scan(int max_n) {
    EprimeScan scan;
    for (int n = 1; n <= max_n; ++n) {
        const auto all = Subset::all_subsets(n);
        for (int j = 0; j < n; ++j) {
            for (const auto& s1 : all) {
                if (s1.size() > j)
                    continue;
                for (const auto& s2 : all) {
                    ++scan.checked;
                    const auto cls = eprime_classify(n, j, s1, s2);
                    const std::int64_t direct = eprime_value(n, j, s1, s2);
                    const std::int64_t grouped = eprime_closed_form(n, j, s1, s2);
                    scan.case_counts[static_cast<int>(cls.which)]++;
                    if (grouped != direct) {
                        ++scan.closed_form_mismatches;
                        if (scan.failures.size() < 20) {
                            std::ostringstream os;
                            os << "regroup mismatch n=" << n << " j=" << j << " sigma1=" << s1.str()
                               << " sigma2=" << s2.str() << " direct=" << direct
                               << " grouped=" << grouped;
                            scan.failures.push_back(os.str());
                        }
                    }
                    if (cls.admissible) {
                        ++scan.admissible;
                        if (direct != 0) {
                            ++scan.admissible_nonzero;
                            if (scan.failures.size() < 20) {
                                std::ostringstream os;
                                os << "nonzero n=" << n << " j=" << j << " sigma1=" << s1.str()
                                   << " sigma2=" << s2.str() << " value=" << direct;
                                scan.failures.push_back(os.str());
                            }
                        }
                    } else {
                        ++scan.inadmissible;
                        if (direct == 0)
                            ++scan.inadmissible_zero;
                    }
                }
            }
        }
    }
    return scan;
}

} // namespace hopfbraid

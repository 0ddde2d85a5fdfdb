#include "hopfbraid/drinfeld.hpp"

#include "hopfbraid/combinatorics.hpp"

#include <stdexcept>

namespace hopfbraid {

namespace {

MembershipCertificate certify_block(const TensorElement& x, int max_n, const std::string& label) {
    const int order = x.order();
    if (max_n < 1 || max_n > order)
        throw std::invalid_argument("certify: max_n must satisfy 1 <= max_n <= N");
    MembershipCertificate cert;
    cert.element = label.empty() ? x.str() : label;
    cert.order = order;
    cert.certified = true;
    cert.certified_order = 0;
    for (int n = 1; n <= max_n; ++n) {
        const int v = delta_full(x, n).valuation();
        cert.valuations.emplace_back(n, v);
        if (v < n) {
            cert.certified = false;
            break; // refutation short-circuits at the smallest failing n
        }
        cert.certified_order = n;
    }
    return cert;
}

} // namespace

MembershipCertificate certify_hprime(const AlgebraElement& x, int max_n,
                                     const std::string& label) {
    return certify_block(x.as_tensor(), max_n, label);
}

MembershipCertificate certify_hprime_tensor2(const TensorElement& x, int max_n,
                                             const std::string& label) {
    if (x.rank() != 2)
        throw std::invalid_argument("certify_hprime_tensor2: needs a rank-2 tensor");
    return certify_block(x, max_n, label);
}

int lemma32_residual(const TensorElement& x, const Subset& sigma, int i) {
    if (x.rank() != 2)
        throw std::invalid_argument("lemma32_residual: needs a rank-2 tensor");
    if (sigma.size() <= i)
        throw std::invalid_argument("lemma32_residual: requires |sigma| > i");
    if (i < 0)
        throw std::invalid_argument("lemma32_residual: i must be nonnegative");
    if (i > 0) {
        const auto cert = certify_hprime_tensor2(x, i);
        if (!cert.certified)
            throw std::invalid_argument(
                "lemma32_residual: x is not certified in (H(x)H)' to order i");
    }
    TensorElement lhs = delta_sigma_upper(x, sigma);
    TensorElement rhs(x.algebra(), sigma.ambient() * 2);
    for (const auto& sub : sigma.subsets()) {
        if (sub.size() > i)
            continue;
        const std::int64_t coef = binom_c(i - sub.size(), sigma.size() - 1 - sub.size());
        if (coef == 0)
            continue;
        const Rational signed_coef =
            ((i - sub.size()) % 2 == 0) ? Rational(coef) : Rational(-coef);
        rhs += delta_sigma_upper(x, sub).scaled(signed_coef);
    }
    return (lhs - rhs).valuation();
}

} // namespace hopfbraid

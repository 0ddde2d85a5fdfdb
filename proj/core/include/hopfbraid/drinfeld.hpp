#pragma once

#include "hopfbraid/coalgebra.hpp"
#include "hopfbraid/report.hpp"

namespace hopfbraid {

/// Certify membership of x in the Drinfeld subalgebra H' up to max_n:
/// computes delta_n(x) for n = 1..max_n and records valuations.  Requires
/// 1 <= max_n <= N; refutation short-circuits at the smallest failing n.
MembershipCertificate certify_hprime(const AlgebraElement& x, int max_n,
                                     const std::string& label = "");

/// Same membership test for (H(x)H)' with the doubled coproduct; x has
/// rank 2.
MembershipCertificate certify_hprime_tensor2(const TensorElement& x, int max_n,
                                             const std::string& label = "");

/// Valuation of the order-i approximation defect
///   Delta~_Sigma(x) - sum over Sigma' in Sigma, |Sigma'| <= i of
///     (-1)^{i-|Sigma'|} binom(|Sigma|-1-|Sigma'|, i-|Sigma'|) Delta~_Sigma'(x)
/// for x in (H(x)H)' certified to order >= i; requires |Sigma| > i.  The
/// approximation lemma predicts a valuation of at least i+1.
int lemma32_residual(const TensorElement& x, const Subset& sigma, int i);

} // namespace hopfbraid

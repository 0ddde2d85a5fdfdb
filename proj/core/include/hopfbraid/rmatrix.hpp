#pragma once

#include "hopfbraid/classical.hpp"
#include "hopfbraid/coalgebra.hpp"
#include "hopfbraid/report.hpp"
#include "hopfbraid/tensor.hpp"

#include <vector>

namespace hopfbraid {

/// Two-sided inverse mod h^N of a rank-n tensor whose h^0 part is an
/// invertible scalar multiple of the unit; computed by the geometric
/// series in (I - t/t0).
TensorElement tensor_inverse(const TensorElement& t);

/// The R-matrix of an instance with its cached inverse.  For the
/// quantized instance,
///   R = exp((h/4) H(x)H) * sum_n c_n(h) E^n (x) F^n,
///   c_n = q^{n(n+1)/2} (1-q^{-2})^n / [n]_q!  with q = exp(h/2);
/// the sum truncates below N because val(c_n) >= n.  For the trivial
/// instance R = 1(x)1.  Correctness of the formula is certified by
/// quasitriangularity_report, not assumed.
class RMatrix {
public:
    static RMatrix build(const HopfAlgebra& alg);

    const HopfAlgebra& algebra() const { return alg_; }
    const TensorElement& value() const { return value_; }
    const TensorElement& inverse() const { return inverse_; }
    int order() const { return alg_.order(); }
    bool is_identity() const { return value_.is_unit(); }

private:
    RMatrix(HopfAlgebra alg, TensorElement value, TensorElement inverse);
    HopfAlgebra alg_;
    TensorElement value_;
    TensorElement inverse_;
};

/// Ad(R): x -> R x R^{-1} on rank-2 tensors.
TensorElement ad_r(const RMatrix& r, const TensorElement& x);
/// The inverse braiding direction: x -> R^{-1} x R.
TensorElement ad_r_inverse(const RMatrix& r, const TensorElement& x);

/// Evaluates the four quasitriangularity identities mod h^N: the
/// intertwining R D(a) R^{-1} = D^op(a) on each sample, both fusion
/// identities, and the quantum Yang-Baxter equation.
VerificationReport quasitriangularity_report(const RMatrix& r,
                                             const std::vector<AlgebraElement>& samples);

/// R_Sigma for Sigma = {i_1 < ... < i_k} in rank 2n: the product over
/// rows a = 1..k of the factors R_{2 i_a - 1, 2 i_b} with b descending
/// from k to 1 (k^2 factors), the positional relabeling of the full-set
/// pattern R_{1,2n} R_{1,2n-2} ... R_{1,2} R_{3,2n} ... R_{2n-1,2}.
TensorElement r_sigma(const RMatrix& r, const Subset& sigma);

/// Valuation of Delta~_Sigma(R) - R_Sigma; exact agreement mod h^N means
/// a value of at least N.
int lemma31_residual(const RMatrix& r, const Subset& sigma);

/// The h^1 coefficient of R projected onto g(x)g; throws if that
/// coefficient contains anything outside degree-1 basis legs.
LieTensor classical_r(const RMatrix& r);

} // namespace hopfbraid

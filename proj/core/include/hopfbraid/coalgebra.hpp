#pragma once

#include "hopfbraid/tensor.hpp"

namespace hopfbraid {

/// Subset-coproduct machinery, written once for an abstract
/// coalgebra-with-unit and instantiated by block width: width 1 is
/// (H, Delta, 1), width 2 is (H(x)H, doubled coproduct, 1(x)1).  A block
/// element of width w is a TensorElement of rank w; n blocks live in rank
/// n*w, block i occupying legs (i-1)*w+1 .. i*w.

/// One comultiplication step on the first block: n blocks -> n+1 blocks.
TensorElement block_delta_step(const TensorElement& x, int width);

/// Iterated coproduct of a single block (x.rank() == width): n >= 1 blocks.
TensorElement delta_power(const TensorElement& x, int n);
TensorElement delta_power(const AlgebraElement& x, int n);

/// Counit of a block element: product of leg counits.
Series block_counit(const TensorElement& x);

/// Delta_Sigma = j_Sigma after Delta^{|Sigma|}; Sigma = {} uses the counit.
/// x is a single block; the result has sigma.ambient() blocks.
TensorElement delta_sigma_upper(const TensorElement& x, const Subset& sigma);
TensorElement delta_sigma_upper(const AlgebraElement& x, const Subset& sigma);

/// delta_Sigma = sum over Sigma' of (-1)^{|Sigma|-|Sigma'|} Delta_Sigma'.
TensorElement delta_sigma_lower(const TensorElement& x, const Subset& sigma);
TensorElement delta_sigma_lower(const AlgebraElement& x, const Subset& sigma);

/// delta_n = delta over the full set {1..n}.
TensorElement delta_full(const TensorElement& x, int n);
TensorElement delta_full(const AlgebraElement& x, int n);

/// Coproduct of an algebra element as a rank-2 tensor.
TensorElement coproduct(const AlgebraElement& x);

/// The coproduct of the Hopf algebra H(x)H viewed inside H^{(x)4}:
/// sigma_23 after (Delta (x) Id (x) Id) after (Id (x) Delta).
TensorElement tilde_coproduct(const TensorElement& x);

/// Both sides of the inversion identity Delta_Sigma = sum of delta_Sigma'
/// over subsets, and their difference's valuation.
struct RoundtripResult {
    bool pass = false;
    int residual_valuation = 0;
};
RoundtripResult mobius_roundtrip(const TensorElement& x, const Subset& sigma);
RoundtripResult mobius_roundtrip(const AlgebraElement& x, const Subset& sigma);

/// Minimum coefficient valuation of a tensor ("">= N" sentinel = order).
int tensor_valuation(const TensorElement& t);

} // namespace hopfbraid

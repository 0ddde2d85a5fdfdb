#pragma once

#include "hopfbraid/report.hpp"
#include "hopfbraid/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfbraid {

/// Basis of sl2 in the fixed rendering order E, H, F.
enum class LieBasis { E = 0, H = 1, F = 2 };

std::string lie_basis_name(LieBasis b);

/// Element of g^{(x)n} for g = sl2: sparse map from basis-symbol tuples to
/// exact rationals.  No enveloping-algebra monomials of degree >= 2 ever
/// appear per leg; conversions from tensors fail loudly otherwise.
class LieTensor {
public:
    using Key = std::vector<LieBasis>;
    using TermMap = std::map<Key, Rational>;

    explicit LieTensor(int rank);

    static LieTensor basis(LieBasis b); // rank 1

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void insert_term(Key key, const Rational& c);
    Rational coefficient(const Key& key) const;

    LieTensor operator-() const;
    LieTensor& operator+=(const LieTensor& rhs);
    LieTensor& operator-=(const LieTensor& rhs);
    friend LieTensor operator+(LieTensor l, const LieTensor& r) { return l += r; }
    friend LieTensor operator-(LieTensor l, const LieTensor& r) { return l -= r; }
    LieTensor scaled(const Rational& c) const;

    LieTensor flip(int i, int j) const;
    /// Cyclic rotation of legs by one: leg i -> leg i+1 (mod rank).
    LieTensor rotated() const;

    bool operator==(const LieTensor& rhs) const;
    bool operator!=(const LieTensor& rhs) const { return !(*this == rhs); }

    /// Sums "X1(x)...(x)Xn : c" over the ordered basis (E,H,F).
    std::string str() const;

private:
    int rank_;
    TermMap terms_;
};

/// View a Lie tensor inside U(sl2)^{(x)n} (any instance works; commutator
/// computations use the classical one).
TensorElement lie_to_tensor(const HopfAlgebra& alg, const LieTensor& t);

/// Project back from U(sl2)^{(x)n}; throws if any leg is not one of E, H,
/// F with a constant coefficient (loud failure, never silent truncation).
LieTensor lie_from_tensor(const TensorElement& t);

/// [r12,r13] + [r12,r23] + [r13,r23] evaluated in U(sl2)^{(x)3} and
/// projected back; zero iff r solves the classical Yang-Baxter equation.
LieTensor cybe_residual(const LieTensor& r);

/// [x(x)1 + 1(x)x, r] in U(sl2)^{(x)2}, projected to g(x)g.
LieTensor cobracket(const LieTensor& x, const LieTensor& r);

/// Lie-bialgebra axioms for the cobracket induced by r: antisymmetry,
/// co-Jacobi, the 1-cocycle identity, ad-invariance of the symmetric part
/// r + sigma(r), and the classical Yang-Baxter equation itself (included
/// so the report can distinguish which axiom a defective r breaks).
VerificationReport bialgebra_checks_report(const LieTensor& r);

/// ((a b - b a)/h)|_{h=0}: the Poisson bracket of the classes of a and b
/// in H'/hH'.  Requires val(ab - ba) >= 1, which certified inputs satisfy;
/// violation throws.
AlgebraElement poisson_bracket(const AlgebraElement& a, const AlgebraElement& b);

} // namespace hopfbraid

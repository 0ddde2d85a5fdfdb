#pragma once

#include "hopfbraid/series.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hopfbraid {

class TensorElement;

/// PBW monomial F^f H^h E^e, always stored in this normal order.
struct Monomial {
    unsigned f = 0;
    unsigned h = 0;
    unsigned e = 0;

    bool is_unit() const { return f == 0 && h == 0 && e == 0; }
    unsigned degree() const { return f + h + e; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    static Monomial unit() { return {}; }
    static Monomial F(unsigned a = 1) { return {a, 0, 0}; }
    static Monomial H(unsigned b = 1) { return {0, b, 0}; }
    static Monomial E(unsigned c = 1) { return {0, 0, c}; }

    std::string str() const; // "F^a H^b E^c"
};

enum class InstanceKind {
    Uhsl2,   // standard quantized sl2 over Q[h]/h^N
    Trivial, // undeformed U(sl2)[[h]] truncated, cocommutative, R = 1(x)1
};

class AlgebraElement;

/// One Hopf-algebra instance at a fixed truncation order.  Cheap to copy
/// (shared immutable state); equality of instances means equal kind and
/// order, which is what element compatibility checks use.
class HopfAlgebra {
public:
    static HopfAlgebra uhsl2(int order);
    static HopfAlgebra trivial(int order);
    static HopfAlgebra make(InstanceKind kind, int order);

    InstanceKind kind() const;
    int order() const;
    std::string name() const; // "uhsl2" or "trivial"

    bool same_instance(const HopfAlgebra& other) const {
        return kind() == other.kind() && order() == other.order();
    }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement e() const;
    AlgebraElement f() const;
    AlgebraElement h() const;
    AlgebraElement monomial(const Monomial& m) const;
    /// K = exp(h H / 2) expanded as a finite H-polynomial (1 for the
    /// trivial instance); k_inverse gives exp(-h H / 2).
    AlgebraElement k() const;
    AlgebraElement k_inverse() const;

    /// Coefficients used by the R-matrix and relation constants.
    Series q_power(const Rational& m) const; // exp(m h / 2)

    using TermMap = std::map<Monomial, Series>;
    using PairTermMap = std::map<std::pair<Monomial, Monomial>, Series>;

    /// Normal-ordered product of two PBW monomials (cached).
    const TermMap& multiply_monomials(const Monomial& a, const Monomial& b) const;
    /// Coproduct of a PBW monomial as a rank-2 term map (cached).
    const PairTermMap& coproduct_monomial(const Monomial& m) const;
    /// Antipode of a PBW monomial in normal form (cached).
    const TermMap& antipode_monomial(const Monomial& m) const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    explicit HopfAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Finite sum of PBW monomials with Series coefficients; canonical sparse
/// form (zero coefficients are never stored).  Immutable value semantics.
class AlgebraElement {
public:
    using TermMap = std::map<Monomial, Series>;

    explicit AlgebraElement(HopfAlgebra alg);
    AlgebraElement(HopfAlgebra alg, TermMap terms);

    const HopfAlgebra& algebra() const { return alg_; }
    int order() const { return alg_.order(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Series coefficient(const Monomial& m) const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    friend AlgebraElement operator+(AlgebraElement l, const AlgebraElement& r) { return l += r; }
    friend AlgebraElement operator-(AlgebraElement l, const AlgebraElement& r) { return l -= r; }

    /// Product rewritten to PBW normal form using the instance relations.
    AlgebraElement operator*(const AlgebraElement& rhs) const;

    AlgebraElement scaled(const Series& s) const;
    AlgebraElement scaled(const Rational& c) const;

    Series counit() const;
    AlgebraElement antipode() const;

    /// Keep only the h^0 coefficient of every term.
    AlgebraElement specialize_h0() const;

    /// Divide every coefficient by h^k exactly (see Series::shift_down for
    /// the truncation caveat on the top coefficients).
    AlgebraElement shift_down(int k) const;

    /// Extract the h^k coefficient as an element with constant coefficients.
    AlgebraElement h_coefficient(int k) const;

    /// Minimum coefficient valuation; order() if zero.
    int valuation() const;

    bool operator==(const AlgebraElement& rhs) const;
    bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

    /// Terms sorted by (f,h,e), one "F^a H^b E^c : <series>" per line.
    std::string str() const;

    TensorElement as_tensor() const; // rank 1

    void insert_term(const Monomial& m, const Series& c); // accumulating, prunes zeros

private:
    HopfAlgebra alg_;
    TermMap terms_;

    void check_compatible(const AlgebraElement& rhs) const;
};

} // namespace hopfbraid

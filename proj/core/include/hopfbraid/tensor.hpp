#pragma once

#include "hopfbraid/algebra.hpp"
#include "hopfbraid/subset.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfbraid {

/// Rank-n sparse tensor over PBW monomial tuples with Series coefficients.
/// Models H^{(x)n}; componentwise products rewrite every leg to normal
/// form.  Canonical sparse form: no stored coefficient is zero.
class TensorElement {
public:
    using Key = std::vector<Monomial>;
    using TermMap = std::map<Key, Series>;

    TensorElement(HopfAlgebra alg, int rank);

    static TensorElement unit(const HopfAlgebra& alg, int rank);

    const HopfAlgebra& algebra() const { return alg_; }
    int rank() const { return rank_; }
    int order() const { return alg_.order(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const;

    Series coefficient(const Key& key) const;

    void insert_term(Key key, const Series& c); // accumulating, prunes zeros

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    friend TensorElement operator+(TensorElement l, const TensorElement& r) { return l += r; }
    friend TensorElement operator-(TensorElement l, const TensorElement& r) { return l -= r; }

    /// Componentwise product; requires equal rank and instance.
    TensorElement operator*(const TensorElement& rhs) const;

    TensorElement scaled(const Series& s) const;
    TensorElement scaled(const Rational& c) const;

    /// Concatenate legs: rank(this) + rank(rhs).
    TensorElement tensor_product(const TensorElement& rhs) const;

    /// Place leg m of this tensor at position positions[m] of a rank
    /// new_rank tensor, unit everywhere else.  Positions are 1-based and
    /// distinct but need not be increasing.
    TensorElement embed_at(const std::vector<int>& positions, int new_rank) const;

    TensorElement flip(int i, int j) const; // swap legs i and j

    /// Apply the counit to one leg: rank n -> n-1 (legs renumbered).
    TensorElement counit_leg(int leg) const;

    /// Multiply legs (leg, leg+1) together: rank n -> n-1.
    TensorElement multiply_legs(int leg) const;

    TensorElement antipode_leg(int leg) const;

    /// Apply the coproduct to one leg: rank n -> n+1.
    TensorElement coproduct_leg(int leg) const;

    TensorElement specialize_h0() const;
    TensorElement h_coefficient(int k) const;
    TensorElement shift_down(int k) const;

    /// Minimum coefficient valuation over stored terms; order() if zero,
    /// meaning "valuation >= N up to truncation".
    int valuation() const;

    /// True when every stored term has the unit monomial at each leg
    /// outside the given set.
    bool supported_on(const Subset& legs) const;

    bool operator==(const TensorElement& rhs) const;
    bool operator!=(const TensorElement& rhs) const { return !(*this == rhs); }

    /// One "m1 | m2 | ... | mn : <series>" line per term.
    std::string str() const;

private:
    HopfAlgebra alg_;
    int rank_;
    TermMap terms_;

    void check_compatible(const TensorElement& rhs) const;
};

/// j_sigma: place factor m of x at leg sigma.members()[m], units elsewhere.
/// x.rank() must equal sigma.size(); result has rank sigma.ambient().
TensorElement embed_j_sigma(const TensorElement& x, const Subset& sigma);

/// Place a rank-2 tensor with leg 1 at position r and leg 2 at position s
/// (r and s distinct, in 1..rank); r > s places the flipped tensor.
TensorElement embed_pair(const TensorElement& x, int r, int s, int rank);

} // namespace hopfbraid

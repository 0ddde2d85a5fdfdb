#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hopfbraid {

using Rational = mpq_class;

/// Element of Q[h]/h^N with exact rational coefficients.
///
/// The truncation order N is fixed per value; every binary operation
/// requires both operands to carry the same order and throws otherwise.
/// Values are immutable after construction apart from the usual
/// compound-assignment operators, and all operations are pure.
class Series {
public:
    /// Zero series of the given order (order >= 1).
    explicit Series(int order);

    static Series constant(const Rational& value, int order);
    static Series h_power(int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()); }

    /// Coefficient of h^k, 0 <= k < order.
    const Rational& coeff(int k) const;

    bool is_zero() const;
    bool is_one() const;

    /// Smallest k with nonzero coefficient; returns order() for the zero
    /// series, meaning "valuation >= N as far as the truncation can tell".
    int valuation() const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }

    /// Cauchy product truncated at h^N.
    Series operator*(const Series& rhs) const;
    Series& operator*=(const Series& rhs);

    Series operator*(const Rational& scalar) const;

    /// Two-sided inverse mod h^N; requires a nonzero constant term.
    Series inverse() const;

    /// sum_{k<N} a^k/k!; requires a zero constant term so the sum is finite.
    Series exp() const;

    /// Divide by h^k exactly; requires valuation() >= k.  The top k
    /// coefficients of the result are not determined by the truncated data
    /// and are filled with zeros; callers must only rely on coefficients
    /// below order()-k.
    Series shift_down(int k) const;

    /// Copy truncated to a smaller order m <= order().
    Series truncated(int m) const;

    bool operator==(const Series& rhs) const;
    bool operator!=(const Series& rhs) const { return !(*this == rhs); }

    /// "c0 + c1*h + ... + c{N-1}*h^{N-1}" with rationals rendered as p/q.
    std::string str() const;

private:
    std::vector<Rational> coeffs_;

    void check_same_order(const Series& rhs) const;
};

} // namespace hopfbraid

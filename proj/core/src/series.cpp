#include "hopfbraid/series.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfbraid {

Series::Series(int order) {
    if (order < 1)
        throw std::invalid_argument("Series: order must be >= 1");
    coeffs_.assign(static_cast<size_t>(order), Rational(0));
}

Series Series::constant(const Rational& value, int order) {
    Series s(order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::h_power(int k, int order) {
    Series s(order);
    if (k < 0)
        throw std::invalid_argument("Series::h_power: negative exponent");
    if (k < order)
        s.coeffs_[static_cast<size_t>(k)] = 1;
    return s;
}

const Rational& Series::coeff(int k) const {
    return coeffs_.at(static_cast<size_t>(k));
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Series::is_one() const {
    if (coeffs_[0] != 1)
        return false;
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return false;
    return true;
}

int Series::valuation() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return static_cast<int>(k);
    return order();
}

void Series::check_same_order(const Series& rhs) const {
    if (coeffs_.size() != rhs.coeffs_.size())
        throw std::invalid_argument("Series: truncation order mismatch");
}

Series Series::operator-() const {
    Series r(order());
    for (size_t k = 0; k < coeffs_.size(); ++k)
        r.coeffs_[k] = -coeffs_[k];
    return r;
}

Series& Series::operator+=(const Series& rhs) {
    check_same_order(rhs);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    check_same_order(rhs);
    for (size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

Series Series::operator*(const Series& rhs) const {
    check_same_order(rhs);
    const int n = order();
    Series r(n);
    for (int i = 0; i < n; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; i + j < n; ++j) {
            const Rational& b = rhs.coeffs_[static_cast<size_t>(j)];
            if (b == 0)
                continue;
            r.coeffs_[static_cast<size_t>(i + j)] += coeffs_[static_cast<size_t>(i)] * b;
        }
    }
    return r;
}

Series& Series::operator*=(const Series& rhs) {
    *this = *this * rhs;
    return *this;
}

Series Series::operator*(const Rational& scalar) const {
    Series r(order());
    if (scalar == 0)
        return r;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        r.coeffs_[k] = coeffs_[k] * scalar;
    return r;
}

Series Series::inverse() const {
    if (coeffs_[0] == 0)
        throw std::invalid_argument("Series::inverse: zero constant term is not invertible");
    const int n = order();
    Series b(n);
    b.coeffs_[0] = 1 / coeffs_[0];
    for (int k = 1; k < n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j)
            s += coeffs_[static_cast<size_t>(j)] * b.coeffs_[static_cast<size_t>(k - j)];
        b.coeffs_[static_cast<size_t>(k)] = -s / coeffs_[0];
    }
    return b;
}

Series Series::exp() const {
    if (coeffs_[0] != 0)
        throw std::invalid_argument("Series::exp: constant term must vanish");
    const int n = order();
    Series r = Series::constant(1, n);
    Series term = Series::constant(1, n);
    for (int k = 1; k < n; ++k) {
        term = term * *this;
        term = term * Rational(1, k);
        if (term.is_zero())
            break;
        r += term;
    }
    return r;
}

Series Series::shift_down(int k) const {
    if (k < 0)
        throw std::invalid_argument("Series::shift_down: negative shift");
    if (valuation() < k)
        throw std::invalid_argument("Series::shift_down: valuation too small, division not exact");
    const int n = order();
    Series r(n);
    for (int j = k; j < n; ++j)
        r.coeffs_[static_cast<size_t>(j - k)] = coeffs_[static_cast<size_t>(j)];
    return r;
}

Series Series::truncated(int m) const {
    if (m < 1 || m > order())
        throw std::invalid_argument("Series::truncated: bad target order");
    Series r(m);
    for (int k = 0; k < m; ++k)
        r.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    return r;
}

bool Series::operator==(const Series& rhs) const {
    check_same_order(rhs);
    return coeffs_ == rhs.coeffs_;
}

std::string Series::str() const {
    std::ostringstream os;
    for (int k = 0; k < order(); ++k) {
        if (k > 0)
            os << " + ";
        os << coeffs_[static_cast<size_t>(k)];
        if (k == 1)
            os << "*h";
        else if (k > 1)
            os << "*h^" << k;
    }
    return os.str();
}

} // namespace hopfbraid

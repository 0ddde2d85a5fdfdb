#include "hopfbraid/rmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfbraid {

TensorElement tensor_inverse(const TensorElement& t) {
    const int n = t.order();
    const TensorElement unit = TensorElement::unit(t.algebra(), t.rank());
    const TensorElement::Key unit_key(static_cast<size_t>(t.rank()), Monomial::unit());
    const Rational c0 = t.coefficient(unit_key).coeff(0);
    if (c0 == 0)
        throw std::invalid_argument("tensor_inverse: constant term is not invertible");
    for (const auto& [k, c] : t.terms())
        if (k != unit_key && c.coeff(0) != 0)
            throw std::invalid_argument(
                "tensor_inverse: h^0 part is not a scalar multiple of the unit");
    // t = c0 (I + T) with val(T) >= 1, so t^-1 = (1/c0) sum (-T)^k
    TensorElement scaled = t.scaled(Rational(1) / c0);
    TensorElement rest = scaled - unit;
    TensorElement acc = unit;
    TensorElement power = unit;
    for (int k = 1; k < n; ++k) {
        power = power * rest;
        if (power.is_zero())
            break;
        if (k % 2 == 0)
            acc += power;
        else
            acc -= power;
    }
    return acc.scaled(Rational(1) / c0);
}

RMatrix::RMatrix(HopfAlgebra alg, TensorElement value, TensorElement inverse)
    : alg_(std::move(alg)), value_(std::move(value)), inverse_(std::move(inverse)) {}

RMatrix RMatrix::build(const HopfAlgebra& alg) {
    const int n = alg.order();
    if (alg.kind() == InstanceKind::Trivial) {
        TensorElement unit = TensorElement::unit(alg, 2);
        return RMatrix(alg, unit, unit);
    }
    // Cartan factor exp((h/4) H(x)H) = sum_k (h/4)^k/k! H^k (x) H^k;
    // each power carries h^k so the sum is finite mod h^N
    TensorElement cartan(alg, 2);
    Rational coef(1);
    for (int k = 0; k < n; ++k) {
        if (k > 0)
            coef /= 4 * k;
        cartan.insert_term({Monomial::H(static_cast<unsigned>(k)), Monomial::H(static_cast<unsigned>(k))},
                           Series::h_power(k, n) * coef);
    }
    // quantum-exponential part: sum_m c_m E^m (x) F^m
    const Series one_minus_qm2 = Series::constant(1, n) - alg.q_power(-2);
    // [m]_q = (q^m - q^-m)/(q - q^-1): numerator and denominator both have
    // valuation 1, so compute them one order up and reduce exactly
    const int lifted = n + 1;
    auto q_power_at = [&](const Rational& m) {
        Series out = Series::constant(1, lifted);
        Rational cur(1);
        for (int j = 1; j < lifted; ++j) {
            cur = cur * m / (2 * j);
            out += Series::h_power(j, lifted) * cur;
        }
        return out;
    };
    const Series qdiff_over_h = (q_power_at(1) - q_power_at(-1)).shift_down(1).truncated(n);
    const Series qdiff_inv = qdiff_over_h.inverse();
    auto q_integer = [&](int m) {
        return (q_power_at(m) - q_power_at(-m)).shift_down(1).truncated(n) * qdiff_inv;
    };
    TensorElement qexp(alg, 2);
    Series qfact = Series::constant(1, n);
    Series cm = Series::constant(1, n);
    for (int m = 0; m < n; ++m) {
        if (m > 0) {
            qfact *= q_integer(m);
            cm = alg.q_power(Rational(m * (m + 1) / 2)); // m(m+1) is even
            for (int i = 0; i < m; ++i)
                cm *= one_minus_qm2;
            cm *= qfact.inverse();
        }
        if (cm.is_zero())
            continue;
        qexp.insert_term({Monomial::E(static_cast<unsigned>(m)), Monomial::F(static_cast<unsigned>(m))}, cm);
    }
    TensorElement value = cartan * qexp;
    TensorElement inverse = tensor_inverse(value);
    if ((value * inverse) != TensorElement::unit(alg, 2) ||
        (inverse * value) != TensorElement::unit(alg, 2))
        throw std::runtime_error("RMatrix::build: inverse verification failed");
    return RMatrix(alg, std::move(value), std::move(inverse));
}

TensorElement ad_r(const RMatrix& r, const TensorElement& x) {
    if (x.rank() != 2)
        throw std::invalid_argument("ad_r: needs a rank-2 tensor");
    if (!x.algebra().same_instance(r.algebra()))
        throw std::invalid_argument("ad_r: instance or order mismatch");
    return r.value() * x * r.inverse();
}

TensorElement ad_r_inverse(const RMatrix& r, const TensorElement& x) {
    if (x.rank() != 2)
        throw std::invalid_argument("ad_r_inverse: needs a rank-2 tensor");
    if (!x.algebra().same_instance(r.algebra()))
        throw std::invalid_argument("ad_r_inverse: instance or order mismatch");
    return r.inverse() * x * r.value();
}

VerificationReport quasitriangularity_report(const RMatrix& r,
                                             const std::vector<AlgebraElement>& samples) {
    VerificationReport rep;
    rep.suite = "quasitriangularity";
    const int n = r.order();
    const auto& alg = r.algebra();

    rep.add_valuation("R*Rinv = I", "",
                      (r.value() * r.inverse() - TensorElement::unit(alg, 2)).valuation(), n);
    rep.add_valuation("Rinv*R = I", "",
                      (r.inverse() * r.value() - TensorElement::unit(alg, 2)).valuation(), n);

    int idx = 0;
    for (const auto& a : samples) {
        TensorElement da = coproduct(a);
        TensorElement lhs = ad_r(r, da);
        TensorElement rhs = da.flip(1, 2);
        std::ostringstream inputs;
        inputs << "sample " << idx++;
        rep.add_valuation("R D(a) Rinv = Dop(a)", inputs.str(), (lhs - rhs).valuation(), n);
    }

    const TensorElement r13 = embed_pair(r.value(), 1, 3, 3);
    const TensorElement r23 = embed_pair(r.value(), 2, 3, 3);
    const TensorElement r12 = embed_pair(r.value(), 1, 2, 3);
    rep.add_valuation("(D(x)Id)(R) = R13 R23", "",
                      (r.value().coproduct_leg(1) - r13 * r23).valuation(), n);
    rep.add_valuation("(Id(x)D)(R) = R13 R12", "",
                      (r.value().coproduct_leg(2) - r13 * r12).valuation(), n);
    rep.add_valuation("QYBE R12 R13 R23 = R23 R13 R12", "",
                      (r12 * r13 * r23 - r23 * r13 * r12).valuation(), n);
    return rep;
}

TensorElement r_sigma(const RMatrix& r, const Subset& sigma) {
    const int n = sigma.ambient();
    const int rank = 2 * n;
    const auto& members = sigma.members();
    const int k = sigma.size();
    TensorElement acc = TensorElement::unit(r.algebra(), rank);
    for (int a = 1; a <= k; ++a)
        for (int b = k; b >= 1; --b) {
            const int row = 2 * members[static_cast<size_t>(a - 1)] - 1;
            const int col = 2 * members[static_cast<size_t>(b - 1)];
            acc = acc * embed_pair(r.value(), row, col, rank);
        }
    return acc;
}

int lemma31_residual(const RMatrix& r, const Subset& sigma) {
    TensorElement lhs = delta_sigma_upper(r.value(), sigma);
    TensorElement rhs = r_sigma(r, sigma);
    return (lhs - rhs).valuation();
}

LieTensor classical_r(const RMatrix& r) {
    const TensorElement::Key unit_key(2, Monomial::unit());
    if (r.value().coefficient(unit_key).coeff(0) != 1)
        throw std::invalid_argument("classical_r: R is not I + O(h)");
    for (const auto& [k, c] : r.value().terms())
        if (k != unit_key && c.coeff(0) != 0)
            throw std::invalid_argument("classical_r: R is not I + O(h)");
    TensorElement h1 = r.value().h_coefficient(1);
    if (h1.is_zero())
        return LieTensor(2);
    return lie_from_tensor(h1); // throws if the coefficient leaves g(x)g
}

} // namespace hopfbraid

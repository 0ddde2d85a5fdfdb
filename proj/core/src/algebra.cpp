#include "hopfbraid/algebra.hpp"
#include "hopfbraid/tensor.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hopfbraid {

std::string Monomial::str() const {
    std::ostringstream os;
    os << "F^" << f << " H^" << h << " E^" << e;
    return os.str();
}

namespace {

// Polynomial in H with Series coefficients, keyed by H-degree.
using HPoly = std::map<unsigned, Series>;

void hpoly_add(HPoly& dst, unsigned deg, const Series& c) {
    if (c.is_zero())
        return;
    auto it = dst.find(deg);
    if (it == dst.end()) {
        dst.emplace(deg, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            dst.erase(it);
    }
}

// (H + shift)^b expanded in H.
HPoly hshift_power(unsigned b, long shift, int order) {
    HPoly out;
    if (shift == 0) {
        out.emplace(b, Series::constant(1, order));
        return out;
    }
    Rational pw(1);
    // k runs down from b; coefficient of H^k is C(b,k) shift^{b-k}
    std::vector<Rational> coef(b + 1);
    coef[b] = 1;
    for (int k = static_cast<int>(b) - 1; k >= 0; --k)
        coef[static_cast<size_t>(k)] = coef[static_cast<size_t>(k + 1)] * shift;
    Rational binom(1);
    for (unsigned k = 0; k <= b; ++k) {
        // binom = C(b, k)
        if (k > 0)
            binom = binom * (b - k + 1) / k;
        const Rational c = binom * coef[k];
        if (c != 0)
            hpoly_add(out, k, Series::constant(c, order));
    }
    return out;
}

HPoly hpoly_mul(const HPoly& a, const HPoly& b) {
    HPoly out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            Series c = ca * cb;
            hpoly_add(out, da + db, c);
        }
    return out;
}

} // namespace

struct HopfAlgebra::Impl {
    InstanceKind kind;
    int order;

    HPoly ef_commutator;  // [E,F] as an H-polynomial
    HPoly k_poly;         // exp(h H / 2)
    HPoly k_inv_poly;     // exp(-h H / 2)

    using TermMap = AlgebraElement::TermMap;
    using T2Map = std::map<std::pair<Monomial, Monomial>, Series>;

    mutable std::mutex ef_mutex;
    mutable std::map<std::pair<unsigned, unsigned>, TermMap> ef_cache;

    mutable std::mutex mono_mutex;
    mutable std::map<std::pair<Monomial, Monomial>, TermMap> mono_cache;

    mutable std::mutex cop_mutex;
    mutable std::map<Monomial, T2Map> cop_cache;

    mutable std::mutex antipode_mutex;
    mutable std::map<Monomial, TermMap> antipode_cache;

    Impl(InstanceKind k, int n) : kind(k), order(n) {
        if (n < 1)
            throw std::invalid_argument("HopfAlgebra: order must be >= 1");
        build_constants();
    }

    Series q_power(const Rational& m) const {
        // exp(m h / 2) summed directly
        Series out = Series::constant(1, order);
        Rational cur(1);
        for (int j = 1; j < order; ++j) {
            cur = cur * m / (2 * j);
            out += Series::h_power(j, order) * cur;
        }
        return out;
    }

    void build_constants() {
        if (kind == InstanceKind::Trivial) {
            ef_commutator.emplace(1u, Series::constant(1, order)); // [E,F] = H
            k_poly.emplace(0u, Series::constant(1, order));
            k_inv_poly.emplace(0u, Series::constant(1, order));
            return;
        }
        const int n = order;
        for (int j = 0; j < n; ++j) {
            Rational fact(1);
            for (int i = 2; i <= j; ++i)
                fact *= i;
            const Rational half_j = Rational(1) / (Rational(1) << j); // 2^-j
            hpoly_add(k_poly, static_cast<unsigned>(j),
                      Series::h_power(j, n) * (half_j / fact));
            const Rational sign = (j % 2 == 0) ? 1 : -1;
            hpoly_add(k_inv_poly, static_cast<unsigned>(j),
                      Series::h_power(j, n) * (sign * half_j / fact));
        }
        // (K - K^-1)/(q - q^-1): both numerator and denominator have
        // h-valuation 1, so build them one order higher, divide by h
        // exactly, and only then truncate back to N.
        const int m = n + 1;
        Series qdiff(m);
        HPoly num;
        Rational fact(1);
        for (int j = 1; j < m; ++j) {
            fact *= j;
            if (j % 2 == 0)
                continue; // even terms cancel in x - x^-1
            const Rational c = Rational(2) / ((Rational(1) << j) * fact);
            qdiff += Series::h_power(j, m) * c;
            hpoly_add(num, static_cast<unsigned>(j), Series::h_power(j, m) * c);
        }
        const Series qdiff_over_h = qdiff.shift_down(1).truncated(n);
        const Series inv = qdiff_over_h.inverse();
        for (const auto& [deg, c] : num) {
            Series reduced = c.shift_down(1).truncated(n) * inv;
            hpoly_add(ef_commutator, deg, reduced);
        }
    }

    static void term_add(TermMap& dst, const Monomial& mono, const Series& c) {
        if (c.is_zero())
            return;
        auto it = dst.find(mono);
        if (it == dst.end()) {
            dst.emplace(mono, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                dst.erase(it);
        }
    }

    // E * x for x in normal form.
    TermMap lmul_e(const TermMap& x) const {
        TermMap out;
        for (const auto& [mono, c] : x) {
            if (mono.f == 0) {
                // E H^b E^e = (H-2)^b E^{e+1}
                HPoly poly = hshift_power(mono.h, -2, order);
                for (const auto& [deg, pc] : poly)
                    term_add(out, Monomial{0, deg, mono.e + 1}, pc * c);
            } else {
                // E F = F E + [E,F];  push E one F to the right
                TermMap sub =
                    lmul_e(TermMap{{Monomial{mono.f - 1, mono.h, mono.e}, Series::constant(1, order)}});
                for (const auto& [sm, sc] : sub)
                    term_add(out, Monomial{sm.f + 1, sm.h, sm.e}, sc * c);
                // [E,F](H) F^{f-1} = F^{f-1} [E,F](H - 2(f-1))
                HPoly shifted;
                for (const auto& [deg, gc] : ef_commutator) {
                    HPoly p = hshift_power(deg, -2 * (static_cast<long>(mono.f) - 1), order);
                    for (const auto& [d2, c2] : p)
                        hpoly_add(shifted, d2, c2 * gc);
                }
                for (const auto& [deg, gc] : shifted)
                    term_add(out, Monomial{mono.f - 1, deg + mono.h, mono.e}, gc * c);
            }
        }
        return out;
    }

    const TermMap& e_pow_times_f_pow(unsigned e1, unsigned f2) const {
        std::lock_guard<std::mutex> lock(ef_mutex);
        auto key = std::make_pair(e1, f2);
        auto it = ef_cache.find(key);
        if (it != ef_cache.end())
            return it->second;
        TermMap cur{{Monomial{f2, 0, 0}, Series::constant(1, order)}};
        for (unsigned i = 0; i < e1; ++i)
            cur = lmul_e(cur);
        return ef_cache.emplace(key, std::move(cur)).first->second;
    }

    const TermMap& mul_mono(const Monomial& a, const Monomial& b) const {
        {
            std::lock_guard<std::mutex> lock(mono_mutex);
            auto it = mono_cache.find(std::make_pair(a, b));
            if (it != mono_cache.end())
                return it->second;
        }
        TermMap out = mul_mono_uncached(a, b);
        std::lock_guard<std::mutex> lock(mono_mutex);
        return mono_cache.emplace(std::make_pair(a, b), std::move(out)).first->second;
    }

    TermMap mul_mono_uncached(const Monomial& a, const Monomial& b) const {
        TermMap out;
        const TermMap mid = e_pow_times_f_pow(a.e, b.f);
        for (const auto& [mono, c] : mid) {
            // F^{a.f} H^{a.h} (F^f H^h E^e) H^{b.h} E^{b.e}
            //   = F^{a.f+f} (H-2f)^{a.h} H^h (H-2e)^{b.h} E^{e+b.e}
            if (a.h == 0 && b.h == 0) {
                term_add(out, Monomial{a.f + mono.f, mono.h, mono.e + b.e}, c);
                continue;
            }
            HPoly poly = hshift_power(a.h, -2 * static_cast<long>(mono.f), order);
            if (b.h > 0)
                poly = hpoly_mul(poly, hshift_power(b.h, -2 * static_cast<long>(mono.e), order));
            for (const auto& [deg, pc] : poly)
                term_add(out, Monomial{a.f + mono.f, deg + mono.h, mono.e + b.e}, pc * c);
        }
        return out;
    }

    static T2Map t2_mul_maps(const Impl& impl, const T2Map& x, const T2Map& y) {
        T2Map out;
        for (const auto& [mx, cx] : x)
            for (const auto& [my, cy] : y) {
                Series c = cx * cy;
                if (c.is_zero())
                    continue;
                TermMap left = impl.mul_mono(mx.first, my.first);
                TermMap right = impl.mul_mono(mx.second, my.second);
                for (const auto& [ml, cl] : left) {
                    Series cc = c * cl;
                    if (cc.is_zero())
                        continue;
                    for (const auto& [mr, cr] : right) {
                        Series s = cc * cr;
                        if (s.is_zero())
                            continue;
                        auto key = std::make_pair(ml, mr);
                        auto it = out.find(key);
                        if (it == out.end()) {
                            out.emplace(key, s);
                        } else {
                            it->second += s;
                            if (it->second.is_zero())
                                out.erase(it);
                        }
                    }
                }
            }
        return out;
    }

    const T2Map& coproduct_mono(const Monomial& m) const {
        std::lock_guard<std::mutex> lock(cop_mutex);
        auto it = cop_cache.find(m);
        if (it != cop_cache.end())
            return it->second;

        const Series one = Series::constant(1, order);
        T2Map d_e, d_f, d_h;
        d_h.emplace(std::make_pair(Monomial::H(), Monomial::unit()), one);
        d_h.emplace(std::make_pair(Monomial::unit(), Monomial::H()), one);
        if (kind == InstanceKind::Uhsl2) {
            // D(E) = E (x) K + 1 (x) E,  D(F) = F (x) 1 + K^-1 (x) F
            for (const auto& [deg, c] : k_poly)
                d_e.emplace(std::make_pair(Monomial::E(), Monomial::H(deg)), c);
            d_e.emplace(std::make_pair(Monomial::unit(), Monomial::E()), one);
            d_f.emplace(std::make_pair(Monomial::F(), Monomial::unit()), one);
            for (const auto& [deg, c] : k_inv_poly)
                d_f.emplace(std::make_pair(Monomial::H(deg), Monomial::F()), c);
        } else {
            d_e.emplace(std::make_pair(Monomial::E(), Monomial::unit()), one);
            d_e.emplace(std::make_pair(Monomial::unit(), Monomial::E()), one);
            d_f.emplace(std::make_pair(Monomial::F(), Monomial::unit()), one);
            d_f.emplace(std::make_pair(Monomial::unit(), Monomial::F()), one);
        }

        T2Map r;
        r.emplace(std::make_pair(Monomial::unit(), Monomial::unit()), one);
        for (unsigned i = 0; i < m.f; ++i)
            r = t2_mul_maps(*this, r, d_f);
        for (unsigned i = 0; i < m.h; ++i)
            r = t2_mul_maps(*this, r, d_h);
        for (unsigned i = 0; i < m.e; ++i)
            r = t2_mul_maps(*this, r, d_e);
        return cop_cache.emplace(m, std::move(r)).first->second;
    }

    TermMap mul_elems(const TermMap& x, const TermMap& y) const {
        TermMap out;
        const int n = order;
        for (const auto& [mx, cx] : x) {
            const int vx = cx.valuation();
            for (const auto& [my, cy] : y) {
                if (vx + cy.valuation() >= n)
                    continue; // product truncates to zero
                Series c = cx * cy;
                for (const auto& [m, cm] : mul_mono(mx, my))
                    term_add(out, m, cm * c);
            }
        }
        return out;
    }

    const TermMap& antipode_mono(const Monomial& m) const {
        std::lock_guard<std::mutex> lock(antipode_mutex);
        auto it = antipode_cache.find(m);
        if (it != antipode_cache.end())
            return it->second;

        const Series one = Series::constant(1, order);
        TermMap s_e, s_f;
        const TermMap s_h{{Monomial::H(), -one}};
        if (kind == InstanceKind::Uhsl2) {
            // S(E) = -E K^-1 and S(F) = -K F, both rewritten to normal order
            TermMap kinv, kk;
            for (const auto& [deg, c] : k_inv_poly)
                kinv.emplace(Monomial::H(deg), c);
            for (const auto& [deg, c] : k_poly)
                kk.emplace(Monomial::H(deg), c);
            s_e = mul_elems(TermMap{{Monomial::E(), -one}}, kinv);
            s_f = mul_elems(kk, TermMap{{Monomial::F(), -one}});
        } else {
            s_e.emplace(Monomial::E(), -one);
            s_f.emplace(Monomial::F(), -one);
        }
        // anti-morphism: S(F^f H^h E^e) = S(E)^e S(H)^h S(F)^f
        TermMap r{{Monomial::unit(), one}};
        for (unsigned i = 0; i < m.e; ++i)
            r = mul_elems(r, s_e);
        for (unsigned i = 0; i < m.h; ++i)
            r = mul_elems(r, s_h);
        for (unsigned i = 0; i < m.f; ++i)
            r = mul_elems(r, s_f);
        return antipode_cache.emplace(m, std::move(r)).first->second;
    }
};

HopfAlgebra HopfAlgebra::uhsl2(int order) { return make(InstanceKind::Uhsl2, order); }
HopfAlgebra HopfAlgebra::trivial(int order) { return make(InstanceKind::Trivial, order); }

HopfAlgebra HopfAlgebra::make(InstanceKind kind, int order) {
    return HopfAlgebra(std::make_shared<const Impl>(kind, order));
}

InstanceKind HopfAlgebra::kind() const { return impl_->kind; }
int HopfAlgebra::order() const { return impl_->order; }

std::string HopfAlgebra::name() const {
    return impl_->kind == InstanceKind::Uhsl2 ? "uhsl2" : "trivial";
}

AlgebraElement HopfAlgebra::zero() const { return AlgebraElement(*this); }

AlgebraElement HopfAlgebra::monomial(const Monomial& m) const {
    AlgebraElement x(*this);
    x.insert_term(m, Series::constant(1, order()));
    return x;
}

AlgebraElement HopfAlgebra::one() const { return monomial(Monomial::unit()); }
AlgebraElement HopfAlgebra::e() const { return monomial(Monomial::E()); }
AlgebraElement HopfAlgebra::f() const { return monomial(Monomial::F()); }
AlgebraElement HopfAlgebra::h() const { return monomial(Monomial::H()); }

AlgebraElement HopfAlgebra::k() const {
    AlgebraElement x(*this);
    for (const auto& [deg, c] : impl_->k_poly)
        x.insert_term(Monomial::H(deg), c);
    return x;
}

AlgebraElement HopfAlgebra::k_inverse() const {
    AlgebraElement x(*this);
    for (const auto& [deg, c] : impl_->k_inv_poly)
        x.insert_term(Monomial::H(deg), c);
    return x;
}

Series HopfAlgebra::q_power(const Rational& m) const { return impl_->q_power(m); }

const HopfAlgebra::TermMap& HopfAlgebra::multiply_monomials(const Monomial& a,
                                                            const Monomial& b) const {
    return impl_->mul_mono(a, b);
}

const HopfAlgebra::PairTermMap& HopfAlgebra::coproduct_monomial(const Monomial& m) const {
    return impl_->coproduct_mono(m);
}

const HopfAlgebra::TermMap& HopfAlgebra::antipode_monomial(const Monomial& m) const {
    return impl_->antipode_mono(m);
}

AlgebraElement::AlgebraElement(HopfAlgebra alg) : alg_(std::move(alg)) {}

AlgebraElement::AlgebraElement(HopfAlgebra alg, TermMap terms) : alg_(std::move(alg)) {
    for (auto& [m, c] : terms)
        insert_term(m, c);
}

Series AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end())
        return it->second;
    return Series(order());
}

void AlgebraElement::insert_term(const Monomial& m, const Series& c) {
    if (c.is_zero())
        return;
    if (c.order() != order())
        throw std::invalid_argument("AlgebraElement: coefficient order mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void AlgebraElement::check_compatible(const AlgebraElement& rhs) const {
    if (!alg_.same_instance(rhs.alg_))
        throw std::invalid_argument("AlgebraElement: instance or order mismatch");
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(alg_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_)
        insert_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_)
        insert_term(m, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    check_compatible(rhs);
    return AlgebraElement(alg_, alg_.impl().mul_elems(terms_, rhs.terms_));
}

AlgebraElement AlgebraElement::scaled(const Series& s) const {
    AlgebraElement r(alg_);
    if (s.is_zero())
        return r;
    for (const auto& [m, c] : terms_)
        r.insert_term(m, c * s);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    return scaled(Series::constant(c, order()));
}

Series AlgebraElement::counit() const { return coefficient(Monomial::unit()); }

AlgebraElement AlgebraElement::antipode() const {
    AlgebraElement r(alg_);
    for (const auto& [m, c] : terms_)
        for (const auto& [sm, sc] : alg_.impl().antipode_mono(m))
            r.insert_term(sm, sc * c);
    return r;
}

AlgebraElement AlgebraElement::specialize_h0() const { return h_coefficient(0); }

AlgebraElement AlgebraElement::shift_down(int k) const {
    AlgebraElement r(alg_);
    for (const auto& [m, c] : terms_)
        r.insert_term(m, c.shift_down(k));
    return r;
}

AlgebraElement AlgebraElement::h_coefficient(int k) const {
    AlgebraElement r(alg_);
    for (const auto& [m, c] : terms_)
        r.insert_term(m, Series::constant(c.coeff(k), order()));
    return r;
}

int AlgebraElement::valuation() const {
    int v = order();
    for (const auto& [m, c] : terms_)
        v = std::min(v, c.valuation());
    return v;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    check_compatible(rhs);
    return terms_ == rhs.terms_;
}

std::string AlgebraElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << "\n";
        first = false;
        os << m.str() << " : " << c.str();
    }
    return os.str();
}

TensorElement AlgebraElement::as_tensor() const {
    TensorElement t(alg_, 1);
    for (const auto& [m, c] : terms_)
        t.insert_term({m}, c);
    return t;
}

} // namespace hopfbraid

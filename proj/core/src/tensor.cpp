#include "hopfbraid/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfbraid {

TensorElement::TensorElement(HopfAlgebra alg, int rank) : alg_(std::move(alg)), rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("TensorElement: rank must be >= 1");
}

TensorElement TensorElement::unit(const HopfAlgebra& alg, int rank) {
    TensorElement t(alg, rank);
    t.insert_term(Key(static_cast<size_t>(rank), Monomial::unit()),
                  Series::constant(1, alg.order()));
    return t;
}

bool TensorElement::is_unit() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](const Monomial& m) { return m.is_unit(); });
}

Series TensorElement::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    if (it != terms_.end())
        return it->second;
    return Series(order());
}

void TensorElement::insert_term(Key key, const Series& c) {
    if (static_cast<int>(key.size()) != rank_)
        throw std::invalid_argument("TensorElement: key length does not match rank");
    if (c.is_zero())
        return;
    if (c.order() != order())
        throw std::invalid_argument("TensorElement: coefficient order mismatch");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void TensorElement::check_compatible(const TensorElement& rhs) const {
    if (rank_ != rhs.rank_)
        throw std::invalid_argument("TensorElement: rank mismatch");
    if (!alg_.same_instance(rhs.alg_))
        throw std::invalid_argument("TensorElement: instance or order mismatch");
}

TensorElement TensorElement::operator-() const {
    TensorElement r(alg_, rank_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
    check_compatible(rhs);
    for (const auto& [k, c] : rhs.terms_)
        insert_term(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
    check_compatible(rhs);
    for (const auto& [k, c] : rhs.terms_)
        insert_term(k, -c);
    return *this;
}

TensorElement TensorElement::operator*(const TensorElement& rhs) const {
    check_compatible(rhs);
    const int n = order();
    TensorElement out(alg_, rank_);
    for (const auto& [k1, c1] : terms_) {
        const int v1 = c1.valuation();
        for (const auto& [k2, c2] : rhs.terms_) {
            if (v1 + c2.valuation() >= n)
                continue;
            Series c = c1 * c2;
            // distribute the per-leg normal-ordered products
            std::vector<std::pair<Key, Series>> acc;
            acc.emplace_back(Key{}, std::move(c));
            for (int leg = 0; leg < rank_; ++leg) {
                const auto& prod = alg_.multiply_monomials(k1[static_cast<size_t>(leg)],
                                                           k2[static_cast<size_t>(leg)]);
                std::vector<std::pair<Key, Series>> next;
                for (const auto& [prefix, cc] : acc) {
                    const int vcc = cc.valuation();
                    for (const auto& [m, cm] : prod) {
                        if (vcc + cm.valuation() >= n)
                            continue;
                        Key key = prefix;
                        key.push_back(m);
                        next.emplace_back(std::move(key), cc * cm);
                    }
                }
                acc = std::move(next);
                if (acc.empty())
                    break;
            }
            for (auto& [key, s] : acc)
                out.insert_term(std::move(key), s);
        }
    }
    return out;
}

TensorElement TensorElement::scaled(const Series& s) const {
    TensorElement r(alg_, rank_);
    if (s.is_zero())
        return r;
    for (const auto& [k, c] : terms_)
        r.insert_term(k, c * s);
    return r;
}

TensorElement TensorElement::scaled(const Rational& c) const {
    return scaled(Series::constant(c, order()));
}

TensorElement TensorElement::tensor_product(const TensorElement& rhs) const {
    if (!alg_.same_instance(rhs.alg_))
        throw std::invalid_argument("TensorElement: instance or order mismatch");
    TensorElement out(alg_, rank_ + rhs.rank_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : rhs.terms_) {
            Series c = c1 * c2;
            if (c.is_zero())
                continue;
            Key key = k1;
            key.insert(key.end(), k2.begin(), k2.end());
            out.insert_term(std::move(key), c);
        }
    return out;
}

TensorElement TensorElement::embed_at(const std::vector<int>& positions, int new_rank) const {
    if (static_cast<int>(positions.size()) != rank_)
        throw std::invalid_argument("embed_at: positions size must equal rank");
    std::vector<int> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > new_rank)
            throw std::invalid_argument("embed_at: position out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("embed_at: duplicate position");
    }
    TensorElement out(alg_, new_rank);
    for (const auto& [k, c] : terms_) {
        Key key(static_cast<size_t>(new_rank), Monomial::unit());
        for (int m = 0; m < rank_; ++m)
            key[static_cast<size_t>(positions[static_cast<size_t>(m)] - 1)] =
                k[static_cast<size_t>(m)];
        out.insert_term(std::move(key), c);
    }
    return out;
}

TensorElement TensorElement::flip(int i, int j) const {
    if (i < 1 || j < 1 || i > rank_ || j > rank_)
        throw std::invalid_argument("flip: leg out of range");
    TensorElement out(alg_, rank_);
    for (const auto& [k, c] : terms_) {
        Key key = k;
        std::swap(key[static_cast<size_t>(i - 1)], key[static_cast<size_t>(j - 1)]);
        out.insert_term(std::move(key), c);
    }
    return out;
}

TensorElement TensorElement::counit_leg(int leg) const {
    if (leg < 1 || leg > rank_)
        throw std::invalid_argument("counit_leg: leg out of range");
    if (rank_ == 1)
        throw std::invalid_argument("counit_leg: would produce rank 0; use counit on elements");
    TensorElement out(alg_, rank_ - 1);
    for (const auto& [k, c] : terms_) {
        if (!k[static_cast<size_t>(leg - 1)].is_unit())
            continue; // counit kills every non-unit monomial
        Key key;
        key.reserve(static_cast<size_t>(rank_ - 1));
        for (int i = 0; i < rank_; ++i)
            if (i != leg - 1)
                key.push_back(k[static_cast<size_t>(i)]);
        out.insert_term(std::move(key), c);
    }
    return out;
}

TensorElement TensorElement::multiply_legs(int leg) const {
    if (leg < 1 || leg >= rank_)
        throw std::invalid_argument("multiply_legs: leg out of range");
    TensorElement out(alg_, rank_ - 1);
    for (const auto& [k, c] : terms_) {
        const auto& prod = alg_.multiply_monomials(k[static_cast<size_t>(leg - 1)],
                                                   k[static_cast<size_t>(leg)]);
        for (const auto& [m, cm] : prod) {
            Series s = c * cm;
            if (s.is_zero())
                continue;
            Key key;
            key.reserve(static_cast<size_t>(rank_ - 1));
            for (int i = 0; i < leg - 1; ++i)
                key.push_back(k[static_cast<size_t>(i)]);
            key.push_back(m);
            for (int i = leg + 1; i < rank_; ++i)
                key.push_back(k[static_cast<size_t>(i)]);
            out.insert_term(std::move(key), s);
        }
    }
    return out;
}

TensorElement TensorElement::antipode_leg(int leg) const {
    if (leg < 1 || leg > rank_)
        throw std::invalid_argument("antipode_leg: leg out of range");
    TensorElement out(alg_, rank_);
    for (const auto& [k, c] : terms_) {
        for (const auto& [m, cm] : alg_.antipode_monomial(k[static_cast<size_t>(leg - 1)])) {
            Series s = c * cm;
            if (s.is_zero())
                continue;
            Key key = k;
            key[static_cast<size_t>(leg - 1)] = m;
            out.insert_term(std::move(key), s);
        }
    }
    return out;
}

TensorElement TensorElement::coproduct_leg(int leg) const {
    if (leg < 1 || leg > rank_)
        throw std::invalid_argument("coproduct_leg: leg out of range");
    TensorElement out(alg_, rank_ + 1);
    for (const auto& [k, c] : terms_) {
        for (const auto& [pair, cc] : alg_.coproduct_monomial(k[static_cast<size_t>(leg - 1)])) {
            Series s = c * cc;
            if (s.is_zero())
                continue;
            Key key;
            key.reserve(static_cast<size_t>(rank_ + 1));
            for (int i = 0; i < leg - 1; ++i)
                key.push_back(k[static_cast<size_t>(i)]);
            key.push_back(pair.first);
            key.push_back(pair.second);
            for (int i = leg; i < rank_; ++i)
                key.push_back(k[static_cast<size_t>(i)]);
            out.insert_term(std::move(key), s);
        }
    }
    return out;
}

TensorElement TensorElement::specialize_h0() const { return h_coefficient(0); }

TensorElement TensorElement::h_coefficient(int k) const {
    TensorElement r(alg_, rank_);
    for (const auto& [key, c] : terms_)
        r.insert_term(key, Series::constant(c.coeff(k), order()));
    return r;
}

TensorElement TensorElement::shift_down(int k) const {
    TensorElement r(alg_, rank_);
    for (const auto& [key, c] : terms_)
        r.insert_term(key, c.shift_down(k));
    return r;
}

int TensorElement::valuation() const {
    int v = order();
    for (const auto& [k, c] : terms_)
        v = std::min(v, c.valuation());
    return v;
}

bool TensorElement::supported_on(const Subset& legs) const {
    for (const auto& [k, c] : terms_)
        for (int i = 1; i <= rank_; ++i)
            if (!legs.contains(i) && !k[static_cast<size_t>(i - 1)].is_unit())
                return false;
    return true;
}

bool TensorElement::operator==(const TensorElement& rhs) const {
    check_compatible(rhs);
    return terms_ == rhs.terms_;
}

std::string TensorElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << "\n";
        first = false;
        for (size_t i = 0; i < k.size(); ++i) {
            if (i)
                os << " | ";
            os << k[i].str();
        }
        os << " : " << c.str();
    }
    return os.str();
}

TensorElement embed_j_sigma(const TensorElement& x, const Subset& sigma) {
    if (x.rank() != sigma.size())
        throw std::invalid_argument("embed_j_sigma: rank must equal |sigma|");
    return x.embed_at(sigma.members(), sigma.ambient());
}

TensorElement embed_pair(const TensorElement& x, int r, int s, int rank) {
    if (x.rank() != 2)
        throw std::invalid_argument("embed_pair: needs a rank-2 tensor");
    if (r == s)
        throw std::invalid_argument("embed_pair: positions must be distinct");
    if (r < s)
        return x.embed_at({r, s}, rank);
    return x.flip(1, 2).embed_at({s, r}, rank);
}

} // namespace hopfbraid

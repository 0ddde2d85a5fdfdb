#include "hopfbraid/coalgebra.hpp"

#include <stdexcept>

namespace hopfbraid {

TensorElement block_delta_step(const TensorElement& x, int width) {
    if (width < 1 || x.rank() % width != 0)
        throw std::invalid_argument("block_delta_step: rank is not a multiple of width");
    const auto& alg = x.algebra();
    const int n = alg.order();
    TensorElement out(alg, x.rank() + width);
    using Key = TensorElement::Key;
    for (const auto& [k, c] : x.terms()) {
        // expand the coproduct of each leg of the first block; leg i of the
        // block feeds output legs i (first copy) and width+i (second copy)
        std::vector<std::pair<std::pair<Key, Key>, Series>> acc;
        acc.emplace_back(std::make_pair(Key{}, Key{}), c);
        for (int leg = 0; leg < width; ++leg) {
            const auto& cop = alg.coproduct_monomial(k[static_cast<size_t>(leg)]);
            std::vector<std::pair<std::pair<Key, Key>, Series>> next;
            for (const auto& [prefixes, cc] : acc) {
                const int vcc = cc.valuation();
                for (const auto& [pair, cp] : cop) {
                    if (vcc + cp.valuation() >= n)
                        continue;
                    auto p = prefixes;
                    p.first.push_back(pair.first);
                    p.second.push_back(pair.second);
                    next.emplace_back(std::move(p), cc * cp);
                }
            }
            acc = std::move(next);
            if (acc.empty())
                break;
        }
        for (auto& [prefixes, s] : acc) {
            Key key = std::move(prefixes.first);
            key.insert(key.end(), prefixes.second.begin(), prefixes.second.end());
            key.insert(key.end(), k.begin() + width, k.end());
            out.insert_term(std::move(key), s);
        }
    }
    return out;
}

TensorElement delta_power(const TensorElement& x, int n) {
    if (n < 1)
        throw std::invalid_argument("delta_power: n must be >= 1 (n = 0 is the counit)");
    const int width = x.rank();
    TensorElement cur = x;
    for (int i = 1; i < n; ++i)
        cur = block_delta_step(cur, width);
    return cur;
}

TensorElement delta_power(const AlgebraElement& x, int n) {
    return delta_power(x.as_tensor(), n);
}

Series block_counit(const TensorElement& x) {
    // the counit of a PBW monomial is 1 on the unit and 0 otherwise, so
    // only the all-unit key survives
    return x.coefficient(
        TensorElement::Key(static_cast<size_t>(x.rank()), Monomial::unit()));
}

namespace {

TensorElement embed_blocks(const TensorElement& blocks, const Subset& sigma, int width) {
    std::vector<int> positions;
    positions.reserve(static_cast<size_t>(blocks.rank()));
    for (int m : sigma.members())
        for (int w = 0; w < width; ++w)
            positions.push_back((m - 1) * width + w + 1);
    return blocks.embed_at(positions, sigma.ambient() * width);
}

} // namespace

TensorElement delta_sigma_upper(const TensorElement& x, const Subset& sigma) {
    const int width = x.rank();
    const int k = sigma.size();
    if (k == 0)
        return TensorElement::unit(x.algebra(), sigma.ambient() * width)
            .scaled(block_counit(x));
    return embed_blocks(delta_power(x, k), sigma, width);
}

TensorElement delta_sigma_upper(const AlgebraElement& x, const Subset& sigma) {
    return delta_sigma_upper(x.as_tensor(), sigma);
}

TensorElement delta_sigma_lower(const TensorElement& x, const Subset& sigma) {
    const int width = x.rank();
    const int k = sigma.size();
    // delta powers by cardinality, computed once and embedded per subset
    std::vector<TensorElement> powers;
    powers.reserve(static_cast<size_t>(k) + 1);
    powers.push_back(x); // placeholder for cardinality 0, unused below
    for (int c = 1; c <= k; ++c)
        powers.push_back(c == 1 ? x : block_delta_step(powers.back(), width));

    TensorElement out(x.algebra(), sigma.ambient() * width);
    for (const auto& sub : sigma.subsets()) {
        const int c = sub.size();
        TensorElement term = (c == 0)
                                 ? TensorElement::unit(x.algebra(), sigma.ambient() * width)
                                       .scaled(block_counit(x))
                                 : embed_blocks(powers[static_cast<size_t>(c)], sub, width);
        if ((k - c) % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

TensorElement delta_sigma_lower(const AlgebraElement& x, const Subset& sigma) {
    return delta_sigma_lower(x.as_tensor(), sigma);
}

TensorElement delta_full(const TensorElement& x, int n) {
    return delta_sigma_lower(x, Subset::full(n));
}

TensorElement delta_full(const AlgebraElement& x, int n) {
    return delta_full(x.as_tensor(), n);
}

TensorElement coproduct(const AlgebraElement& x) {
    return delta_power(x.as_tensor(), 2);
}

TensorElement tilde_coproduct(const TensorElement& x) {
    if (x.rank() != 2)
        throw std::invalid_argument("tilde_coproduct: needs a rank-2 tensor");
    return block_delta_step(x, 2);
}

RoundtripResult mobius_roundtrip(const TensorElement& x, const Subset& sigma) {
    TensorElement lhs = delta_sigma_upper(x, sigma);
    TensorElement rhs(x.algebra(), sigma.ambient() * x.rank());
    for (const auto& sub : sigma.subsets())
        rhs += delta_sigma_lower(x, sub);
    const int v = (lhs - rhs).valuation();
    return RoundtripResult{v >= x.order(), v};
}

RoundtripResult mobius_roundtrip(const AlgebraElement& x, const Subset& sigma) {
    return mobius_roundtrip(x.as_tensor(), sigma);
}

int tensor_valuation(const TensorElement& t) { return t.valuation(); }

} // namespace hopfbraid

#include "hopfbraid/classical.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfbraid {

std::string lie_basis_name(LieBasis b) {
    switch (b) {
    case LieBasis::E: return "E";
    case LieBasis::H: return "H";
    case LieBasis::F: return "F";
    }
    return "?";
}

LieTensor::LieTensor(int rank) : rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("LieTensor: rank must be >= 1");
}

LieTensor LieTensor::basis(LieBasis b) {
    LieTensor t(1);
    t.insert_term({b}, 1);
    return t;
}

void LieTensor::insert_term(Key key, const Rational& c) {
    if (static_cast<int>(key.size()) != rank_)
        throw std::invalid_argument("LieTensor: key length does not match rank");
    if (c == 0)
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational LieTensor::coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

LieTensor LieTensor::operator-() const {
    LieTensor r(rank_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

LieTensor& LieTensor::operator+=(const LieTensor& rhs) {
    if (rank_ != rhs.rank_)
        throw std::invalid_argument("LieTensor: rank mismatch");
    for (const auto& [k, c] : rhs.terms_)
        insert_term(k, c);
    return *this;
}

LieTensor& LieTensor::operator-=(const LieTensor& rhs) {
    if (rank_ != rhs.rank_)
        throw std::invalid_argument("LieTensor: rank mismatch");
    for (const auto& [k, c] : rhs.terms_)
        insert_term(k, -c);
    return *this;
}

LieTensor LieTensor::scaled(const Rational& c) const {
    LieTensor r(rank_);
    if (c == 0)
        return r;
    for (const auto& [k, v] : terms_)
        r.terms_.emplace(k, v * c);
    return r;
}

LieTensor LieTensor::flip(int i, int j) const {
    LieTensor r(rank_);
    for (const auto& [k, c] : terms_) {
        Key key = k;
        std::swap(key[static_cast<size_t>(i - 1)], key[static_cast<size_t>(j - 1)]);
        r.insert_term(std::move(key), c);
    }
    return r;
}

LieTensor LieTensor::rotated() const {
    LieTensor r(rank_);
    for (const auto& [k, c] : terms_) {
        Key key(k.size());
        for (size_t i = 0; i < k.size(); ++i)
            key[(i + 1) % k.size()] = k[i];
        r.insert_term(std::move(key), c);
    }
    return r;
}

bool LieTensor::operator==(const LieTensor& rhs) const {
    return rank_ == rhs.rank_ && terms_ == rhs.terms_;
}

std::string LieTensor::str() const {
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
                os << "(x)";
            os << lie_basis_name(k[i]);
        }
        os << " : " << c;
    }
    return os.str();
}

namespace {

Monomial basis_monomial(LieBasis b) {
    switch (b) {
    case LieBasis::E: return Monomial::E();
    case LieBasis::H: return Monomial::H();
    case LieBasis::F: return Monomial::F();
    }
    return Monomial::unit();
}

} // namespace

TensorElement lie_to_tensor(const HopfAlgebra& alg, const LieTensor& t) {
    TensorElement out(alg, t.rank());
    for (const auto& [k, c] : t.terms()) {
        TensorElement::Key key;
        key.reserve(k.size());
        for (LieBasis b : k)
            key.push_back(basis_monomial(b));
        out.insert_term(std::move(key), Series::constant(c, alg.order()));
    }
    return out;
}

LieTensor lie_from_tensor(const TensorElement& t) {
    LieTensor out(t.rank());
    for (const auto& [k, c] : t.terms()) {
        for (int j = 1; j < c.order(); ++j)
            if (c.coeff(j) != 0)
                throw std::invalid_argument(
                    "lie_from_tensor: coefficient has h-dependence, not in g^{(x)n}");
        LieTensor::Key key;
        key.reserve(k.size());
        for (const Monomial& m : k) {
            if (m == Monomial::E())
                key.push_back(LieBasis::E);
            else if (m == Monomial::H())
                key.push_back(LieBasis::H);
            else if (m == Monomial::F())
                key.push_back(LieBasis::F);
            else
                throw std::invalid_argument("lie_from_tensor: leg " + m.str() +
                                            " is not a degree-1 basis monomial");
        }
        out.insert_term(std::move(key), c.coeff(0));
    }
    return out;
}

namespace {

// classical ambient algebra for commutator computations; order 2 suffices
// because every coefficient in sight is constant
const HopfAlgebra& classical_ambient() {
    static const HopfAlgebra alg = HopfAlgebra::trivial(2);
    return alg;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
    return a * b - b * a;
}

} // namespace

LieTensor cybe_residual(const LieTensor& r) {
    if (r.rank() != 2)
        throw std::invalid_argument("cybe_residual: needs a rank-2 tensor");
    const auto& alg = classical_ambient();
    TensorElement rt = lie_to_tensor(alg, r);
    TensorElement r12 = rt.embed_at({1, 2}, 3);
    TensorElement r13 = rt.embed_at({1, 3}, 3);
    TensorElement r23 = rt.embed_at({2, 3}, 3);
    TensorElement sum = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
    return lie_from_tensor(sum);
}

LieTensor cobracket(const LieTensor& x, const LieTensor& r) {
    if (x.rank() != 1 || r.rank() != 2)
        throw std::invalid_argument("cobracket: needs rank-1 x and rank-2 r");
    const auto& alg = classical_ambient();
    TensorElement xt = lie_to_tensor(alg, x);
    TensorElement rt = lie_to_tensor(alg, r);
    TensorElement ad = xt.embed_at({1}, 2) + xt.embed_at({2}, 2);
    return lie_from_tensor(commutator(ad, rt));
}

namespace {

const std::vector<LieBasis>& basis3() {
    static const std::vector<LieBasis> b{LieBasis::E, LieBasis::H, LieBasis::F};
    return b;
}

// [x, y] in sl2 as a LieTensor of rank 1
LieTensor lie_bracket(LieBasis x, LieBasis y) {
    const auto& alg = classical_ambient();
    TensorElement xt = lie_to_tensor(alg, LieTensor::basis(x));
    TensorElement yt = lie_to_tensor(alg, LieTensor::basis(y));
    return lie_from_tensor(commutator(xt, yt));
}

// adjoint action of basis element x on a rank-2 tensor
LieTensor ad2(LieBasis x, const LieTensor& t) {
    const auto& alg = classical_ambient();
    TensorElement xt = lie_to_tensor(alg, LieTensor::basis(x));
    TensorElement tt = lie_to_tensor(alg, t);
    TensorElement ad = xt.embed_at({1}, 2) + xt.embed_at({2}, 2);
    return lie_from_tensor(commutator(ad, tt));
}

} // namespace

VerificationReport bialgebra_checks_report(const LieTensor& r) {
    VerificationReport rep;
    rep.suite = "bialgebra";
    // (i) antisymmetry of the cobracket on the basis
    for (LieBasis x : basis3()) {
        LieTensor d = cobracket(LieTensor::basis(x), r);
        const bool ok = (d + d.flip(1, 2)).is_zero();
        CheckResult c;
        c.name = "cobracket-antisymmetry";
        c.inputs = "x=" + lie_basis_name(x);
        c.pass = ok;
        rep.add(std::move(c));
    }
    // (ii) co-Jacobi: cyclic sum of (delta (x) id) after delta vanishes
    for (LieBasis x : basis3()) {
        LieTensor d = cobracket(LieTensor::basis(x), r);
        LieTensor expanded(3);
        for (const auto& [k, c] : d.terms()) {
            LieTensor da = cobracket(LieTensor::basis(k[0]), r);
            for (const auto& [k2, c2] : da.terms())
                expanded.insert_term({k2[0], k2[1], k[1]}, c * c2);
        }
        LieTensor cyc = expanded + expanded.rotated() + expanded.rotated().rotated();
        CheckResult c;
        c.name = "co-jacobi";
        c.inputs = "x=" + lie_basis_name(x);
        c.pass = cyc.is_zero();
        rep.add(std::move(c));
    }
    // (iii) cocycle identity: delta([x,y]) = x.delta(y) - y.delta(x)
    for (LieBasis x : basis3()) {
        for (LieBasis y : basis3()) {
            LieTensor lhs(2);
            const LieTensor bracket = lie_bracket(x, y);
            for (const auto& [k, c] : bracket.terms())
                lhs += cobracket(LieTensor::basis(k[0]), r).scaled(c);
            LieTensor rhs = ad2(x, cobracket(LieTensor::basis(y), r)) -
                            ad2(y, cobracket(LieTensor::basis(x), r));
            CheckResult c;
            c.name = "cocycle";
            c.inputs = "x=" + lie_basis_name(x) + " y=" + lie_basis_name(y);
            c.pass = (lhs == rhs);
            rep.add(std::move(c));
        }
    }
    // (iv) ad-invariance of the symmetric part r + sigma(r)
    LieTensor sym = r + r.flip(1, 2);
    for (LieBasis x : basis3()) {
        CheckResult c;
        c.name = "symmetric-part-invariance";
        c.inputs = "x=" + lie_basis_name(x);
        c.pass = ad2(x, sym).is_zero();
        rep.add(std::move(c));
    }
    // (v) CYBE, so a defective r is pinned to the axiom it breaks
    {
        CheckResult c;
        c.name = "cybe";
        c.inputs = "r";
        c.pass = cybe_residual(r).is_zero();
        rep.add(std::move(c));
    }
    return rep;
}

AlgebraElement poisson_bracket(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement comm = a * b - b * a;
    if (comm.valuation() < 1)
        throw std::invalid_argument(
            "poisson_bracket: inputs do not commute mod h (not in H')");
    return comm.shift_down(1).specialize_h0();
}

} // namespace hopfbraid

#include "hopfbraid/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hopfbraid {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Rational parse_rational(const std::string& text) {
    try {
        Rational r(text, 10);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

} // namespace

Series parse_series(const std::string& text, int order) {
    Series out(order);
    std::string s = trim(text);
    if (s.empty())
        throw std::invalid_argument("empty series text");
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = trim(s.substr(pos, next == std::string::npos ? next : next - pos));
        pos = (next == std::string::npos) ? s.size() : next + 1;
        if (term.empty())
            throw std::invalid_argument("empty term in series '" + text + "'");
        int power = 0;
        std::string coef = term;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            coef = trim(term.substr(0, star));
            std::string hpart = trim(term.substr(star + 1));
            if (hpart == "h") {
                power = 1;
            } else if (hpart.rfind("h^", 0) == 0) {
                power = std::stoi(hpart.substr(2));
            } else {
                throw std::invalid_argument("bad series term '" + term + "'");
            }
        }
        if (power < 0 || power >= order)
            throw std::invalid_argument("series term exceeds truncation order: '" + term + "'");
        out += Series::h_power(power, order) * parse_rational(coef);
    }
    return out;
}

Monomial parse_monomial(const std::string& text) {
    std::istringstream is(trim(text));
    std::string tf, th, te;
    if (!(is >> tf >> th >> te))
        throw std::invalid_argument("cannot parse monomial '" + text + "'");
    std::string rest;
    if (is >> rest)
        throw std::invalid_argument("trailing tokens in monomial '" + text + "'");
    auto read = [](const std::string& tok, char gen) -> unsigned {
        if (tok.size() < 3 || tok[0] != gen || tok[1] != '^')
            throw std::invalid_argument(std::string("expected '") + gen + "^<n>', got '" + tok +
                                        "'");
        return static_cast<unsigned>(std::stoul(tok.substr(2)));
    };
    return Monomial{read(tf, 'F'), read(th, 'H'), read(te, 'E')};
}

void parse_tensor_line(const std::string& line, TensorElement& into) {
    const auto colon = line.rfind(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("term line needs ': <series>': '" + line + "'");
    const std::string mono_part = line.substr(0, colon);
    const std::string series_part = line.substr(colon + 1);
    TensorElement::Key key;
    size_t pos = 0;
    while (true) {
        const size_t bar = mono_part.find('|', pos);
        key.push_back(parse_monomial(
            mono_part.substr(pos, bar == std::string::npos ? bar : bar - pos)));
        if (bar == std::string::npos)
            break;
        pos = bar + 1;
    }
    if (static_cast<int>(key.size()) != into.rank())
        throw std::invalid_argument("term has wrong rank: '" + line + "'");
    into.insert_term(std::move(key), parse_series(series_part, into.order()));
}

std::vector<TensorElement> SampleSet::tensors_of_rank(int rank) const {
    std::vector<TensorElement> out;
    for (const auto& [name, t] : tensors)
        if (t.rank() == rank)
            out.push_back(t);
    return out;
}

SampleSet parse_samples(std::istream& in, const HopfAlgebra& alg) {
    SampleSet out;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("sample file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::istringstream head(t);
        std::string kind, name;
        head >> kind >> name;
        int rank = 1;
        if (kind == "tensor") {
            std::string rk;
            head >> rk >> rank;
            if (rk != "rank" || rank < 1)
                fail("expected 'tensor <name> rank <k>'");
        } else if (kind != "element") {
            fail("expected 'element <name>' or 'tensor <name> rank <k>'");
        }
        if (name.empty())
            fail("missing sample name");
        TensorElement acc(alg, rank);
        bool closed = false;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string body = trim(line);
            if (body.empty() || body[0] == '#')
                continue;
            if (body == "end") {
                closed = true;
                break;
            }
            try {
                parse_tensor_line(body, acc);
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        if (!closed)
            fail("unterminated block (missing 'end')");
        if (kind == "element") {
            AlgebraElement el(alg);
            for (const auto& [k, c] : acc.terms())
                el.insert_term(k[0], c);
            out.elements.emplace_back(name, std::move(el));
        } else {
            out.tensors.emplace_back(name, std::move(acc));
        }
    }
    return out;
}

SampleSet parse_sample_file(const std::string& path, const HopfAlgebra& alg) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read sample file '" + path + "'");
    return parse_samples(in, alg);
}

SampleSet default_samples(const HopfAlgebra& alg) {
    const int n = alg.order();
    const Series h = Series::h_power(1, n);
    const AlgebraElement one = alg.one();
    const AlgebraElement he = alg.e().scaled(h);
    const AlgebraElement hf = alg.f().scaled(h);
    const AlgebraElement hh = alg.h().scaled(h);
    const AlgebraElement hehf = he * hf;
    const AlgebraElement hhhe = hh * he;
    AlgebraElement h2e2(alg);
    h2e2.insert_term(Monomial::E(2), Series::h_power(2, n));

    SampleSet s;
    s.elements.emplace_back("1", one);
    s.elements.emplace_back("hE", he);
    s.elements.emplace_back("hF", hf);
    s.elements.emplace_back("hH", hh);
    s.elements.emplace_back("hE*hF", hehf);
    s.elements.emplace_back("hH*hE", hhhe);
    s.elements.emplace_back("h^2*E^2", h2e2);

    auto pure = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a.as_tensor().tensor_product(b.as_tensor());
    };
    s.tensors.emplace_back("I", TensorElement::unit(alg, 2));
    s.tensors.emplace_back("hE(x)hF", pure(he, hf));
    s.tensors.emplace_back("hF(x)hE", pure(hf, he));
    s.tensors.emplace_back("hH(x)hH", pure(hh, hh));
    s.tensors.emplace_back("hH(x)hE", pure(hh, he));
    s.tensors.emplace_back("hE(x)1", pure(he, one));
    s.tensors.emplace_back("hH(x)1+1(x)hH", pure(hh, one) + pure(one, hh));
    s.tensors.emplace_back("hE*hF(x)hH", pure(hehf, hh));
    return s;
}

} // namespace hopfbraid

#include "hkdfkit/operational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hkdf {

DiffOperator DiffOperator::identity() {
    DiffOperator d;
    d.terms_.emplace(Orders{}, GaussianRational(1));
    return d;
}

DiffOperator DiffOperator::partial(const std::string& var, unsigned order, GaussianRational c) {
    DiffOperator d;
    if (c.is_zero()) return d;
    Orders o;
    if (order > 0) o[var] = order;
    d.terms_.emplace(std::move(o), std::move(c));
    return d;
}

void DiffOperator::add_term(const Orders& o, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(o, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    for (const auto& [ord, c] : o.terms_) add_term(ord, c);
    return *this;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r;
    for (const auto& [oa, ca] : a.terms_) {
        for (const auto& [ob, cb] : b.terms_) {
            DiffOperator::Orders o = oa;
            for (const auto& [v, k] : ob) o[v] += k;
            r.add_term(o, ca * cb);
        }
    }
    return r;
}

DiffOperator DiffOperator::scale(const GaussianRational& c) const {
    DiffOperator r;
    if (c.is_zero()) return r;
    for (const auto& [o, v] : terms_) r.terms_.emplace(o, v * c);
    return r;
}

MultiPoly DiffOperator::apply(const MultiPoly& p) const {
    MultiPoly acc;
    for (const auto& [o, c] : terms_) {
        MultiPoly q = p;
        for (const auto& [v, k] : o) q = q.diff(v, k);
        acc += c * q;
    }
    return acc;
}

MultiPoly exp_diff(const MultiPoly& p, const std::string& v, unsigned k, const MultiPoly& c) {
    if (k < 1) throw std::invalid_argument("exp_diff requires k >= 1");
    MultiPoly acc = p;
    MultiPoly cpow = MultiPoly::constant(GaussianRational(1));
    MultiPoly deriv = p;
    Rational jf = 1;
    unsigned d = p.degree_in(v);
    for (unsigned j = 1; k * j <= d; ++j) {
        cpow = cpow * c;
        deriv = deriv.diff(v, k);
        jf *= j;
        acc += GaussianRational(Rational(1) / jf) * (cpow * deriv);
    }
    return acc;
}

MultiPoly exp_diff(const MultiPoly& p, const std::string& v, unsigned k,
                   const GaussianRational& c) {
    return exp_diff(p, v, k, MultiPoly::constant(c));
}

MultiPoly exp_shift(const MultiPoly& p, const std::string& v, const MultiPoly& a) {
    return p.substitute(v, MultiPoly::variable(v) + a);
}

MultiPoly exp_shift(const MultiPoly& p, const std::string& v, const GaussianRational& a) {
    return exp_shift(p, v, MultiPoly::constant(a));
}

double GaussReduction::scale() const { return std::sqrt(std::numbers::pi / to_double(b)); }

MultiPoly GaussReduction::apply(const MultiPoly& p, const std::string& var) const {
    return exp_diff(p, var, order, GaussianRational(coeff));
}

DiffOperator GaussReduction::materialize(const std::string& var, unsigned maxdeg) const {
    DiffOperator acc = DiffOperator::identity();
    Rational cpow = 1;
    Rational jf = 1;
    for (unsigned j = 1; order * j <= maxdeg; ++j) {
        cpow *= coeff;
        jf *= j;
        acc += DiffOperator::partial(var, order * j, GaussianRational(cpow / jf));
    }
    return acc;
}

GaussReduction gauss_operator_reduce(unsigned k, const Rational& b) {
    if (k < 1) throw std::invalid_argument("gauss_operator_reduce requires k >= 1");
    if (b <= 0) throw std::domain_error("Gaussian weight must be positive");
    return GaussReduction{b, 2 * k, Rational(1) / (4 * b)};
}

Rational UmbralSymbol::value() const { return umbral_number(order, power); }

Rational umbral_number(unsigned m, unsigned r) {
    if (m < 2) throw std::invalid_argument("umbral order must be >= 2");
    if (r % m != 0) return 0;
    return Rational(factorial(r), factorial(r / m));
}

MultiPoly umbral_hermite(unsigned n, unsigned m) {
    if (m < 2) throw std::invalid_argument("umbral order must be >= 2");
    MultiPoly p;
    for (unsigned r = 0; r <= n; r += m) {
        Rational c = Rational(binomial(n, r)) * umbral_number(m, r);
        MultiPoly term = MultiPoly::monomial("x", n - r, GaussianRational(c));
        if (r > 0) term = term * MultiPoly::monomial("y", r / m);
        p += term;
    }
    return p;
}

}  // namespace hkdf

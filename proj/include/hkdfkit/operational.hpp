#pragma once

#include "hkdfkit/multipoly.hpp"

#include <map>
#include <string>

namespace hkdf {

/// Finite formal sum of terms  c * prod_i d^{k_i}/d v_i^{k_i}.
/// Canonical: no zero coefficients, no zero derivative orders.
class DiffOperator {
public:
    using Orders = std::map<std::string, unsigned>;
    using TermMap = std::map<Orders, GaussianRational>;

    DiffOperator() = default;

    static DiffOperator identity();
    static DiffOperator partial(const std::string& var, unsigned order,
                                GaussianRational c = GaussianRational(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DiffOperator& operator+=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    /// Operator composition (all partials commute).
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
    DiffOperator scale(const GaussianRational& c) const;

    MultiPoly apply(const MultiPoly& p) const;

private:
    TermMap terms_;
    void add_term(const Orders& o, const GaussianRational& c);
};

/// e^{c d^k/dv^k} p, materialized as the finite sum
/// sum_{j<=deg(p,v)/k} c^j p^{(kj)} / j!. The coefficient may be a
/// polynomial (e.g. a fresh variable), in which case the result gains it
/// as a variable.
MultiPoly exp_diff(const MultiPoly& p, const std::string& v, unsigned k, const MultiPoly& c);
MultiPoly exp_diff(const MultiPoly& p, const std::string& v, unsigned k,
                   const GaussianRational& c);

/// e^{a d/dv} p = p with v replaced by v + a (Taylor shift, exact).
MultiPoly exp_shift(const MultiPoly& p, const std::string& v, const MultiPoly& a);
MultiPoly exp_shift(const MultiPoly& p, const std::string& v, const GaussianRational& a);

/// The Gaussian reduction rule
///   integral e^{y d^k} e^{-b y^2} dy  =  sqrt(pi/b) e^{(1/(4b)) d^{2k}}.
/// Carries the scale sqrt(pi/b) and the exponential-operator descriptor
/// (order 2k, coefficient 1/(4b)); apply() materializes the operator on a
/// concrete polynomial via exp_diff.
struct GaussReduction {
    Rational b;
    unsigned order;     // 2k
    Rational coeff;     // 1/(4b)

    double scale() const;
    MultiPoly apply(const MultiPoly& p, const std::string& var) const;
    /// Finite truncation of the exponential as an explicit DiffOperator,
    /// sufficient for polynomials of degree <= maxdeg in var.
    DiffOperator materialize(const std::string& var, unsigned maxdeg) const;
};

/// Throws std::domain_error unless b > 0.
GaussReduction gauss_operator_reduce(unsigned k, const Rational& b);

/// Umbral symbol h_m^r acting on the vacuum: r!/(r/m)! when m | r, else 0.
struct UmbralSymbol {
    unsigned order;  // m >= 2
    unsigned power;  // r >= 0
    Rational value() const;
};

Rational umbral_number(unsigned m, unsigned r);

/// Newton-binomial assembly of H_n^(m)(x,y): only m-divisible powers of the
/// umbral symbol survive, so all y exponents are integers.
MultiPoly umbral_hermite(unsigned n, unsigned m);

}  // namespace hkdf

#pragma once

#include "hkdfkit/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hkdf {

/// Exact multivariate polynomial over Gaussian rationals.
///
/// Variables are an ordered registry of names; terms map dense exponent
/// vectors (one slot per registered variable) to coefficients. Zero
/// coefficients are never stored, so equality is a structural check.
/// Instances are immutable after construction and safe to share.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, GaussianRational>;

    MultiPoly() = default;

    static MultiPoly zero() { return {}; }
    static MultiPoly constant(GaussianRational c);
    static MultiPoly variable(const std::string& name);
    /// c * v^k
    static MultiPoly monomial(const std::string& name, unsigned k,
                              GaussianRational c = GaussianRational(1));

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero exponents), 0 if absent.
    GaussianRational constant_term() const;

    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussianRational& c, MultiPoly p) { return p.scale(c); }
    MultiPoly scale(const GaussianRational& c) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// k-th partial derivative; returns 0 if var is not present.
    MultiPoly diff(const std::string& var, unsigned k = 1) const;

    /// Replace var by an arbitrary polynomial (exact composition).
    MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;
    MultiPoly substitute(const std::string& var, const GaussianRational& value) const;

    /// Drop terms whose exponent of var exceeds maxdeg.
    MultiPoly truncate_in(const std::string& var, unsigned maxdeg) const;
    /// Drop terms of total degree exceeding maxdeg.
    MultiPoly truncate_total(unsigned maxdeg) const;
    /// Drop terms whose combined degree in the listed variables exceeds maxdeg.
    MultiPoly truncate_total_in(const std::vector<std::string>& subset, unsigned maxdeg) const;

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient_of(const std::string& var, unsigned k) const;

    /// Floating evaluation; throws std::invalid_argument if a variable
    /// of the polynomial is missing from the assignment.
    Complex eval(const std::map<std::string, Complex>& assignment) const;
    /// Exact evaluation at Gaussian-rational points.
    GaussianRational eval_exact(const std::map<std::string, GaussianRational>& assignment) const;

    std::string to_json() const;
    static MultiPoly from_json(const std::string& text);
    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const Exponents& e, const GaussianRational& c);
    int var_index(const std::string& var) const;
    /// Remap both operands onto the union variable registry.
    static void align(MultiPoly& a, MultiPoly& b);
    MultiPoly remapped(const std::vector<std::string>& new_vars) const;
    void prune();
};

}  // namespace hkdf

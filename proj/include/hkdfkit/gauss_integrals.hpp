#pragma once

#include "hkdfkit/multipoly.hpp"
#include "hkdfkit/quadrature.hpp"

#include <map>
#include <string>
#include <vector>

namespace hkdf {

/// One entry per closed-form Gaussian integral in the catalog.
enum class IntegralId {
    Gauss1dY,          // int H_n(x,y) e^{-by^2} dy
    Complex2d,         // int H_n(x1+d1+i(x2+d2), y) e^{-ax1^2-bx2^2}
    Complex3d,         // same with y integrated against e^{-cy^2}
    TwoComplex4d,      // complex second argument, 4-dimensional weight
    Product1d,         // int H_m(x+d,y) H_n(x+e,w) e^{-ax^2} dx
    ProductComplex2d,  // product of two complex-argument Hermite
    Orthogonality,     // ProductComplex2d at d=0, y1=y2=-1/4, diagonal in (m,n)
    TwoIndex2d,        // int H_{m,n}(x,y;z,w|tau) e^{-ay^2-bw^2} dy dw
    ConjugatePair2d,   // int H_m(x1,y1+iy2) H_n(x2,y1-iy2) e^{-ay1^2-by2^2}
    HkdfXy2d,          // int H_n(x+d,y) e^{-ax^2-by^2} dx dy
    H3_3d,             // int H_n^(3)(x1+d,x2,x3) against a 3-d Gaussian
    Incomplete2d,      // int h_{m,n}(x1+ix2, x1-ix2 | tau) e^{-ax1^2-bx2^2}
};

IntegralId integral_id_from_string(const std::string& s);
std::string to_string(IntegralId id);
const std::vector<IntegralId>& all_integral_ids();

/// Required parameter names per id.
struct IntegralSchema {
    std::vector<std::string> indices;  // degree parameters (m, n)
    std::vector<std::string> scalars;  // shifts / spectators / couplings
    std::vector<std::string> weights;  // Gaussian weights, Re > 0
    int dimension = 1;
};
const IntegralSchema& integral_schema(IntegralId id);

/// Named exact parameters. Degrees are integers; everything else is a
/// Gaussian rational (weights must have positive real part).
struct ParamSet {
    std::map<std::string, unsigned> indices;
    std::map<std::string, GaussianRational> scalars;

    unsigned index(const std::string& name) const;
    const GaussianRational& scalar(const std::string& name) const;
};

/// Throws std::invalid_argument on schema mismatch or a weight with
/// non-positive real part.
void check_params(IntegralId id, const ParamSet& params);

/// The closed-form right-hand side split into its exact and floating parts:
/// value = prefactor * family(args), with family evaluated exactly.
struct ClosedForm {
    Complex prefactor{};
    MultiPoly family;
    std::map<std::string, GaussianRational> args;
    GaussianRational exact_value;
    Complex value{};
};

ClosedForm closed_form_detail(IntegralId id, const ParamSet& params);
Complex closed_form(IntegralId id, const ParamSet& params);

/// The left-hand-side integrand, fully substituted: a polynomial in the
/// integration variables with Gaussian weights per dimension.
struct Integrand {
    std::vector<std::string> vars;
    std::vector<Rational> weights;  // real positive (oracle restriction)
    MultiPoly poly;
};
Integrand build_integrand(IntegralId id, const ParamSet& params);

QuadratureConfig default_quadrature_config(IntegralId id);

/// Tensor-grid composite Gauss-Legendre oracle with refinement.
Refined quadrature(IntegralId id, const ParamSet& params, const QuadratureConfig& cfg);

/// Default per-dimension comparison tolerance (1e-8 / 1e-6 / 1e-4).
double default_rel_tol(IntegralId id);

IntegralResult verify(IntegralId id, const ParamSet& params, const QuadratureConfig& cfg,
                      double rel_tol);

}  // namespace hkdf

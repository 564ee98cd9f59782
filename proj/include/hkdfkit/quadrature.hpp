#pragma once

#include "hkdfkit/rational.hpp"

#include <functional>
#include <vector>

namespace hkdf {

/// Truncation half-width (in 1/sqrt(weight) units), grid resolution and
/// refinement policy for the numerical oracle.
struct QuadratureConfig {
    double half_width_sigmas = 10.0;
    int points_per_dim = 257;   // odd, >= 3; refined x2 until converged
    double tol = 1e-10;
    int max_refinements = 6;
};

struct IntegralResult {
    Complex closed_form_value{};
    Complex oracle_value{};
    double oracle_error_estimate = 0.0;
    double relative_discrepancy = 0.0;
    bool converged = false;
    bool pass = false;
};

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1,1],
/// computed by Newton iteration on the Legendre recurrence.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendreRule(int n);
};

/// Composite Gauss-Legendre (16-point panels) of f over [-L, L].
Complex integrate_panels(const std::function<Complex(double)>& f, double L, int panels);

/// Moments S[e] = integral of x^e exp(-b x^2) over [-L, L], e = 0..max_exp,
/// by composite Gauss-Legendre with `panels` subintervals.
std::vector<double> gaussian_moments(double b, double L, int panels, int max_exp);

/// Refines `panels` by doubling until two successive values agree to
/// cfg.tol (relative to max(1,|I|)) or cfg.max_refinements is exhausted.
struct Refined {
    Complex value{};
    double error_estimate = 0.0;
    bool converged = false;
};
Refined refine_integral(const std::function<Complex(int /*panels*/)>& eval,
                        const QuadratureConfig& cfg);

}  // namespace hkdf

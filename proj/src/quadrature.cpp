#include "hkdfkit/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hkdf {

GaussLegendreRule::GaussLegendreRule(int n) {
    if (n < 2) throw std::invalid_argument("Gauss-Legendre rule needs n >= 2");
    nodes.resize(n);
    weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

namespace {
const GaussLegendreRule& rule16() {
    static const GaussLegendreRule r(16);
    return r;
}
}  // namespace

Complex integrate_panels(const std::function<Complex(double)>& f, double L, int panels) {
    const auto& gl = rule16();
    const double h = 2.0 * L / panels;
    Complex acc(0.0, 0.0);
    for (int p = 0; p < panels; ++p) {
        double a = -L + p * h;
        double mid = a + 0.5 * h;
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            acc += gl.weights[k] * f(mid + 0.5 * h * gl.nodes[k]);
        }
    }
    return acc * (0.5 * h);
}

std::vector<double> gaussian_moments(double b, double L, int panels, int max_exp) {
    const auto& gl = rule16();
    const double h = 2.0 * L / panels;
    std::vector<double> S(max_exp + 1, 0.0);
    for (int p = 0; p < panels; ++p) {
        double a = -L + p * h;
        double mid = a + 0.5 * h;
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            double x = mid + 0.5 * h * gl.nodes[k];
            double w = gl.weights[k] * std::exp(-b * x * x);
            double xe = 1.0;
            for (int e = 0; e <= max_exp; ++e) {
                S[e] += w * xe;
                xe *= x;
            }
        }
    }
    for (auto& s : S) s *= 0.5 * h;
    return S;
}

Refined refine_integral(const std::function<Complex(int)>& eval, const QuadratureConfig& cfg) {
    Refined r;
    int panels = std::max(1, cfg.points_per_dim / 16);
    Complex prev = eval(panels);
    for (int k = 1; k <= cfg.max_refinements; ++k) {
        panels *= 2;
        Complex cur = eval(panels);
        double delta = std::abs(cur - prev);
        if (delta <= cfg.tol * std::max(1.0, std::abs(cur))) {
            r.value = cur;
            r.error_estimate = delta;
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    r.value = prev;
    r.error_estimate = std::abs(prev);  // no convergence evidence
    r.converged = false;
    return r;
}

}  // namespace hkdf

#include "hkdfkit/bessel.hpp"

#include "hkdfkit/gauss_integrals.hpp"
#include "hkdfkit/hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hkdf {

namespace {

double fact_d(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

// Core series for J/I of non-negative order.
SeriesValue bessel_series(unsigned n, double x, unsigned K, bool alternating) {
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = std::pow(h, static_cast<double>(n)) / fact_d(n);
    double acc = term;
    for (unsigned r = 1; r <= K; ++r) {
        term *= h2 / (static_cast<double>(r) * (n + r));
        acc += alternating && (r % 2 == 1) ? -term : term;
    }
    double next = term * h2 / (static_cast<double>(K + 1) * (n + K + 1));
    double rho = h2 / (static_cast<double>(K + 2) * (n + K + 2));
    if (rho >= 1.0) throw std::domain_error("bessel series: no tail bound at this K");
    return {acc, std::abs(next) / (1.0 - rho)};
}

}  // namespace

SeriesValue bessel_j(int n, double x, SeriesTruncation trunc) {
    unsigned a = static_cast<unsigned>(n < 0 ? -n : n);
    SeriesValue v = bessel_series(a, x, trunc.K, true);
    if (n < 0 && a % 2 == 1) v.value = -v.value;
    return v;
}

SeriesValue bessel_i(int n, double x, SeriesTruncation trunc) {
    unsigned a = static_cast<unsigned>(n < 0 ? -n : n);
    return bessel_series(a, x, trunc.K, false);
}

SeriesValue bessel_2var(int n, double x, double y, SeriesTruncation trunc) {
    double acc = 0.0;
    double inner_tail = 0.0;
    const unsigned Ki = trunc.K + 10;
    for (int l = -static_cast<int>(trunc.K); l <= static_cast<int>(trunc.K); ++l) {
        SeriesValue a = bessel_j(n - 2 * l, x, {Ki});
        SeriesValue b = bessel_j(l, y, {Ki});
        acc += a.value * b.value;
        inner_tail += a.tail_bound * std::abs(b.value) + std::abs(a.value) * b.tail_bound;
    }
    // |J_l(y)| <= (|y|/2)^|l| / |l|!  and |J_k(x)| <= 1 for the dropped l.
    double hy = 0.5 * std::abs(y);
    double outer = 2.0 * std::pow(hy, trunc.K + 1.0) / fact_d(trunc.K + 1) * std::exp(hy);
    return {acc, outer + inner_tail};
}

SeriesValue ji4(int n, double x, double y, SeriesTruncation trunc) {
    double acc = 0.0;
    double inner_tail = 0.0;
    const unsigned Ki = trunc.K + 10;
    for (int l = -static_cast<int>(trunc.K); l <= static_cast<int>(trunc.K); ++l) {
        SeriesValue a = bessel_j(n - 4 * l, x, {Ki});
        SeriesValue b = bessel_i(l, y, {Ki});
        acc += a.value * b.value;
        inner_tail += a.tail_bound * std::abs(b.value) + std::abs(a.value) * b.tail_bound;
    }
    double hy = 0.5 * std::abs(y);
    double outer = 2.0 * std::pow(hy, trunc.K + 1.0) / fact_d(trunc.K + 1) * std::exp(2.0 * hy);
    return {acc, outer + inner_tail};
}

std::vector<double> hermite_values(unsigned nmax, double x, double y) {
    std::vector<double> h(nmax + 1);
    h[0] = 1.0;
    if (nmax >= 1) h[1] = x;
    for (unsigned k = 1; k < nmax; ++k) {
        h[k + 1] = x * h[k] + 2.0 * k * y * h[k - 1];
    }
    return h;
}

SeriesValue hermite_bessel(unsigned n, double x, double y, SeriesTruncation trunc) {
    const unsigned K = trunc.K;
    std::vector<double> h = hermite_values(n + 2 * K + 2, x, y);
    double denom = std::pow(2.0, static_cast<double>(n)) * fact_d(n);  // 2^{n+2r} r! (n+r)!
    double acc = 0.0;
    double last = 0.0;
    for (unsigned r = 0; r <= K; ++r) {
        double term = h[n + 2 * r] / denom;
        acc += (r % 2 == 1) ? -term : term;
        last = term;
        denom *= 4.0 * (r + 1.0) * (n + r + 1.0);
    }
    double next = std::abs(h[n + 2 * K + 2]) / denom;
    // Factorial decay: once terms shrink, the tail is dominated by a
    // halving geometric series.
    double tail = 2.0 * next;
    if (next > std::abs(last) && last != 0.0) tail = 2.0 * next * (next / std::abs(last));
    return {acc, tail};
}

Complex fourier_gen_2var(int n, double x, double y, int nodes) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < nodes; ++k) {
        double th = 2.0 * std::numbers::pi * k / nodes;
        double phase = x * std::sin(th) + y * std::sin(2.0 * th) - n * th;
        acc += Complex(std::cos(phase), std::sin(phase));
    }
    return acc / static_cast<double>(nodes);
}

Complex fourier_gen_ji4(int n, double x, double y, int nodes) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < nodes; ++k) {
        double th = 2.0 * std::numbers::pi * k / nodes;
        // (x/2)(t - 1/t) = i x sin(th); (y/2)(t^4 + t^-4) = y cos(4 th)
        double mag = std::exp(y * std::cos(4.0 * th));
        double phase = x * std::sin(th) - n * th;
        acc += mag * Complex(std::cos(phase), std::sin(phase));
    }
    return acc / static_cast<double>(nodes);
}

IntegralResult bessel_gauss_integral(int n, double x, double a, SeriesTruncation trunc,
                                     QuadratureConfig cfg, double rel_tol) {
    if (a <= 0) throw std::domain_error("Gaussian weight must be positive");
    IntegralResult r;
    SeriesValue cf = ji4(n, x, 1.0 / (8.0 * a), trunc);
    r.closed_form_value = std::sqrt(std::numbers::pi / a) * std::exp(-1.0 / (8.0 * a)) * cf.value;

    const double L = cfg.half_width_sigmas / std::sqrt(a);
    SeriesTruncation ti{trunc.K + 10};
    auto eval = [&](int panels) {
        return integrate_panels(
            [&](double y) {
                return Complex(std::exp(-a * y * y) * bessel_2var(n, x, y, ti).value, 0.0);
            },
            L, panels);
    };
    QuadratureConfig c1 = cfg;
    c1.points_per_dim = std::max(65, cfg.points_per_dim / 4);
    Refined q = refine_integral(eval, c1);
    r.oracle_value = q.value;
    r.oracle_error_estimate = q.error_estimate + cf.tail_bound;
    r.converged = q.converged;
    r.relative_discrepancy = std::abs(r.closed_form_value - r.oracle_value) /
                             std::max(std::abs(r.closed_form_value), 1e-300);
    r.pass = r.converged && r.relative_discrepancy <= rel_tol;
    return r;
}

IntegralResult jgh_integral(unsigned n, unsigned m, double x, double z, double a,
                            SeriesTruncation trunc, QuadratureConfig cfg, double rel_tol) {
    if (a <= 0) throw std::domain_error("Gaussian weight must be positive");
    IntegralResult r;

    // Closed form: sqrt(pi/a) sum_s (-1)^s / (2^{m+2s} s! (m+s)!)
    //              H^{(4,4,2)}_{n,m+2s}(x, 1/(4a); z, 1/(4a) | 1/(2a)).
    GaussianRational qa(rational_from_double(1.0 / (4.0 * a)));
    GaussianRational ta(rational_from_double(1.0 / (2.0 * a)));
    std::map<std::string, GaussianRational> args = {
        {"x1", GaussianRational(rational_from_double(x))},
        {"x2", qa},
        {"x3", GaussianRational(rational_from_double(z))},
        {"x4", qa},
        {"tau", ta}};
    double denom = std::pow(2.0, static_cast<double>(m)) * fact_d(m);
    double closed = 0.0;
    for (unsigned s = 0; s <= trunc.K; ++s) {
        double hv = to_double(composite(n, m + 2 * s, 4, 4, 2).eval_exact(args).re);
        closed += ((s % 2 == 1) ? -1.0 : 1.0) * hv / denom;
        denom *= 4.0 * (s + 1.0) * (m + s + 1.0);
    }
    r.closed_form_value = std::sqrt(std::numbers::pi / a) * closed;

    const double L = cfg.half_width_sigmas / std::sqrt(a);
    SeriesTruncation ti{trunc.K + 10};
    auto eval = [&](int panels) {
        return integrate_panels(
            [&](double y) {
                double hn = hermite_values(n, x, y)[n];
                return Complex(std::exp(-a * y * y) * hn * hermite_bessel(m, z, y, ti).value, 0.0);
            },
            L, panels);
    };
    QuadratureConfig c1 = cfg;
    c1.points_per_dim = std::max(65, cfg.points_per_dim / 4);
    Refined q = refine_integral(eval, c1);
    r.oracle_value = q.value;
    r.oracle_error_estimate = q.error_estimate;
    r.converged = q.converged;
    double scale = std::max(std::abs(r.closed_form_value), 1e-300);
    r.relative_discrepancy = std::abs(r.closed_form_value - r.oracle_value) / scale;
    r.pass = r.converged && r.relative_discrepancy <= rel_tol;
    return r;
}

}  // namespace hkdf

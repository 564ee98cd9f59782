#pragma once

#include "hkdfkit/quadrature.hpp"

#include <vector>

namespace hkdf {

/// Summation bound for the truncated series. tail_bound on results is a
/// computed upper estimate of the dropped remainder.
struct SeriesTruncation {
    unsigned K = 40;
};

struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// Cylindrical Bessel J_n by direct series; J_{-n} = (-1)^n J_n.
/// Throws std::domain_error when no geometric tail bound exists at K.
SeriesValue bessel_j(int n, double x, SeriesTruncation trunc = {});

/// Modified Bessel I_n; I_{-n} = I_n.
SeriesValue bessel_i(int n, double x, SeriesTruncation trunc = {});

/// Two-variable Bessel J_n(x,y) = sum_l J_{n-2l}(x) J_l(y).
SeriesValue bessel_2var(int n, double x, double y, SeriesTruncation trunc = {});

/// JI_n^(4)(x,y) = sum_l J_{n-4l}(x) I_l(y).
SeriesValue ji4(int n, double x, double y, SeriesTruncation trunc = {});

/// Hermite-Bessel _HJ_n(x,y) = sum_r (-1)^r H_{n+2r}(x,y) / (2^{n+2r} r! (n+r)!).
SeriesValue hermite_bessel(unsigned n, double x, double y, SeriesTruncation trunc = {25});

/// H_0..H_nmax at (x,y) via the three-term recurrence
/// H_{k+1} = x H_k + 2ky H_{k-1}.
std::vector<double> hermite_values(unsigned nmax, double x, double y);

/// Unit-circle trapezoid sampling of the generating functions, independent
/// of the series definitions above.
Complex fourier_gen_2var(int n, double x, double y, int nodes = 512);
Complex fourier_gen_ji4(int n, double x, double y, int nodes = 512);

/// int e^{-ay^2} J_n(x,y) dy  vs  sqrt(pi/a) e^{-1/(8a)} JI_n^(4)(x, 1/(8a)).
IntegralResult bessel_gauss_integral(int n, double x, double a, SeriesTruncation trunc = {},
                                     QuadratureConfig cfg = {}, double rel_tol = 1e-6);

/// int e^{-ay^2} H_n(x,y) _HJ_m(z,y) dy  vs the H^{(4,4,2)} series form.
IntegralResult jgh_integral(unsigned n, unsigned m, double x, double z, double a,
                            SeriesTruncation trunc = {25}, QuadratureConfig cfg = {},
                            double rel_tol = 1e-5);

}  // namespace hkdf

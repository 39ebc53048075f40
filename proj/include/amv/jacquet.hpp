#pragma once

#include <complex>

#include "amv/geometry.hpp"
#include "amv/quadrature.hpp"

namespace amv {

// Whittaker-type functional of the principal-series basis vector
// phi_p(g; nu) = y^(nu + 1/2) exp(2 i p theta):
//
//   A^delta phi_p(g) = integral exp(-2 pi i delta x) phi_p(w n[x] g) dx
//
// with w the Weyl element and delta = +-1.  The real-axis integrand is
// assembled from iwasawa coordinates of w n[x] g; the line of integration
// is shifted toward the nearer branch point of its analytic continuation
// and closed by vertical legs, which turns the conditionally convergent
// oscillatory integral into an absolutely convergent one.
std::complex<double> jacquet_integral(int p, std::complex<double> nu, int delta,
                                      const GroupPoint& g, const QuadratureSpec& spec = {});

// Convenience overload at g = a[u], u > 0.
std::complex<double> jacquet_integral(int p, std::complex<double> nu, int delta, double u,
                                      const QuadratureSpec& spec = {});

// Closed form at p = 0:  A^+ phi_0(a[u]; nu) = c_nu sqrt(u) K_nu(2 pi u),
// c_nu = 2 pi^(nu+1/2) / Gamma(nu+1/2).
std::complex<double> jacquet_k0_closed(std::complex<double> nu, double u);

// Exposed for tests: the analytic continuation of the integrand factor
// phi_p(w n[z] g; nu) to complex z (matches the iwasawa assembly on the
// real axis).
std::complex<double> jacquet_phi_factor(int p, std::complex<double> nu,
                                        const UnimodularMatrix& g, std::complex<double> z);

}  // namespace amv

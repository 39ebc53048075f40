#pragma once

#include <complex>

namespace amv {

// Modified Bessel K_nu(x) for x > 0 and nu on the two rays used here:
// real, or purely imaginary with |nu| <= 50.  Evaluated from
//     K_nu(x) = integral_0^inf exp(-x cosh t) cosh(nu t) dt
// by the trapezoid rule (the integrand decays double-exponentially).
// For nu = i r the result is real up to rounding.  Throws
// std::underflow_error once exp(-x) is below the double exponent budget.
std::complex<double> bessel_k(std::complex<double> order, double x);

}  // namespace amv

#pragma once

#include <complex>

namespace amv {

// Riemann zeta by Euler-Maclaurin, for Re s > 0, s != 1.  Relative error
// <= 1e-10 for Re s >= 0.5, |Im s| <= 50.  Throws on the pole and on
// Re s <= 0 (continuation to the left half-plane is out of scope).
std::complex<double> riemann_zeta(std::complex<double> s);

}  // namespace amv

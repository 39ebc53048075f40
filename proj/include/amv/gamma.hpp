#pragma once

#include <complex>

namespace amv {

// log Gamma, Lanczos rational approximation (g = 607/128 family tuned for
// doubles) with reflection for Re z < 1/2.  The branch of the log is not
// normalized across the reflection; use exp / differences only.
std::complex<double> log_gamma(std::complex<double> z);

// Gamma(z).  Throws std::domain_error within 1e-12 of a non-positive integer.
std::complex<double> gamma_complex(std::complex<double> z);

// 1/Gamma(z), entire; returns 0 at the poles of Gamma.
std::complex<double> gamma_reciprocal(std::complex<double> z);

// Accuracy box: |Im z| <= 50 is the supported region for the 1e-12 target.
bool gamma_degraded(std::complex<double> z);

}  // namespace amv

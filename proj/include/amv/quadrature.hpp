#pragma once

#include <complex>
#include <functional>
#include <limits>

namespace amv {

enum class QuadScheme { gauss_kronrod, double_exponential };

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdiv = 4000;
    QuadScheme scheme = QuadScheme::gauss_kronrod;
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;        // estimated absolute error
    bool converged = false;
    long evaluations = 0;
};

inline constexpr double quad_inf = std::numeric_limits<double>::infinity();

// Integrate f over [a,b].  Either endpoint may be infinite (quad_inf /
// -quad_inf).  Gauss-Kronrod 7-15 with adaptive bisection, or tanh-sinh /
// exp-sinh when spec.scheme is double_exponential.  Non-convergence is not
// an exception: the flag is cleared and the best value returned.
QuadResult integrate(const std::function<std::complex<double>(double)>& f,
                     double a, double b, const QuadratureSpec& spec = {});

}  // namespace amv

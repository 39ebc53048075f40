#include "amv/weight.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amv {

double weight_g(const WeightFunction& w, double t) {
    const double u = t / w.T;
    return std::exp(-u * u);
}

std::complex<double> weight_g(const WeightFunction& w, std::complex<double> t) {
    const std::complex<double> u = t / w.T;
    return std::exp(-u * u);
}

double ghat(const WeightFunction& w, double xi) {
    const double u = 0.5 * w.T * xi;
    return w.T * std::sqrt(std::numbers::pi) * std::exp(-u * u);
}

double bump_value(const BumpSpec& b, double theta) {
    if (!(b.delta > 0.0)) throw std::domain_error("bump: delta must be positive");
    const double t = theta / b.delta;
    if (std::abs(t) >= 1.0) return 0.0;
    const double s = 1.0 - t * t;
    const double s2 = s * s;
    // int_{-1}^{1} (1-t^2)^4 dt = 256/315
    return (315.0 / 256.0) * s2 * s2 / b.delta;
}

}  // namespace amv

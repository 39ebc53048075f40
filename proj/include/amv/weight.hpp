#pragma once

#include <complex>

namespace amv {

enum class WeightKind { gaussian };

// The moment weight g(t) = exp(-(t/T)^2): even, entire, real on R,
// fast-decaying in every horizontal strip.
struct WeightFunction {
    WeightKind kind = WeightKind::gaussian;
    double T = 2.0;
};

double weight_g(const WeightFunction& w, double t);
std::complex<double> weight_g(const WeightFunction& w, std::complex<double> t);

// ghat(xi) = integral g(t) exp(-i t xi) dt = T sqrt(pi) exp(-(T xi / 2)^2).
double ghat(const WeightFunction& w, double xi);

// Smooth bump on (-delta, delta): (1 - (t/d)^2)^4 / d, normalized so the
// integral over theta is exactly 1.
struct BumpSpec {
    double delta = 0.2;
};

double bump_value(const BumpSpec& b, double theta);

}  // namespace amv

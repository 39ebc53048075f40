#include "amv/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace amv {

namespace {

using cd = std::complex<double>;

// Neumaier-compensated accumulation; the integrand cancels heavily for
// imaginary order and the compensation keeps the absolute error near
// eps * max-term instead of eps * sum-of-magnitudes.
struct Kahan {
    cd sum{0.0}, comp{0.0};
    void add(cd v) {
        const cd t = sum + v;
        // componentwise Neumaier
        double cr = (std::abs(sum.real()) >= std::abs(v.real()))
                        ? (sum.real() - t.real()) + v.real()
                        : (v.real() - t.real()) + sum.real();
        double ci = (std::abs(sum.imag()) >= std::abs(v.imag()))
                        ? (sum.imag() - t.imag()) + v.imag()
                        : (v.imag() - t.imag()) + sum.imag();
        comp += cd(cr, ci);
        sum = t;
    }
    cd get() const { return sum + comp; }
};

}  // namespace

std::complex<double> bessel_k(std::complex<double> order, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be positive");
    if (std::abs(order) > 50.0 + 1e-12)
        throw std::domain_error("bessel_k: |order| <= 50 supported");
    if (std::abs(order.real()) > 1e-14 && std::abs(order.imag()) > 1e-14)
        throw std::domain_error("bessel_k: order must be real or purely imaginary");
    if (x > 680.0)
        throw std::underflow_error("bessel_k: result underflows the double exponent budget");

    const double nr = std::abs(order.real());
    // cutoff: x cosh t - nr t  >=  x + 48  (integrand below 1e-20 * exp(-x))
    double tmax = std::acosh(1.0 + 48.0 / x);
    for (int it = 0; it < 3 && nr > 0.0; ++it)
        tmax = std::acosh(1.0 + (48.0 + nr * tmax) / x);

    const double h = 1.0 / 64.0;
    const bool real_order = std::abs(order.imag()) <= 1e-14;
    const double r = real_order ? order.real() : order.imag();
    // real order: cosh(nu t) can overflow on its own, so fold it into the
    // exponent; imaginary order: cosh(i r t) = cos(r t), no hazard.
    auto term = [&](double t) -> cd {
        const double e = -x * std::cosh(t);
        if (real_order)
            return 0.5 * (std::exp(e + r * t) + std::exp(e - r * t));
        return std::exp(e) * std::cos(r * t);
    };
    Kahan acc;
    acc.add(0.5 * term(0.0));  // endpoint weight 1/2
    const long steps = long(tmax / h) + 1;
    for (long k = 1; k <= steps; ++k) {
        const double t = h * double(k);
        if (-x * std::cosh(t) + std::abs(r) * t < -745.0) break;
        acc.add(term(t));
    }
    return acc.get() * h;
}

}  // namespace amv

#include "amv/jacquet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "amv/bessel.hpp"
#include "amv/gamma.hpp"

namespace amv {

namespace {

using cd = std::complex<double>;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr cd I{0.0, 1.0};

cd powi(cd z, int p) {
    if (p == 0) return cd(1.0);
    unsigned long n = p > 0 ? (unsigned long)p : (unsigned long)(-(long)p);
    cd base = p > 0 ? z : 1.0 / z;
    cd r = 1.0;
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

struct Integrand {
    int p;
    cd nu;
    int delta;
    UnimodularMatrix m;   // from_coords(g)

    // continuation of exp(-2 pi i delta z) phi_p(w n[z] g; nu)
    cd at(cd z) const {
        const cd c2 = -(m.a + z * m.c);
        const cd d2 = -(m.b + z * m.d);
        const cd q = c2 * c2 + d2 * d2;
        cd val = std::exp(-(nu + 0.5) * std::log(q));
        if (p != 0) val *= powi((d2 - I * c2) / (d2 + I * c2), p);
        return std::exp(-two_pi * double(delta) * I * z) * val;
    }

    // real-axis assembly through the group machinery
    cd at_real(double x) const {
        UnimodularMatrix t;   // w n[x] = [[0,1],[-1,-x]]
        t.a = 0.0; t.b = 1.0; t.c = -1.0; t.d = -x;
        const GroupPoint pt = iwasawa(t * m);
        const cd phi = std::exp((nu + 0.5) * std::log(pt.y)) *
                       std::exp(cd(0.0, 2.0 * double(p) * pt.theta));
        return std::exp(-two_pi * double(delta) * I * x) * phi;
    }
};

}  // namespace

std::complex<double> jacquet_phi_factor(int p, std::complex<double> nu,
                                        const UnimodularMatrix& g, std::complex<double> z) {
    Integrand f{p, nu, +1, g};
    // strip the exponential so tests compare the phi factor alone
    return f.at(z) * std::exp(two_pi * I * z);
}

std::complex<double> jacquet_integral(int p, std::complex<double> nu, int delta,
                                      const GroupPoint& g, const QuadratureSpec& spec) {
    if (delta != 1 && delta != -1) throw std::domain_error("jacquet: delta must be +-1");
    if (!(g.y > 0.0)) throw std::domain_error("jacquet: y must be positive");

    Integrand f{p, nu, delta, from_coords(g)};
    const double xg = g.x, yg = g.y;
    const double sigma = delta == 1 ? -1.0 : 1.0;   // shift direction for decay
    const double r_eff = std::abs(nu.imag());

    // Proximity of the shifted line to the branch point at -x_g + i sigma y_g.
    // Toward the ratio-factor pole the shift depth is balanced against the
    // (|p|-fold) pole amplification; large imaginary order forbids shifting
    // because |q^-nu| grows like exp(|Im nu| |arg q|) off the axis.
    double Y = 0.0;
    const int pole_side = p > 0 ? -1 : (p < 0 ? +1 : 0);
    if (r_eff <= 2.0) {
        if (pole_side != 0 && double(pole_side) == sigma) {
            const double frac = double(std::abs(p)) / (std::numbers::pi * yg);
            Y = frac < 1.0 ? 0.9 * yg * std::sqrt(1.0 - frac) : 0.0;
        } else {
            Y = yg - std::max(0.05, 0.1 * yg);
            if (Y < 0.0) Y = 0.0;
        }
    }

    // widen the box with the order so the phase of q^(-nu) on the vertical
    // legs turns over before the exp(-2 pi s) decay has to fight it
    const double X0 = std::abs(xg) + 1.0 + 2.0 * yg + r_eff / std::numbers::pi;
    QuadratureSpec piece = spec;
    piece.rel_tol = 0.25 * spec.rel_tol;

    QuadResult total;
    total.converged = true;
    auto accumulate = [&](const QuadResult& r) {
        total.value += r.value;
        total.error += r.error;
        total.converged = total.converged && r.converged;
        total.evaluations += r.evaluations;
    };

    // horizontal leg at Im z = sigma Y, split around the spike at x = -x_g
    auto horiz = [&](double x) -> cd {
        if (Y == 0.0) return f.at_real(x);
        return f.at(cd(x, sigma * Y));
    };
    const double w = std::max(1e-3, yg - Y);
    double cuts[4] = {-X0, -xg - 6.0 * w, -xg + 6.0 * w, X0};
    if (cuts[1] < -X0) cuts[1] = -X0;
    if (cuts[2] > X0) cuts[2] = X0;
    for (int i = 0; i < 3; ++i)
        if (cuts[i + 1] > cuts[i]) accumulate(integrate(horiz, cuts[i], cuts[i + 1], piece));

    // vertical legs from depth Y to infinity; integrand decays like exp(-2 pi s)
    const double s_max = Y + 10.0;
    accumulate(integrate([&](double s) { return -I * sigma * f.at(cd(-X0, sigma * s)); },
                         Y, s_max, piece));
    accumulate(integrate([&](double s) { return I * sigma * f.at(cd(X0, sigma * s)); },
                         Y, s_max, piece));

    if (!total.converged) {
        // accept residual error that is negligible against the a-priori
        // uniform bound C (|p|+|nu|+1) y^(-1/2); it only arises when the
        // value itself is far below it
        const double bound = 4.0 * (std::abs(p) + std::abs(nu) + 1.0) / std::sqrt(yg);
        if (total.error > 1e-11 * bound)
            throw std::runtime_error("jacquet_integral: quadrature did not converge");
    }
    return total.value;
}

std::complex<double> jacquet_integral(int p, std::complex<double> nu, int delta, double u,
                                      const QuadratureSpec& spec) {
    if (!(u > 0.0)) throw std::domain_error("jacquet: u must be positive");
    GroupPoint g;
    g.x = 0.0; g.y = u; g.theta = 0.0;
    return jacquet_integral(p, nu, delta, g, spec);
}

std::complex<double> jacquet_k0_closed(std::complex<double> nu, double u) {
    if (!(u > 0.0)) throw std::domain_error("jacquet_k0_closed: u must be positive");
    const cd c_nu = 2.0 * std::exp((nu + 0.5) * std::log(std::numbers::pi) - log_gamma(nu + 0.5));
    return c_nu * std::sqrt(u) * bessel_k(nu, two_pi * u);
}

}  // namespace amv

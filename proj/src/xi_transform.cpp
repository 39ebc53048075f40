#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "amv/gamma.hpp"
#include "amv/moment.hpp"

namespace amv {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr cd I{0.0, 1.0};

}  // namespace

// Derivation sketch (all in the absolute-convergence region):
// write ghat(log(1+m/n)) as an integral of g over the shifted line
// Im t = -c (g is entire with Gaussian decay), then expand
//   n^(-u+it) (n+m)^(-v-it) = m^(-u-v) w^(u+v) (1+w)^(alpha-1/2-v-it) *
//                             [the D_m(xi, alpha) term shape],  w = m/n,
// through the Mellin-Barnes pair
//   (1/2pi i) int y^xi B(u+v-xi, 3/2-u-alpha+it) dxi = y^(u+v)(1-y)^(1/2-u-alpha+it)
// with y = w/(1+w).  Collecting factors gives exactly the multiplier
//   m^(xi-u-v) Gamma(u+v-xi) Gamma(3/2-u-alpha+it) / Gamma(v+3/2-alpha-xi+it)
// applied to D_m and integrated over the xi-line and the t-line.
XiTransformReport xi_transform(const CoefficientTable& t, int m, std::complex<double> u,
                               std::complex<double> v, std::complex<double> alpha,
                               const WeightFunction& w, double contour_c, double xi_line,
                               const QuadratureSpec& spec) {
    XiTransformReport rep;
    if (m < 1) throw std::domain_error("xi_transform: m >= 1");
    if (!(u.real() + v.real() > xi_line && xi_line > 2.0))
        throw std::domain_error("xi_transform: need Re(u+v) > Re xi-line > 2");

    // pole audit: Gamma(u+v-xi) poles at xi = u+v+k; Gamma(3/2-u-alpha+it)
    // poles at Im t = -(u+alpha-3/2-k).  Configurations with a pole within
    // 0.25 of either contour are rejected.
    rep.pole_distances.clear();
    double min_dist = 1e9;
    for (int k = 0; k < 40; ++k) {
        const double d1 = std::abs(u.real() + v.real() + k - xi_line);
        rep.pole_distances.push_back(d1);
        min_dist = std::min(min_dist, d1);
        const double pole_imt = u.real() + alpha.real() - 1.5 - k;
        const double d2 = std::abs(contour_c - pole_imt);
        rep.pole_distances.push_back(d2);
        min_dist = std::min(min_dist, d2);
    }
    rep.pole_audit_ok = min_dist > 0.25;
    if (!rep.pole_audit_ok)
        throw std::domain_error("xi_transform: pole within 0.25 of a contour; rejected");
    // absolute convergence of the Beta kernel on the shifted t-line
    if (!(contour_c > u.real() + alpha.real() - 1.5 + 0.25))
        throw std::domain_error("xi_transform: contour c too small for convergence");

    // reference: direct inner sum of the off-diagonal with the ghat weight
    cd ref = 0.0;
    for (int n = 1; n + m <= t.N_max; ++n) {
        const double lg = std::log1p(double(m) / double(n));
        ref += t.lam(n) * t.lam(n + m) *
               std::exp(-u * std::log(double(n)) - v * std::log(double(n + m))) * ghat(w, lg);
    }
    rep.reference = ref;

    // transform side; the shifted-convolution series is capped independently
    // of the reference window (its own tail enters the budget)
    const int n_cap = std::min(t.N_max - m, 4000);
    std::vector<double> lam_prod, log_nm, log_ratio;
    for (int n = 1; n <= n_cap; ++n) {
        lam_prod.push_back(t.lam(n) * t.lam(n + m));
        log_nm.push_back(std::log(double(n + m)));
        log_ratio.push_back(std::log1p(double(m) / double(n)));
    }
    auto D = [&](cd xi) -> cd {
        cd s = 0.0;
        for (size_t i = 0; i < lam_prod.size(); ++i)
            s += lam_prod[i] * std::exp(-xi * log_nm[i] - (alpha - 0.5) * log_ratio[i]);
        return s;
    };
    const double sig_max = w.T * std::sqrt(std::log(1e22)) + 2.0;
    auto T_kernel = [&](cd xi) -> cd {
        auto f = [&](double sig) -> cd {
            const cd tt = cd(sig, -contour_c);
            const cd num = 1.5 - u - alpha + I * tt;
            const cd den = v + 1.5 - alpha - xi + I * tt;
            return weight_g(w, tt) * std::exp(log_gamma(num) - log_gamma(den));
        };
        QuadratureSpec qs = spec;
        qs.rel_tol = 1e-11;
        qs.abs_tol = 0.0;
        const auto r = integrate(f, -sig_max, sig_max, qs);
        return r.value;
    };

    auto outer = [&](double tau) -> cd {
        const cd xi = cd(xi_line, tau);
        return D(xi) * std::exp((xi - u - v) * std::log(double(m)) + log_gamma(u + v - xi)) *
               T_kernel(xi);
    };
    // real parameters give outer(-tau) = conj(outer(tau)); the tail amplitude
    // keeps the exp(c^2/T^2) factor of the shifted weight, so the range must
    // outlast it
    const double decay = 1.0 + contour_c + 0.5 - u.real() - alpha.real();
    const double cancel = std::exp(contour_c * contour_c / (w.T * w.T));
    double tau_max = std::pow(cancel * std::abs(outer(0.0)) /
                                  std::max(1e-300, 1e-3 * std::abs(ref)),
                              1.0 / decay);
    tau_max = std::min(std::max(tau_max, 60.0), 400.0);
    QuadratureSpec qo = spec;
    qo.rel_tol = 1e-9;
    qo.abs_tol = 1e-7 * std::max(1e-30, std::abs(ref));
    const auto q = integrate(outer, 0.0, tau_max, qo);
    rep.transform = cd(q.value.real() / pi, 0.0);

    const double edge = std::abs(outer(tau_max));
    const double tail = 2.0 * edge * tau_max / std::max(0.5, decay - 1.0) / (2.0 * pi);
    rep.budget = 2.0 * q.error / (2.0 * pi) + tail +
                 divisor_tail_hint(xi_line - 0.8, n_cap) * std::abs(rep.transform) +
                 divisor_tail_hint(u.real() + v.real() - 0.8, t.N_max);
    rep.converged = q.converged && tail <= 2e-3 * std::abs(ref);
    rep.rel_discrepancy = std::abs(rep.transform - rep.reference) /
                          std::max(std::abs(rep.reference), 1e-300);
    rep.ratio = rep.transform / rep.reference;
    return rep;
}

}  // namespace amv

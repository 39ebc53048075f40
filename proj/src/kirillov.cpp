#include "amv/kirillov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "amv/gamma.hpp"
#include "amv/jacquet.hpp"
#include "amv/zeta.hpp"

namespace amv {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;
constexpr cd I{0.0, 1.0};

bool near_nonpositive_integer(cd z) {
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= 1e-12 && std::abs(z.imag()) <= 1e-12;
}

}  // namespace

std::complex<double> kirillov_coeff_closed(std::complex<double> nu, std::complex<double> alpha,
                                           int p) {
    const cd num1 = alpha + nu + 0.5;
    const cd num2 = alpha - nu + 0.5;
    if (near_nonpositive_integer(num1) || near_nonpositive_integer(num2))
        throw std::domain_error("kirillov_coeff_closed: numerator Gamma pole");
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    const cd front = sign * std::exp(-2.0 * alpha * std::numbers::ln2 -
                                     (nu + alpha + 0.5) * std::log(pi) + log_gamma(num1) +
                                     log_gamma(num2));
    return front * gamma_reciprocal(0.5 - nu + double(p)) *
           gamma_reciprocal(alpha + 1.0 - double(p));
}

std::complex<double> kirillov_coeff_integral(std::complex<double> nu, std::complex<double> alpha,
                                             int p, const QuadratureSpec& spec) {
    if (alpha.real() < 1.0)
        throw std::domain_error("kirillov_coeff_integral: Re alpha >= 1 required");
    QuadratureSpec inner = spec;
    inner.rel_tol = std::min(spec.rel_tol, 1e-9);
    auto f = [&](double u) -> cd {
        const cd w = jacquet_integral(p, nu, +1, u, inner);
        return std::exp((alpha - 1.0) * std::log(u) - two_pi * u) * std::conj(w);
    };
    QuadratureSpec outer = spec;
    outer.rel_tol = std::max(spec.rel_tol, 1e-9);
    const auto r = integrate(f, 0.0, 12.0, outer);
    if (!r.converged)
        throw std::runtime_error("kirillov_coeff_integral: quadrature did not converge");
    return r.value / pi;
}

KirillovVector build_kirillov_vector(std::complex<double> nu, std::complex<double> alpha, int P) {
    if (alpha.real() < 1.0) throw std::domain_error("build_kirillov_vector: Re alpha >= 1");
    if (P < 1) throw std::domain_error("build_kirillov_vector: P >= 1");
    KirillovVector v;
    v.nu = nu;
    v.alpha = alpha;
    v.P = P;
    v.coeff.resize(2 * P + 1);
    for (int p = -P; p <= P; ++p) v.coeff[p + P] = kirillov_coeff_closed(nu, alpha, p);

    // envelope constant from the outer quartile of computed coefficients
    const double expo = alpha.real() + 0.5;
    double C = 0.0;
    for (int p = -P; p <= P; ++p) {
        if (std::abs(p) < (3 * P) / 4) continue;
        const double a = std::abs(v.coeff[p + P]);
        if (a > 0.0) C = std::max(C, a * std::pow(std::abs(p) + 1.0, expo));
    }
    if (C == 0.0) {
        for (int p = -P; p <= P; ++p)
            C = std::max(C, std::abs(v.coeff[p + P]) * std::pow(std::abs(p) + 1.0, expo));
    }
    v.decay_C = C;
    double tail = 0.0;
    for (int k = P + 1; k < P + 400000; ++k) {
        const double term = 2.0 * C * std::pow(k + 1.0, -expo);
        tail += term;
        if (term < 1e-18 * tail) break;
    }
    v.tail_bound = tail;
    return v;
}

double kirillov_parseval_target(double alpha) {
    return std::exp(log_gamma(cd(2.0 * alpha)).real() - std::log(pi) -
                    2.0 * alpha * std::log(4.0 * pi));
}

std::complex<double> kirillov_apply(const KirillovVector& v, double u,
                                    const QuadratureSpec& spec) {
    if (u == 0.0) throw std::domain_error("kirillov_apply: u must be nonzero");
    const int delta = u > 0.0 ? +1 : -1;
    const double au = std::abs(u);
    cd sum = 0.0;
    for (int p = -v.P; p <= v.P; ++p) {
        const cd a = v.ap(p);
        if (a == cd(0.0)) continue;
        sum += a * jacquet_integral(p, v.nu, delta, au, spec);
    }
    return sum;
}

WhittakerCache::WhittakerCache(std::complex<double> nu, QuadratureSpec spec)
    : nu_(nu), spec_(spec) {}

std::complex<double> WhittakerCache::get(int p, int delta, double u) const {
    // A^- phi_p = A^+ phi_{-p} at a[u] (substitute x -> -x in the integral)
    const int key_p = delta == +1 ? p : -p;
    const std::pair<int, double> key{key_p, u};
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    const cd val = jacquet_integral(key_p, nu_, +1, u, spec_);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(key, val);
    return val;
}

EvalResult phi_series(const CoefficientTable& t, const KirillovVector& v, double x, double y,
                      int N, const QuadratureSpec& spec) {
    if (t.spectral.series == SeriesKind::holomorphic_discrete)
        throw std::domain_error("phi_series: table is discrete-series");
    if (!(y > 0.0)) throw std::domain_error("phi_series: y > 0");
    N = std::min(N, t.N_max);
    cd sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        const cd kphi = kirillov_apply(v, n * y, spec);
        sum += t.lam(n) / std::sqrt(double(n)) * std::exp(cd(0.0, two_pi * n * x)) * kphi;
    }
    EvalResult r;
    r.value = sum;
    const double a = v.alpha.real();
    const double env = std::pow((N + 1) * y, a) * std::exp(-two_pi * (N + 1) * y) * 2.0 *
                       std::sqrt(N + 1.0);
    r.trunc_bound = env / std::max(1e-300, 1.0 - std::exp(-two_pi * y));
    r.trunc_warning = N >= t.N_max && r.trunc_bound > 1e-9;
    return r;
}

EvalResult phi_closed(const CoefficientTable& t, std::complex<double> alpha, double x, double y,
                      int N) {
    if (!(y > 0.0)) throw std::domain_error("phi_closed: y > 0");
    if (y < 1e-3) throw std::domain_error("phi_closed: y below evaluation floor 1e-3");
    N = std::min(N, t.N_max);
    cd sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        const cd q = std::exp(cd(-two_pi * n * y, two_pi * n * x));
        sum += t.lam(n) * std::exp((alpha - 0.5) * std::log(double(n))) * q;
    }
    EvalResult r;
    r.value = std::exp(alpha * std::log(y)) * sum;
    const double a = alpha.real();
    const double env = std::pow(y, a) * 2.0 * std::pow(N + 1.0, a) *
                       std::exp(-two_pi * (N + 1) * y);
    r.trunc_bound = env / std::max(1e-300, 1.0 - 2.0 * std::exp(-two_pi * y));
    r.trunc_warning = N >= t.N_max && r.trunc_bound > 1e-9 * std::abs(r.value);
    return r;
}

std::complex<double> EisensteinConstantTerm::at(double y, double theta, const KirillovVector& v,
                                                std::complex<double> nu) const {
    cd sum_plus = 0.0, sum_minus = 0.0;
    for (int p = -P; p <= P; ++p) {
        const cd e = std::exp(cd(0.0, 2.0 * p * theta));
        sum_plus += v.ap(p) * e;
        sum_minus += minus_p[p + P] * e;
    }
    return plus * std::exp((0.5 + nu) * std::log(y)) * sum_plus +
           std::exp((0.5 - nu) * std::log(y)) * sum_minus;
}

EisensteinConstantTerm eisenstein_constant_term(const KirillovVector& v) {
    const cd nu = v.nu;
    if (std::abs(nu) < 1e-8)
        throw std::domain_error("eisenstein_constant_term: nu too close to 0");
    EisensteinConstantTerm ct;
    ct.P = v.P;
    ct.plus = riemann_zeta(1.0 + 2.0 * nu);
    // zeta(2 nu) on Re = 0 via the functional equation
    // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
    const cd s = 2.0 * nu;
    const cd zeta2nu = std::exp(s * std::numbers::ln2 + (s - 1.0) * std::log(pi)) *
                       std::sin(0.5 * pi * s) * gamma_complex(1.0 - s) *
                       riemann_zeta(1.0 - s);
    // scattering factor of zeta(1+2nu) E_p against y^(1/2-nu):
    //   2^(1-2nu) Gamma(2nu) zeta(2nu) cos(pi nu) Gamma(p+1/2-nu)/Gamma(p+1/2+nu)
    const cd common = std::exp((1.0 - 2.0 * nu) * std::numbers::ln2 + log_gamma(2.0 * nu)) *
                      zeta2nu * std::cos(pi * nu);
    ct.minus_p.resize(2 * v.P + 1);
    for (int p = -v.P; p <= v.P; ++p) {
        const cd ratio = std::exp(log_gamma(double(p) + 0.5 - nu) -
                                  log_gamma(double(p) + 0.5 + nu));
        ct.minus_p[p + v.P] = v.ap(p) * common * ratio;
    }
    return ct;
}

std::complex<double> phi_on_group(const CoefficientTable& t, const KirillovVector& v,
                                  const WhittakerCache& wc, const GroupPoint& g, int N,
                                  const EisensteinConstantTerm* ct) {
    if (t.spectral.series == SeriesKind::holomorphic_discrete)
        throw std::domain_error("phi_on_group: use the holomorphic evaluator");
    N = std::min(N, t.N_max);
    const bool odd = t.spectral.parity && *t.spectral.parity == Parity::odd;
    cd sum = 0.0;
    for (int p = -v.P; p <= v.P; ++p) {
        const cd a = v.ap(p);
        if (a == cd(0.0)) continue;
        // frequencies beyond the decay of A^{sgn n} phi_p contribute nothing
        const int n_cut = std::min(
            N, (int)std::ceil((2.6 * std::abs(p) + 40.0 + std::abs(v.nu.imag())) /
                              (two_pi * g.y)));
        cd fp = 0.0;
        for (int n = 1; n <= n_cut; ++n) {
            const cd e = std::exp(cd(0.0, two_pi * n * g.x));
            const cd wp = wc.get(p, +1, n * g.y);
            const cd wm = wc.get(p, -1, n * g.y);
            const double lp = t.lam(n), lm = odd ? -t.lam(n) : t.lam(n);
            fp += (lp * e * wp + lm * std::conj(e) * wm) / std::sqrt(double(n));
        }
        sum += a * std::exp(cd(0.0, 2.0 * p * g.theta)) * fp;
    }
    if (ct != nullptr && t.spectral.series == SeriesKind::eisenstein_analogue)
        sum += ct->at(g.y, g.theta, v, v.nu);
    return sum;
}

}  // namespace amv

#include "amv/moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "amv/gamma.hpp"

namespace amv {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

double wrap_theta_sym(double t) {
    // into (-pi/2, pi/2]
    double r = std::fmod(t, pi);
    if (r > 0.5 * pi) r -= pi;
    if (r <= -0.5 * pi) r += pi;
    return r;
}

}  // namespace

double divisor_tail_hint(double sigma, int N) {
    if (sigma <= 1.0) return std::numeric_limits<double>::infinity();
    const double s1 = sigma - 1.0;
    return std::pow(double(N), -s1) * ((std::log(double(N)) + 1.2) / s1 + 1.0 / (s1 * s1));
}

void MomentTask::validate() const {
    if (!table) throw std::domain_error("moment: no table");
    if ((u + v).real() <= 2.0)
        throw std::domain_error("moment: Re(u+v) > 2 required (absolute-convergence floor)");
    if (u.real() <= 1.0 || v.real() <= 1.0)
        throw std::domain_error("moment: Re u, Re v > 1 required (series convergence floor)");
}

ValueWithBound l_series(const CoefficientTable& t, std::complex<double> s, int N) {
    if (s.real() < 1.2)
        throw std::domain_error("l_series: Re s >= 1.2 required (truncation floor)");
    N = std::min(N <= 0 ? t.N_max : N, t.N_max);
    cd sum = 0.0;
    for (int n = 1; n <= N; ++n) sum += t.lam(n) * std::exp(-s * std::log(double(n)));
    ValueWithBound r;
    r.value = sum;
    r.bound = divisor_tail_hint(s.real(), N);
    return r;
}

ValueWithBound moment_integral(const MomentTask& task, const QuadratureSpec& spec) {
    task.validate();
    const CoefficientTable& t = *task.table;
    const int N = std::min(task.N <= 0 ? t.N_max : task.N, t.N_max);
    const double T = task.weight.T;
    const double t_range = task.t_range > 0.0 ? task.t_range
                                              : T * std::sqrt(std::log(1e22));

    std::vector<double> logn(N);
    for (int n = 1; n <= N; ++n) logn[n - 1] = std::log(double(n));

    auto L = [&](cd s) {
        cd sum = 0.0;
        for (int n = 1; n <= N; ++n) sum += t.lam(n) * std::exp(-s * logn[n - 1]);
        return sum;
    };
    auto f = [&](double tt) -> cd {
        const cd it{0.0, tt};
        // conj(L(conj(v) + it)) = sum lambda(n) n^(-v+it) for real lambda
        return L(task.u + it) * std::conj(L(std::conj(task.v) + it)) *
               weight_g(task.weight, tt);
    };
    QuadratureSpec qs = spec;
    qs.rel_tol = std::min(qs.rel_tol, 1e-9);
    const auto q = integrate(f, -t_range, t_range, qs);

    // Gaussian tail of the t-integral against the truncated-series sup
    double lbound = 0.0;
    for (int n = 1; n <= N; ++n)
        lbound += std::abs(t.lam(n)) * std::pow(double(n), -std::min(task.u.real(), task.v.real()));
    const double gauss_tail = lbound * lbound * task.weight.T * std::sqrt(pi) *
                              std::erfc(t_range / task.weight.T);

    ValueWithBound r;
    r.value = q.value;
    r.bound = q.error + gauss_tail;
    r.ok = q.converged;
    return r;
}

ValueWithBound diagonal_term(const CoefficientTable& t, std::complex<double> u,
                             std::complex<double> v, const WeightFunction& w, int N) {
    N = std::min(N <= 0 ? t.N_max : N, t.N_max);
    const cd s = u + v;
    cd sum = 0.0;
    for (int n = 1; n <= N; ++n)
        sum += t.lam(n) * t.lam(n) * std::exp(-s * std::log(double(n)));
    ValueWithBound r;
    r.value = ghat(w, 0.0) * sum;
    r.bound = ghat(w, 0.0) * divisor_tail_hint(s.real() - 0.8, N);  // d(n)^2 <= d-growth allowance
    return r;
}

ValueWithBound offdiagonal_sum(const CoefficientTable& t, std::complex<double> u,
                               std::complex<double> v, const WeightFunction& w, int M_max,
                               int N) {
    N = std::min(N <= 0 ? t.N_max : N, t.N_max);
    M_max = std::min(M_max, t.N_max - 1);
    cd sum = 0.0;
    for (int m = 1; m <= M_max; ++m) {
        const int n_hi = std::min(N, t.N_max - m);
        for (int n = 1; n <= n_hi; ++n) {
            const double lg = std::log1p(double(m) / double(n));
            const cd term = t.lam(n) * t.lam(n + m) *
                            std::exp(-u * std::log(double(n)) - v * std::log(double(n + m))) *
                            ghat(w, lg);
            sum += term;
        }
    }
    ValueWithBound r;
    r.value = sum;
    // m-tail envelope: ghat is decreasing in log(1+m/n) >= m/(n+m)
    if (M_max >= t.N_max - 1) {
        r.bound = 0.0;  // window exhausts the table; value is the complete table sum
    } else {
        const double env = ghat(w, std::log1p(double(M_max + 1) / double(N)));
        double s = 0.0;
        for (int n = 1; n <= std::min(N, t.N_max); ++n)
            s += std::abs(t.lam(n)) * std::pow(double(n), -u.real() - v.real() + 0.5);
        r.bound = env * s;
    }
    return r;
}

ValueWithBound shifted_convolution(const CoefficientTable& t, int m, std::complex<double> s,
                                   int N) {
    if (s.real() <= 2.0)
        throw std::domain_error("shifted_convolution: Re s > 2 required");
    if (m < 1) throw std::domain_error("shifted_convolution: m >= 1");
    N = std::min(N <= 0 ? t.N_max - m : N, t.N_max - m);
    cd sum = 0.0;
    for (int n = 1; n <= N; ++n)
        sum += t.lam(n) * t.lam(n + m) * std::exp(-s * std::log(double(n + m)));
    ValueWithBound r;
    r.value = sum;
    r.bound = divisor_tail_hint(s.real() - 0.8, std::max(1, N));
    return r;
}

ValueWithBound shifted_convolution_alpha(const CoefficientTable& t, int m,
                                         std::complex<double> xi, std::complex<double> alpha,
                                         int N) {
    if (xi.real() <= 2.0)
        throw std::domain_error("shifted_convolution_alpha: Re xi > 2 required");
    if (m < 1) throw std::domain_error("shifted_convolution_alpha: m >= 1");
    N = std::min(N <= 0 ? t.N_max - m : N, t.N_max - m);
    cd sum = 0.0;
    for (int n = 1; n <= N; ++n) {
        const double ratio = std::log1p(double(m) / double(n));
        sum += t.lam(n) * t.lam(n + m) *
               std::exp(-xi * std::log(double(n + m)) - (alpha - 0.5) * ratio);
    }
    ValueWithBound r;
    r.value = sum;
    r.bound = divisor_tail_hint(xi.real() - 0.8, std::max(1, N));
    return r;
}

ValueWithBound poincare_series(int m, std::complex<double> xi, const BumpSpec& bump,
                               const GroupPoint& g, int c_max, int d_max) {
    if (xi.real() <= 1.0) throw std::domain_error("poincare_series: Re xi > 1 required");
    if (m < 1) throw std::domain_error("poincare_series: m >= 1");
    const auto reps = coset_reps(c_max, d_max);
    const UnimodularMatrix base = from_coords(g);
    cd sum = 0.0;
    for (const auto& gamma : reps) {
        const GroupPoint q = iwasawa(gamma * base);
        const double tau = bump_value(bump, wrap_theta_sym(q.theta));
        if (tau == 0.0) continue;
        sum += std::exp(xi * std::log(q.y)) *
               std::exp(cd(-two_pi * m * q.y, two_pi * m * q.x)) * tau;
    }
    ValueWithBound r;
    r.value = sum;
    // Eisenstein majorant tails: sum_{c>C} y^(1-s) c^(1-2s) K_s and the
    // |d| > d_max strip within c <= C
    const double s = xi.real();
    const double Ks = std::sqrt(pi) *
                          std::exp(log_gamma(cd(s - 0.5)).real() - log_gamma(cd(s)).real()) +
                      1.0;
    const double sup_tau = bump_value(bump, 0.0);
    const double tail_c = Ks * std::pow(g.y, 1.0 - s) * std::pow(double(c_max), 2.0 - 2.0 * s) /
                          (2.0 * s - 2.0);
    const double dm = std::max(1.0, double(d_max) - double(c_max) * (std::abs(g.x) + 1.0));
    const double tail_d = 2.0 * double(c_max) * std::pow(g.y, -s) *
                          std::pow(dm, 1.0 - 2.0 * s) / (2.0 * s - 2.0);
    r.bound = sup_tau * (tail_c + tail_d);
    return r;
}

}  // namespace amv

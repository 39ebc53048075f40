#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "amv/gamma.hpp"
#include "amv/moment.hpp"

namespace amv {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

double wrap_theta_sym(double t) {
    double r = std::fmod(t, pi);
    if (r > 0.5 * pi) r -= pi;
    if (r <= -0.5 * pi) r += pi;
    return r;
}

// sum over pairs n, n+m <= n_hi of |lambda lambda| (n(n+m))^(a-1/2)
double pair_weight_sum(const CoefficientTable& t, int m, int n_hi, double a) {
    double s = 0.0;
    n_hi = std::min(n_hi, t.N_max);
    for (int n = 1; n + m <= n_hi; ++n)
        s += std::abs(t.lam(n) * t.lam(n + m)) *
             std::pow(double(n) * double(n + m), a - 0.5);
    return s;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - double(j) * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

}  // namespace

StripPhi make_strip_phi_closed(const CoefficientTable& t, std::complex<double> alpha) {
    StripPhi phi;
    phi.n_max = t.N_max;
    phi.growth = alpha.real();
    const double a = alpha.real();
    const int n_table = t.N_max;
    auto cutoff = [a, n_table](double y) {
        const double base = (46.0 + a * std::log(double(n_table) + 1.0)) / (two_pi * y);
        return std::min(n_table, std::max(2, (int)std::ceil(base)));
    };
    phi.cutoff = cutoff;
    phi.eval = [&t, alpha, cutoff](double x, double y) -> cd {
        const int N = cutoff(y);
        cd sum = 0.0;
        for (int n = 1; n <= N; ++n) {
            const cd q = std::exp(cd(-two_pi * n * y, two_pi * n * x));
            sum += t.lam(n) * std::exp((alpha - 0.5) * std::log(double(n))) * q;
        }
        return std::exp(alpha * std::log(y)) * sum;
    };
    return phi;
}

StripPhi make_strip_phi_holomorphic(const CoefficientTable& t) {
    if (t.spectral.series != SeriesKind::holomorphic_discrete || !t.spectral.weight_ell)
        throw std::domain_error("strip phi: table is not discrete-series");
    const int ell = *t.spectral.weight_ell;
    return make_strip_phi_closed(t, cd(double(ell), 0.0));
}

ValueWithBound strip_integral(int m, std::complex<double> xi, const StripPhi& phi,
                              const CoefficientTable& t) {
    if (xi.real() <= 1.0) throw std::domain_error("strip_integral: Re xi > 1 required");
    const double a = phi.growth;
    const double power = xi.real() + 2.0 * a - 1.0;
    const double S = std::max(1e-300, pair_weight_sum(t, m, phi.n_max, a));

    const double scale = std::exp(log_gamma(cd(power)).real() - power * std::log(4.0 * pi)) *
                         S / pi;
    // lower cut: each pair loses at most its y_min^power / power sliver
    const double y_min = std::pow(std::max(1e-280, 1e-6 * scale * power / S), 1.0 / power);
    double y_cap = 1.0;
    while (std::exp(-4.0 * pi * (1 + m) * y_cap) * std::pow(y_cap, power - 2.0) >
               1e-24 * scale &&
           y_cap < 40.0)
        y_cap += 0.5;

    auto xavg = [&](double y) -> cd {
        const int M = 2 * phi.cutoff(y) + m + 6;
        cd s = 0.0;
        for (int j = 0; j < M; ++j) {
            const double x = double(j) / double(M);
            const cd v = phi.eval(x, y);
            s += std::exp(cd(0.0, two_pi * m * x)) * std::norm(v);
        }
        return s / double(M);
    };
    auto f = [&](double y) -> cd {
        return std::exp((xi - 2.0) * std::log(y)) * std::exp(-two_pi * m * y) * xavg(y);
    };
    QuadratureSpec qs;
    qs.rel_tol = 1e-9;
    qs.abs_tol = 1e-20 * std::max(scale, 1e-100);
    const auto q = integrate(f, y_min, y_cap, qs);

    ValueWithBound r;
    r.value = q.value / pi;
    const double low_tail = S * std::pow(y_min, power) / power / pi;
    const double high_tail = S * std::exp(-4.0 * pi * (1 + m) * y_cap) *
                             std::pow(y_cap, power - 1.0) / pi;
    r.bound = q.error / pi + low_tail + high_tail;
    r.ok = q.converged;
    return r;
}

ValueWithBound poincare_inner_product(int m, std::complex<double> xi, const BumpSpec& bump,
                                      const PhiPointFactory& make_phi,
                                      const FundamentalDomainSpec& fd) {
    const auto reps = coset_reps(fd.c_max, fd.d_max);
    std::vector<double> gx, gw, tx, tw, hx, hw;
    gauss_legendre(fd.nx, gx, gw);
    gauss_legendre(fd.ny, tx, tw);
    gauss_legendre(fd.ntheta, hx, hw);

    cd total = 0.0;
    for (int ix = 0; ix < fd.nx; ++ix) {
        const double x = 0.5 * gx[ix];
        const double wx = 0.5 * gw[ix];
        const double y0 = std::sqrt(std::max(1e-12, 1.0 - x * x));
        const double Tlen = std::log(fd.y_cap / y0);
        for (int iy = 0; iy < fd.ny; ++iy) {
            const double tt = 0.5 * Tlen * (tx[iy] + 1.0);
            const double y = y0 * std::exp(tt);
            const double wy = 0.5 * Tlen * tw[iy];
            const double wxy = wx * wy / y;     // dx dy/y^2 = dx dt / y

            GroupPoint base;
            base.x = x; base.y = y; base.theta = 0.0;
            const UnimodularMatrix bm = from_coords(base);

            std::function<cd(double)> phi_theta;   // built lazily per node
            for (const auto& gamma : reps) {
                const GroupPoint q = iwasawa(gamma * bm);
                const cd pref = std::exp(xi * std::log(q.y)) *
                                std::exp(cd(-two_pi * m * q.y, two_pi * m * q.x));
                if (std::abs(pref) < 1e-22) continue;
                const double center = -q.theta;
                cd th_int = 0.0;
                for (int k = 0; k < fd.ntheta; ++k) {
                    const double th = center + bump.delta * hx[k];
                    const double tau = bump_value(bump, wrap_theta_sym(q.theta + th));
                    if (tau == 0.0) continue;
                    if (!phi_theta) phi_theta = make_phi(x, y);
                    th_int += hw[k] * bump.delta * tau * std::norm(phi_theta(th));
                }
                total += wxy * pref * th_int / pi;
            }
        }
    }

    ValueWithBound r;
    r.value = total;
    r.bound = 0.0;
    return r;
}

PhiPointFactory make_phi_factory_holomorphic(const CoefficientTable& t) {
    if (t.spectral.series != SeriesKind::holomorphic_discrete || !t.spectral.weight_ell)
        throw std::domain_error("phi factory: table is not discrete-series");
    const int ell = *t.spectral.weight_ell;
    return [&t, ell](double x, double y) {
        const int N = std::min(
            t.N_max,
            std::max(2, (int)std::ceil((46.0 + ell * std::log(double(t.N_max) + 1.0)) /
                                       (two_pi * y))));
        cd sum = 0.0;
        for (int n = 1; n <= N; ++n)
            sum += t.lam(n) * std::pow(double(n), ell - 0.5) *
                   std::exp(cd(-two_pi * n * y, two_pi * n * x));
        const cd s = std::pow(y, double(ell)) * sum;
        return std::function<cd(double)>([s, ell](double theta) {
            return std::exp(cd(0.0, 2.0 * ell * theta)) * s;
        });
    };
}

PhiPointFactory make_phi_factory_kirillov(const CoefficientTable& t, const KirillovVector& v,
                                          const WhittakerCache& wc,
                                          const EisensteinConstantTerm* ct) {
    if (t.spectral.series == SeriesKind::holomorphic_discrete)
        throw std::domain_error("phi factory: use the holomorphic factory");
    const bool odd = t.spectral.parity && *t.spectral.parity == Parity::odd;
    const double r_eff = std::abs(v.nu.imag());
    return [&t, &v, &wc, ct, odd, r_eff](double x, double y) {
        // Fourier components F_p(x,y); theta evaluation is then a short sum
        std::vector<cd> fp(2 * v.P + 1, cd(0.0));
        for (int p = -v.P; p <= v.P; ++p) {
            if (v.ap(p) == cd(0.0)) continue;
            const int n_cut = std::min(
                t.N_max,
                std::max(1, (int)std::ceil((2.6 * std::abs(p) + 40.0 + r_eff) /
                                           (two_pi * y))));
            cd s = 0.0;
            for (int n = 1; n <= n_cut; ++n) {
                const cd e = std::exp(cd(0.0, two_pi * n * x));
                const cd wp = wc.get(p, +1, n * y);
                const cd wm = wc.get(p, -1, n * y);
                const double lp = t.lam(n), lm = odd ? -t.lam(n) : t.lam(n);
                s += (lp * e * wp + lm * std::conj(e) * wm) / std::sqrt(double(n));
            }
            fp[p + v.P] = v.ap(p) * s;
        }
        const KirillovVector* vp = &v;
        return std::function<cd(double)>([fp = std::move(fp), vp, ct, y](double theta) {
            cd sum = 0.0;
            for (int p = -vp->P; p <= vp->P; ++p) {
                const cd c = fp[p + vp->P];
                if (c != cd(0.0)) sum += c * std::exp(cd(0.0, 2.0 * p * theta));
            }
            if (ct != nullptr) sum += ct->at(y, theta, *vp, vp->nu);
            return sum;
        });
    };
}

UnfoldingReport unfolding_check(const CoefficientTable& t, int m, std::complex<double> xi,
                                std::complex<double> alpha, const UnfoldingParams& params) {
    if (xi.real() <= 2.0) throw std::domain_error("unfolding: Re xi > 2 required");
    UnfoldingReport rep;

    const bool holo = t.spectral.series == SeriesKind::holomorphic_discrete;
    cd a_used = alpha;
    if (holo) a_used = cd(double(*t.spectral.weight_ell), 0.0);  // alpha <-> ell
    if (!holo && a_used.real() < 3.0)
        throw std::domain_error("unfolding: real alpha >= 3 required");

    const int n_phi = std::min(params.n_phi, t.N_max);

    // window the table so all legs see the same finite pair set
    CoefficientTable window = t;
    if (t.N_max > n_phi) {
        window.lambda.resize(n_phi);
        window.N_max = n_phi;
    }

    // leg (i): pairs n, n+m <= n_phi
    const auto leg1 = shifted_convolution_alpha(window, m, xi, a_used, n_phi - m);
    rep.leg_sum = leg1.value;
    rep.budget_sum = 0.0;

    const cd gexp = xi + 2.0 * a_used - 1.0;
    const cd gconst = pi * std::exp(gexp * std::log(4.0 * pi) - log_gamma(gexp));

    // leg (ii)
    const StripPhi sphi = holo ? make_strip_phi_holomorphic(window)
                               : make_strip_phi_closed(window, a_used);
    const auto leg2 = strip_integral(m, xi, sphi, window);
    rep.leg_strip = gconst * leg2.value;
    rep.budget_strip = std::abs(gconst) * leg2.bound;
    rep.rel_i_ii = std::abs(rep.leg_sum - rep.leg_strip) /
                   std::max(std::abs(rep.leg_sum), 1e-300);
    rep.pass_i_ii = leg2.ok && rep.rel_i_ii <= params.tol_i_ii;

    if (!params.run_inner) {
        rep.leg_inner = 0.0;
        rep.inconclusive = true;
        return rep;
    }

    // leg (iii)
    KirillovVector kv;
    QuadratureSpec jac_spec;
    jac_spec.rel_tol = 1e-9;
    WhittakerCache wc(t.spectral.nu, jac_spec);
    EisensteinConstantTerm ct;
    bool use_ct = false;
    PhiPointFactory factory;
    if (holo) {
        factory = make_phi_factory_holomorphic(window);
    } else {
        kv = build_kirillov_vector(t.spectral.nu, a_used, params.P);
        if (t.spectral.series == SeriesKind::eisenstein_analogue) {
            ct = eisenstein_constant_term(kv);
            use_ct = true;
        }
        factory = make_phi_factory_kirillov(window, kv, wc, use_ct ? &ct : nullptr);
    }

    std::vector<cd> vals;
    for (double d : params.deltas) {
        BumpSpec bump{d};
        const auto ip = poincare_inner_product(m, xi, bump, factory, params.fd);
        vals.push_back(ip.value);
        rep.inner_by_delta.emplace_back(d, ip.value);
    }
    // Richardson in delta^2 through the last three deltas
    cd extrap;
    {
        const size_t k = params.deltas.size();
        if (k < 3) throw std::domain_error("unfolding: need >= 3 deltas");
        const double q0 = params.deltas[k - 3] * params.deltas[k - 3];
        const double q1 = params.deltas[k - 2] * params.deltas[k - 2];
        const double q2 = params.deltas[k - 1] * params.deltas[k - 1];
        const cd v0 = vals[k - 3], v1 = vals[k - 2], v2 = vals[k - 1];
        extrap = v0 * (q1 * q2) / ((q0 - q1) * (q0 - q2)) +
                 v1 * (q0 * q2) / ((q1 - q0) * (q1 - q2)) +
                 v2 * (q0 * q1) / ((q2 - q0) * (q2 - q1));
    }

    // Eisenstein constant-term cross contribution at theta = 0
    cd extra = 0.0;
    if (use_ct) {
        cd SA = 0.0, SB = 0.0;
        for (int p = -kv.P; p <= kv.P; ++p) {
            SA += kv.ap(p);
            SB += ct.minus_p[p + kv.P];
        }
        const cd nu = t.spectral.nu;
        const cd e1 = xi + a_used + nu - 0.5;
        const cd e2 = xi + a_used - nu - 0.5;
        const double lm = window.lam(m);
        extra = lm * std::pow(double(m), a_used.real() - 0.5) / pi *
                (ct.plus * SA * std::exp(log_gamma(e1) - e1 * std::log(4.0 * pi * m)) +
                 SB * std::exp(log_gamma(e2) - e2 * std::log(4.0 * pi * m)));
    }
    rep.ct_correction = gconst * extra;
    rep.leg_inner = gconst * (extrap - extra);

    rep.budget_inner = std::abs(gconst) * 0.3 * std::abs(vals.back() - extrap);
    rep.rel_ii_iii = std::abs(rep.leg_strip - rep.leg_inner) /
                     std::max(std::abs(rep.leg_strip), 1e-300);
    rep.pass_ii_iii = rep.rel_ii_iii <= params.tol_ii_iii;
    rep.inconclusive = !leg2.ok;
    return rep;
}

ValueWithBound selberg_inner_product(const CoefficientTable& t, int m, std::complex<double> xi,
                                     int N) {
    if (t.spectral.series != SeriesKind::holomorphic_discrete)
        throw std::domain_error("selberg_inner_product: discrete-series table required");
    const int ell = *t.spectral.weight_ell;
    N = std::min(N <= 0 ? t.N_max : N, t.N_max);
    const double c_ell = std::exp(2.0 * ell * std::numbers::ln2 +
                                  (ell + 0.5) * std::log(pi) -
                                  0.5 * log_gamma(cd(2.0 * ell)).real());
    const cd gexp = xi + 2.0 * ell - 1.0;
    cd sum = 0.0;
    for (int n = 1; n + m <= N; ++n)
        sum += t.lam(n) * t.lam(n + m) * std::pow(double(n) * double(n + m), ell - 0.5) *
               std::exp(-gexp * std::log(4.0 * pi * (n + m)));
    ValueWithBound r;
    r.value = c_ell * c_ell * std::exp(log_gamma(gexp)) * sum;
    r.bound = 0.0;
    return r;
}

ValueWithBound selberg_inner_product_quadrature(const CoefficientTable& t, int m,
                                                std::complex<double> xi, int N) {
    if (t.spectral.series != SeriesKind::holomorphic_discrete)
        throw std::domain_error("selberg quadrature: discrete-series table required");
    CoefficientTable window = t;
    if (N > 0 && N < t.N_max) {
        window.lambda.resize(N);
        window.N_max = N;
    }
    const int ell = *t.spectral.weight_ell;
    const double c_ell = std::exp(2.0 * ell * std::numbers::ln2 +
                                  (ell + 0.5) * std::log(pi) -
                                  0.5 * log_gamma(cd(2.0 * ell)).real());
    const StripPhi phi = make_strip_phi_holomorphic(window);
    const auto s = strip_integral(m, xi, phi, window);
    ValueWithBound r;
    // strip_integral carries the 1/pi of the G-measure; the K-invariant
    // seed on G/K has none, and |psi|^2 carries the (3) normalization
    r.value = s.value * pi * c_ell * c_ell;
    r.bound = s.bound * pi * c_ell * c_ell;
    r.ok = s.ok;
    return r;
}

}  // namespace amv

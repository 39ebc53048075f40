#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "amv/coefficients.hpp"
#include "amv/geometry.hpp"
#include "amv/kirillov.hpp"
#include "amv/quadrature.hpp"
#include "amv/weight.hpp"

namespace amv {

struct ValueWithBound {
    std::complex<double> value{0.0, 0.0};
    double bound = 0.0;    // truncation + quadrature budget
    bool ok = true;        // false when some leg failed to converge
};

struct MomentTask {
    const CoefficientTable* table = nullptr;
    std::complex<double> u{1.3, 0.0}, v{1.3, 0.0};
    WeightFunction weight;
    int N = 0;            // Dirichlet truncation; 0 means the full table
    double t_range = 0.0; // 0 means automatic from the Gaussian decay
    std::vector<int> shifts{1};

    void validate() const;  // absolute-convergence floors
};

// tail of sum d(n) n^-sigma past N (integral comparison)
double divisor_tail_hint(double sigma, int N);

// Truncated Dirichlet series sum lambda(n) n^(-s) with a divisor-growth
// tail bound.  Requires Re s >= 1.2.
ValueWithBound l_series(const CoefficientTable& t, std::complex<double> s, int N);

// integral L_N(u+it) conj(L_N(vbar+it)) g(t) dt over [-t_range, t_range].
ValueWithBound moment_integral(const MomentTask& task, const QuadratureSpec& spec = {});

// ghat(0) sum lambda(n)^2 n^(-u-v)
ValueWithBound diagonal_term(const CoefficientTable& t, std::complex<double> u,
                             std::complex<double> v, const WeightFunction& w, int N);

// sum_{m>=1} sum_n lambda(n) lambda(n+m) n^-u (n+m)^-v ghat(log(1+m/n))
ValueWithBound offdiagonal_sum(const CoefficientTable& t, std::complex<double> u,
                               std::complex<double> v, const WeightFunction& w, int M_max,
                               int N);

// sum_n lambda(n) lambda(n+m) (n+m)^-s
ValueWithBound shifted_convolution(const CoefficientTable& t, int m, std::complex<double> s,
                                   int N);

// sum_n lambda(n) lambda(n+m) (n+m)^-xi (1+m/n)^-(alpha-1/2)
ValueWithBound shifted_convolution_alpha(const CoefficientTable& t, int m,
                                         std::complex<double> xi, std::complex<double> alpha,
                                         int N);

// P h(g) = sum_{cosets} h(gamma g), h = y^xi e(m(x+iy)) tau(theta)
ValueWithBound poincare_series(int m, std::complex<double> xi, const BumpSpec& bump,
                               const GroupPoint& g, int c_max, int d_max);

// -------- unfolding machinery --------

// theta = 0 slice of Phi with a height-adaptive frequency cutoff
struct StripPhi {
    std::function<std::complex<double>(double x, double y)> eval;
    std::function<int(double y)> cutoff;
    int n_max = 0;
    double growth = 0.0;   // Re alpha (or ell for the discrete series)
};

StripPhi make_strip_phi_closed(const CoefficientTable& t, std::complex<double> alpha);
StripPhi make_strip_phi_holomorphic(const CoefficientTable& t);

// (1/pi) int_0^inf int_0^1 y^(xi-2) e(m(x+iy)) |Phi(n[x]a[y])|^2 dx dy,
// periodic trapezoid in x, adaptive quadrature in y.
ValueWithBound strip_integral(int m, std::complex<double> xi, const StripPhi& phi,
                              const CoefficientTable& t);

struct FundamentalDomainSpec {
    int nx = 24;
    int ny = 18;
    int ntheta = 10;
    double y_cap = 4.0;
    int c_max = 8;
    int d_max = 16;
};

// Phi evaluator curried at a base point (x, y): returns theta -> Phi(n[x]a[y]k[theta]).
using PhiPointFactory =
    std::function<std::function<std::complex<double>(double)>(double x, double y)>;

PhiPointFactory make_phi_factory_holomorphic(const CoefficientTable& t);
PhiPointFactory make_phi_factory_kirillov(const CoefficientTable& t, const KirillovVector& v,
                                          const WhittakerCache& wc,
                                          const EisensteinConstantTerm* ct);

// <P h, |Phi|^2> over the fundamental domain times [0,pi), measure
// dx dy / y^2 * dtheta / pi
ValueWithBound poincare_inner_product(int m, std::complex<double> xi, const BumpSpec& bump,
                                      const PhiPointFactory& make_phi,
                                      const FundamentalDomainSpec& fd);

struct UnfoldingReport {
    std::complex<double> leg_sum;     // (i)  shifted convolution
    std::complex<double> leg_strip;   // (ii) Gamma-constant * strip integral
    std::complex<double> leg_inner;   // (iii) Gamma-constant * (extrapolated inner product - CT part)
    double budget_sum = 0.0, budget_strip = 0.0, budget_inner = 0.0;
    double rel_i_ii = 0.0, rel_ii_iii = 0.0;
    std::vector<std::pair<double, std::complex<double>>> inner_by_delta;
    std::complex<double> ct_correction{0.0, 0.0};
    bool inconclusive = false;
    bool pass_i_ii = false, pass_ii_iii = false;
};

struct UnfoldingParams {
    int n_phi = 220;          // Fourier window of Phi (pairs are matched to it)
    int P = 24;               // K-type truncation
    std::vector<double> deltas{0.4, 0.2, 0.1};
    double tol_i_ii = 1e-3;
    double tol_ii_iii = 1e-2;
    FundamentalDomainSpec fd;
    bool run_inner = true;    // leg (iii) is the expensive one
};

UnfoldingReport unfolding_check(const CoefficientTable& t, int m, std::complex<double> xi,
                                std::complex<double> alpha, const UnfoldingParams& params = {});

// Selberg-type inner product for the discrete series, returned in the
// Gamma-weighted shifted-convolution sum form.
ValueWithBound selberg_inner_product(const CoefficientTable& t, int m, std::complex<double> xi,
                                     int N);

// Same object by direct 2D quadrature of the unfolded integral (route check).
ValueWithBound selberg_inner_product_quadrature(const CoefficientTable& t, int m,
                                                std::complex<double> xi, int N);

// -------- xi-multiplier transform --------

struct XiTransformReport {
    std::complex<double> reference;   // direct inner m-sum of the off-diagonal
    std::complex<double> transform;   // double-contour value
    double budget = 0.0;
    double rel_discrepancy = 0.0;
    std::complex<double> ratio{0.0, 0.0};
    bool pole_audit_ok = false;
    std::vector<double> pole_distances;
    bool converged = false;
};

// Applies m^(xi-u-v) Gamma(u+v-xi) times the shifted Gamma-ratio average of g
// to the shifted convolution D_m(xi, alpha) and integrates over the vertical
// xi-line, targeting sum_n lambda(n)lambda(n+m) n^-u (n+m)^-v ghat(log(1+m/n)).
XiTransformReport xi_transform(const CoefficientTable& t, int m, std::complex<double> u,
                               std::complex<double> v, std::complex<double> alpha,
                               const WeightFunction& w, double contour_c, double xi_line,
                               const QuadratureSpec& spec = {});

}  // namespace amv

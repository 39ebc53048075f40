#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "amv/coefficients.hpp"
#include "amv/geometry.hpp"
#include "amv/quadrature.hpp"

namespace amv {

// The model vector phi = sum_p a_p phi_p with Kirillov transform
// K phi(u) = u^alpha exp(-2 pi u) on u > 0, zero on u < 0; coefficients
// truncated to |p| <= P with a power-law tail bound.
struct KirillovVector {
    std::complex<double> nu;
    std::complex<double> alpha;
    int P = 0;
    std::vector<std::complex<double>> coeff;   // index p + P
    double decay_C = 0.0;                      // envelope |a_p| <= C (|p|+1)^(-Re alpha - 1/2)
    double tail_bound = 0.0;                   // sum of the envelope over |p| > P

    std::complex<double> ap(int p) const {
        if (p < -P || p > P) return {0.0, 0.0};
        return coeff[p + P];
    }
};

// Closed form:
//   a_p = (-1)^p 2^(-2a) pi^(-nu-a-1/2) G(a+nu+1/2) G(a-nu+1/2)
//         / ( G(1/2-nu+p) G(a+1-p) )
// Denominator poles give a_p = 0; numerator poles are rejected.
std::complex<double> kirillov_coeff_closed(std::complex<double> nu, std::complex<double> alpha,
                                           int p);

// Independent route through the unitarity of the Kirillov map:
//   a_p = (1/pi) integral_0^inf u^(alpha-1) e^(-2 pi u) conj(A^+ phi_p(a[u])) du,
// requires Re alpha >= 1.
std::complex<double> kirillov_coeff_integral(std::complex<double> nu, std::complex<double> alpha,
                                             int p, const QuadratureSpec& spec = {});

KirillovVector build_kirillov_vector(std::complex<double> nu, std::complex<double> alpha, int P);

// Parseval target Gamma(2a) / (pi (4 pi)^(2a)) for real a.
double kirillov_parseval_target(double alpha);

// K phi(u) evaluated as the truncated sum over A^(sgn u) phi_p(a[|u|]).
std::complex<double> kirillov_apply(const KirillovVector& v, double u,
                                    const QuadratureSpec& spec = {});

// Caching evaluator for the Whittaker values W_p^delta(u) = A^delta phi_p(a[u]).
class WhittakerCache {
  public:
    explicit WhittakerCache(std::complex<double> nu, QuadratureSpec spec = {});
    std::complex<double> get(int p, int delta, double u) const;

  private:
    std::complex<double> nu_;
    QuadratureSpec spec_;
    mutable std::map<std::pair<int, double>, std::complex<double>> cache_;  // key (p, u), delta folded
    mutable std::mutex mu_;
};

// Truncated Fourier-side construction
//   sum_{0<n<=N} lambda(n)/sqrt(n) e(n x) K phi(n y)
// (negative n drop out by the support of K phi).
EvalResult phi_series(const CoefficientTable& t, const KirillovVector& v, double x, double y,
                      int N, const QuadratureSpec& spec = {});

// Exponential closed shape  y^alpha sum lambda(n) n^(alpha-1/2) e(n(x+iy)).
EvalResult phi_closed(const CoefficientTable& t, std::complex<double> alpha, double x, double y,
                      int N);

// Eisenstein completion: the table's expansion misses the constant term of
// the weight-2p Eisenstein series; these are the two scattering coefficients
// of zeta(1+2nu) E_p, so that the full evaluator is Gamma-automorphic.
struct EisensteinConstantTerm {
    std::complex<double> plus;                    // coefficient of y^(1/2+nu), = zeta(1+2nu)
    std::vector<std::complex<double>> minus_p;    // coefficient of y^(1/2-nu) e^(2ip theta), index p+P
    int P = 0;
    std::complex<double> at(double y, double theta, const KirillovVector& v,
                            std::complex<double> nu) const;
};

EisensteinConstantTerm eisenstein_constant_term(const KirillovVector& v);

// Full evaluator of Phi on the group (theta included), automorphic for
// validated cuspidal tables; for Eisenstein-analogue tables the constant
// term above is added.
std::complex<double> phi_on_group(const CoefficientTable& t, const KirillovVector& v,
                                  const WhittakerCache& wc, const GroupPoint& g, int N,
                                  const EisensteinConstantTerm* ct = nullptr);

}  // namespace amv

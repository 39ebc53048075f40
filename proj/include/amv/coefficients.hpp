#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amv/geometry.hpp"
#include "amv/quadrature.hpp"

namespace amv {

enum class SeriesKind { unitary_principal, holomorphic_discrete, eisenstein_analogue };
enum class Parity { even, odd };

struct SpectralData {
    SeriesKind series = SeriesKind::unitary_principal;
    std::complex<double> nu{0.0, 0.0};      // i R, or ell - 1/2 for the discrete series
    std::optional<int> weight_ell;          // discrete series only
    std::optional<Parity> parity;           // Maass only
};

// Hecke-normalized coefficients lambda(1..N_max), lambda(1) = 1.
struct CoefficientTable {
    SpectralData spectral;
    std::vector<double> lambda;
    int N_max = 0;
    std::string source;
    bool validated = true;
    double hecke_residual = 0.0;

    double lam(int n) const;        // n >= 1
    double lam_signed(int n) const; // negative n uses the parity sign
};

// Ramanujan tau: Delta = q prod (1-q^n)^24 expanded with exact integer
// arithmetic; lambda(n) = tau(n) / n^(11/2).
CoefficientTable tau_table(int N);

// tau(n) for n <= N as 64-bit integers; throws std::overflow_error when a
// value does not fit (the table path keeps exact wide integers internally).
std::vector<std::int64_t> tau_exact(int N);

// Hecke relations tau(m) tau(n) = sum_{d | (m,n)} d^11 tau(mn/d^2) checked
// in exact integer arithmetic for all mn <= bound.
bool tau_hecke_exact(int bound);

// Eisenstein analogue: lambda_nu(n) = sum_{ad=n} (a/d)^nu, real for nu in iR.
CoefficientTable divisor_table(std::complex<double> nu, int N);

struct MaassDatasetRecord {
    double R = 0.0;
    Parity parity = Parity::even;
    double claimed_precision = 0.0;
    std::string origin;
    std::map<int, double> lambda;
};

MaassDatasetRecord parse_maass_file(const std::string& path);

// Ingest a Maass dataset; Hecke relations are validated and the max residual
// recorded.  Residual above 1e-6 flags the table unvalidated (still usable).
CoefficientTable ingest_maass(const std::string& path);

// Max over mn <= N_max of |lambda(m)lambda(n) - sum_{d|(m,n)} lambda(mn/d^2)|.
double hecke_max_residual(const CoefficientTable& t);

struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    double trunc_bound = 0.0;
    bool trunc_warning = false;
};

// Weight-0 vector of a unitary-principal (or Eisenstein-analogue) table:
//   c_nu sqrt(y) sum_n lambda(n) e(n x) K_nu(2 pi |n| y),
// c_nu = 2 pi^(nu+1/2)/Gamma(nu+1/2), truncated at N.
EvalResult eval_cusp_form(const CoefficientTable& t, const GroupPoint& g, int N);

// Lowest-weight vector of the holomorphic discrete series (weight 2 ell):
//   (-1)^ell 2^(2ell) pi^(ell+1/2)/sqrt(Gamma(2 ell)) e^(2 i ell theta) y^ell
//   sum_n lambda(n) n^(ell-1/2) e(n(x+iy)).
EvalResult eval_holomorphic(const CoefficientTable& t, const GroupPoint& g, int N);

// Weight-2p vector via the Whittaker functional (quadrature route).
EvalResult eval_weight_vector(const CoefficientTable& t, int p_weight, const GroupPoint& g,
                              int N, const QuadratureSpec& spec = {});

// max_points |f(gamma g) - f(g)| with f the expansion appropriate to the table
double automorphy_residual(const CoefficientTable& t, const std::vector<GroupPoint>& points,
                           const UnimodularMatrix& gamma, int N);

// |Omega_h f(g) - (nu^2 - 1/4) f(g)| for the weight-0 evaluator
double casimir_residual(const CoefficientTable& t, const GroupPoint& g, double h, int N);

}  // namespace amv

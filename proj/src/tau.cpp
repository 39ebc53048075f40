#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "amv/coefficients.hpp"

namespace amv {

namespace {

// Coefficients of Delta/q = (eta-cube)^8 up to q^(N-1), exact.
// eta^3 = sum_k (-1)^k (2k+1) q^(k(k+1)/2) (Jacobi), so eight passes of a
// sparse multiply give the full series in O(N sqrt(N)).
std::vector<mpz_class> delta_series(int N) {
    if (N < 1 || N > 100000) throw std::domain_error("tau: need 1 <= N <= 1e5");
    std::vector<long> tri;
    std::vector<long> wt;
    for (long k = 0;; ++k) {
        const long t = k * (k + 1) / 2;
        if (t >= N) break;
        tri.push_back(t);
        wt.push_back((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
    }
    std::vector<mpz_class> f(N, 0);
    f[0] = 1;
    std::vector<mpz_class> g(N);
    for (int pass = 0; pass < 8; ++pass) {
        for (int i = 0; i < N; ++i) g[i] = 0;
        for (size_t j = 0; j < tri.size(); ++j) {
            const long t = tri[j];
            const long w = wt[j];
            for (int i = 0; i + t < N; ++i) {
                if (f[i] == 0) continue;
                if (w > 0)
                    g[i + t] += f[i] * (unsigned long)w;
                else
                    g[i + t] -= f[i] * (unsigned long)(-w);
            }
        }
        f.swap(g);
    }
    return f;
}

}  // namespace

std::vector<std::int64_t> tau_exact(int N) {
    const auto f = delta_series(N);
    std::vector<std::int64_t> out(N);
    for (int n = 1; n <= N; ++n) {
        if (!f[n - 1].fits_slong_p())
            throw std::overflow_error("tau_exact: tau(" + std::to_string(n) +
                                      ") exceeds 64-bit range");
        out[n - 1] = f[n - 1].get_si();
    }
    return out;
}

CoefficientTable tau_table(int N) {
    const auto f = delta_series(N);
    CoefficientTable t;
    t.spectral.series = SeriesKind::holomorphic_discrete;
    t.spectral.weight_ell = 6;
    t.spectral.nu = std::complex<double>(5.5, 0.0);
    t.N_max = N;
    t.lambda.resize(N);
    for (int n = 1; n <= N; ++n)
        t.lambda[n - 1] = f[n - 1].get_d() / std::pow(double(n), 5.5);
    t.source = "tau power series";
    t.validated = true;
    t.hecke_residual = 0.0;
    return t;
}

bool tau_hecke_exact(int bound) {
    const auto f = delta_series(bound);
    auto tau = [&](long n) -> const mpz_class& { return f[n - 1]; };
    for (long m = 2; m * m <= (long)bound; ++m) {
        for (long n = m; m * n <= (long)bound; ++n) {
            mpz_class lhs = tau(m) * tau(n);
            mpz_class rhs = 0;
            for (long d = 1; d <= m; ++d) {
                if (m % d || n % d) continue;
                mpz_class dp;
                mpz_ui_pow_ui(dp.get_mpz_t(), (unsigned long)d, 11);
                rhs += dp * tau(m / d * (n / d));
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace amv

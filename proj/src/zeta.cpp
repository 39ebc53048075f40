#include "amv/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace amv {

namespace {

using cd = std::complex<double>;

// B_2 .. B_26
constexpr double bern[13] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0,
    7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0,
    -236364091.0 / 2730.0, 8553103.0 / 6.0};

}  // namespace

std::complex<double> riemann_zeta(std::complex<double> s) {
    if (s.real() <= 0.0)
        throw std::domain_error("riemann_zeta: Re s must be positive");
    if (std::abs(s - cd(1.0)) < 1e-12)
        throw std::domain_error("riemann_zeta: pole at s = 1");

    const int N = std::max(24, int(std::ceil(1.3 * std::abs(s.imag()))) + 8);
    cd sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
    const cd lnN = std::log(double(N));
    const cd Nms = std::exp(-s * lnN);
    sum += Nms * double(N) / (s - 1.0);
    sum += 0.5 * Nms;

    // Euler-Maclaurin correction: sum_k B_2k/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
    cd rising = s;                 // (s)_1
    double fact = 2.0;             // (2k)!
    cd Npow = Nms / double(N);     // N^{-s-1}
    const double N2 = 1.0 / (double(N) * double(N));
    cd corr = 0.0;
    for (int k = 1; k <= 13; ++k) {
        corr += bern[k - 1] / fact * rising * Npow;
        // advance (s)_{2k-1} -> (s)_{2k+1}, (2k)! -> (2k+2)!, N^{-s-2k+1} -> N^{-s-2k-1}
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        fact *= double(2 * k + 1) * double(2 * k + 2);
        Npow *= N2;
    }
    return sum + corr;
}

}  // namespace amv

#include "amv/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amv {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

// 13-term Lanczos numerator (double precision set, g = 6.024680040776729583740234375),
// scaled by exp(-g); denominator is the rising factorial z(z+1)...(z+11).
constexpr double lanczos_g = 6.024680040776729583740234375;
constexpr double lanczos_num[13] = {
    56906521.91347156388090791033559122686859,
    103794043.1163445451906271053616070238554,
    86363131.28813859145546927288977868422342,
    43338889.32467613834773723740590533316085,
    14605578.08768506808414169982791359218571,
    3481712.15498064590882071018964774556468,
    601859.6171681098786670226533699352302507,
    75999.29304014542649875303443598909137092,
    6955.999602515376140356310115515198987526,
    449.9445569063168119446858607650988409623,
    19.51992788247617482847860966235652136208,
    0.5098416655656676188125178644804694509993,
    0.006061842346248906525783753964555936883222};

cd lanczos_sum_scaled(cd z) {
    // ascending-power numerator over z(z+1)...(z+11)
    cd num = lanczos_num[12];
    for (int k = 11; k >= 0; --k) num = num * z + lanczos_num[k];
    cd den = z;
    for (int k = 1; k <= 11; ++k) den *= z + double(k);
    return num / den;
}

cd log_gamma_right(cd z) {
    // Re z >= 0.5:  Gamma(z) = L(z) * ((z+g-1/2)/e)^(z-1/2)
    const cd t = z + (lanczos_g - 0.5);
    return std::log(lanczos_sum_scaled(z)) + (z - 0.5) * (std::log(t) - 1.0);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_right(1.0 - z);
}

std::complex<double> gamma_complex(std::complex<double> z) {
    if (z.real() < 0.5) {
        const double zr = std::round(z.real());
        if (zr <= 0.0 && std::abs(z.real() - zr) <= 1e-12 && std::abs(z.imag()) <= 1e-12)
            throw std::domain_error("gamma_complex: pole at non-positive integer");
        const cd s = std::sin(pi * z);
        return pi / (s * std::exp(log_gamma_right(1.0 - z)));
    }
    return std::exp(log_gamma_right(z));
}

std::complex<double> gamma_reciprocal(std::complex<double> z) {
    if (z.real() < 0.5) {
        // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, entire
        return std::sin(pi * z) * std::exp(log_gamma_right(1.0 - z)) / pi;
    }
    return std::exp(-log_gamma_right(z));
}

bool gamma_degraded(std::complex<double> z) { return std::abs(z.imag()) > 50.0; }

}  // namespace amv

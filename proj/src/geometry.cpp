#include "amv/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace amv {

namespace {
constexpr double pi = std::numbers::pi;
}

UnimodularMatrix::UnimodularMatrix(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const double dt = det();
    if (std::abs(dt - 1.0) > 1e-9)
        throw std::domain_error("UnimodularMatrix: determinant " + std::to_string(dt) +
                                " is not 1");
    if (dt != 1.0) {
        const double s = 1.0 / std::sqrt(dt);
        a *= s; b *= s; c *= s; d *= s;
    }
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
    UnimodularMatrix r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    return r;
}

UnimodularMatrix UnimodularMatrix::inverse() const {
    UnimodularMatrix r;
    r.a = d; r.b = -b; r.c = -c; r.d = a;
    return r;
}

UnimodularMatrix UnimodularMatrix::normalized() const {
    double sign = 1.0;
    if (c != 0.0)
        sign = c > 0.0 ? 1.0 : -1.0;
    else if (d != 0.0)
        sign = d > 0.0 ? 1.0 : -1.0;
    UnimodularMatrix r;
    r.a = sign * a; r.b = sign * b; r.c = sign * c; r.d = sign * d;
    return r;
}

const UnimodularMatrix weyl_w = [] {
    UnimodularMatrix w;
    w.a = 0.0; w.b = 1.0; w.c = -1.0; w.d = 0.0;
    return w;
}();

UnimodularMatrix n_of(double x) {
    UnimodularMatrix m;
    m.a = 1.0; m.b = x; m.c = 0.0; m.d = 1.0;
    return m;
}

UnimodularMatrix a_of(double y) {
    if (!(y > 0.0)) throw std::domain_error("a[y] needs y > 0");
    UnimodularMatrix m;
    const double s = std::sqrt(y);
    m.a = s; m.b = 0.0; m.c = 0.0; m.d = 1.0 / s;
    return m;
}

UnimodularMatrix k_of(double theta) {
    UnimodularMatrix m;
    m.a = std::cos(theta); m.b = std::sin(theta);
    m.c = -m.b; m.d = m.a;
    return m;
}

bool approx_equal(const UnimodularMatrix& m1, const UnimodularMatrix& m2, double tol) {
    const UnimodularMatrix p = m1.normalized(), q = m2.normalized();
    return std::abs(p.a - q.a) <= tol && std::abs(p.b - q.b) <= tol &&
           std::abs(p.c - q.c) <= tol && std::abs(p.d - q.d) <= tol;
}

double reduce_theta(double t) {
    double r = std::fmod(t, pi);
    if (r < 0.0) r += pi;
    if (r >= pi) r -= pi;   // fmod edge
    return r;
}

GroupPoint iwasawa(const UnimodularMatrix& m) {
    if (std::abs(m.det() - 1.0) > 1e-9)
        throw std::domain_error("iwasawa: matrix is not unimodular");
    const double den = m.c * m.c + m.d * m.d;
    GroupPoint p;
    p.y = 1.0 / den;
    p.x = (m.a * m.c + m.b * m.d) / den;
    p.theta = reduce_theta(std::atan2(-m.c, m.d));
    return p;
}

UnimodularMatrix from_coords(const GroupPoint& p) {
    if (!(p.y > 0.0)) throw std::domain_error("from_coords: y must be positive");
    const double s = std::sqrt(p.y);
    const double ct = std::cos(p.theta), st = std::sin(p.theta);
    UnimodularMatrix m;
    m.a = s * ct - p.x * st / s;
    m.b = s * st + p.x * ct / s;
    m.c = -st / s;
    m.d = ct / s;
    return m;
}

GroupPoint multiply(const GroupPoint& p, const GroupPoint& q) {
    return iwasawa(from_coords(p) * from_coords(q));
}

GroupPoint act(const UnimodularMatrix& g, const GroupPoint& p) {
    return iwasawa(g * from_coords(p));
}

namespace {

// s*m + t*n = gcd(m, n)
void ext_gcd(std::int64_t m, std::int64_t n, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
    std::int64_t r0 = m, r1 = n, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    g = r0; s = s0; t = t0;
}

}  // namespace

std::vector<UnimodularMatrix> coset_reps(int c_max, int d_max) {
    if (c_max < 1 || d_max < 0) throw std::domain_error("coset_reps: need c_max >= 1, d_max >= 0");
    std::vector<UnimodularMatrix> reps;
    reps.push_back(UnimodularMatrix{});
    for (std::int64_t c = 1; c <= c_max; ++c) {
        for (std::int64_t d = -d_max; d <= d_max; ++d) {
            if (std::gcd(c, std::abs(d)) != 1) continue;
            // top row (a,b) with a*d - b*c = 1 via s*d + t*c = 1
            std::int64_t g, s, t;
            ext_gcd(d, c, g, s, t);
            if (g != 1) continue;
            UnimodularMatrix m;
            m.a = double(s); m.b = double(-t);
            m.c = double(c); m.d = double(d);
            reps.push_back(m);
        }
    }
    return reps;
}

std::pair<GroupPoint, UnimodularMatrix> reduce_to_fundamental_domain(const GroupPoint& p) {
    if (!(p.y > 0.0)) throw std::domain_error("reduce: y must be positive");
    UnimodularMatrix gamma;   // identity
    const UnimodularMatrix m0 = from_coords(p);
    GroupPoint cur = p;
    for (int iter = 0; iter < 256; ++iter) {
        const double t = std::round(cur.x);
        if (t != 0.0) {
            gamma = n_of(-t) * gamma;
            cur = iwasawa(gamma * m0);
        }
        if (cur.x * cur.x + cur.y * cur.y < 1.0 - 1e-12) {
            gamma = weyl_w * gamma;
            cur = iwasawa(gamma * m0);
            continue;
        }
        if (std::abs(cur.x) <= 0.5 + 1e-15) break;
    }
    return {cur, gamma};
}

std::complex<double> casimir_fd(const std::function<std::complex<double>(const GroupPoint&)>& f,
                                const GroupPoint& p, double h) {
    if (!(h > 0.0)) throw std::domain_error("casimir_fd: h must be positive");
    auto at = [&](double dx, double dy, double dt) {
        GroupPoint q = p;
        q.x += dx; q.y += dy; q.theta = p.theta + dt;   // no wrap: f must accept any theta
        return f(q);
    };
    const std::complex<double> f0 = f(p);
    const std::complex<double> fxx = at(h, 0, 0) - 2.0 * f0 + at(-h, 0, 0);
    const std::complex<double> fyy = at(0, h, 0) - 2.0 * f0 + at(0, -h, 0);
    const std::complex<double> fxt = at(h, 0, h) - at(h, 0, -h) - at(-h, 0, h) + at(-h, 0, -h);
    const double h2 = h * h;
    return p.y * p.y * (fxx + fyy) / h2 - p.y * fxt / (4.0 * h2);
}

}  // namespace amv

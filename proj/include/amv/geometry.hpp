#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace amv {

// Point of PSL(2,R) in NAK coordinates g = n[x] a[y] k[theta], where
//   n[x] = [[1,x],[0,1]],  a[y] = [[sqrt(y),0],[0,1/sqrt(y)]],
//   k[t] = [[cos t, sin t],[-sin t, cos t]],
// y > 0 and theta is reduced mod pi into [0, pi).
struct GroupPoint {
    double x = 0.0;
    double y = 1.0;
    double theta = 0.0;
};

// Real 2x2 matrix of determinant one, identified projectively (M == -M).
// The constructor rescales tiny determinant drift and rejects anything
// farther than 1e-9 from unimodular.
struct UnimodularMatrix {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    UnimodularMatrix() = default;
    UnimodularMatrix(double a_, double b_, double c_, double d_);

    double det() const { return a * d - b * c; }
    UnimodularMatrix operator*(const UnimodularMatrix& o) const;
    UnimodularMatrix inverse() const;

    // Sign convention for comparisons: first nonzero entry of the bottom
    // row made nonnegative.
    UnimodularMatrix normalized() const;
};

// Weyl element [[0,1],[-1,0]].
extern const UnimodularMatrix weyl_w;

UnimodularMatrix n_of(double x);
UnimodularMatrix a_of(double y);
UnimodularMatrix k_of(double theta);

// Projective comparison, entrywise after sign normalization.
bool approx_equal(const UnimodularMatrix& m1, const UnimodularMatrix& m2, double tol = 1e-10);

double reduce_theta(double t);          // into [0, pi)

GroupPoint iwasawa(const UnimodularMatrix& m);
UnimodularMatrix from_coords(const GroupPoint& p);
GroupPoint multiply(const GroupPoint& p, const GroupPoint& q);

// Left action p -> iwasawa(g * from_coords(p)).
GroupPoint act(const UnimodularMatrix& g, const GroupPoint& p);

// Representatives of Gamma_inf \ Gamma with bottom row (c,d),
// 1 <= c <= c_max, |d| <= d_max, gcd(c,d) = 1, plus the identity coset.
std::vector<UnimodularMatrix> coset_reps(int c_max, int d_max);

// Standard reduction of the base point into |x| <= 1/2, x^2+y^2 >= 1.
// Returns the reduced point and the gamma in PSL(2,Z) realizing it.
std::pair<GroupPoint, UnimodularMatrix> reduce_to_fundamental_domain(const GroupPoint& p);

// Central finite-difference approximation of the Casimir operator
//   Omega = y^2 (d_x^2 + d_y^2) - y d_x d_theta
// applied to f at p, second order in h.
std::complex<double> casimir_fd(const std::function<std::complex<double>(const GroupPoint&)>& f,
                                const GroupPoint& p, double h);

}  // namespace amv

#pragma once

#include <functional>
#include <vector>

#include "sgas/common.hpp"

namespace sgas {

// Complete elliptic integrals of parameter m (not modulus), via AGM.
double ellint_K(double m);
double ellint_E(double m);

// Nome data for theta functions with quasi-period tau, Im tau > 0.
class ThetaModulus {
public:
    explicit ThetaModulus(cplx tau, double tol = 1e-16);

    cplx tau() const { return tau_; }
    cplx nome() const { return q_; }
    int terms() const { return nterms_; }
    // Bound on the dropped tail for |Im z| <= im_bound.
    double tail_bound(double im_bound) const;

    cplx theta3(cplx z) const;
    cplx theta4(cplx z) const { return theta3(z + 0.5); }

private:
    cplx tau_;
    cplx q_;
    double tol_;
    int nterms_;
    int terms_for(double im_bound) const;
};

// theta3(z | tau) = sum_n exp(i pi n^2 tau + 2 pi i n z)
cplx theta3(cplx z, cplx tau);

// Jacobi dn(u | m), 0 <= m <= 1, by descending Landen/AGM.
double jacobi_dn(double u, double m);

// Gauss-Legendre nodes and weights on [a, b].
struct GaussRule {
    std::vector<double> x, w;
};
GaussRule gauss_legendre(int n, double a, double b);

// Integrate f over [lo, hi] after y = lo + (hi-lo) sin^2(s/2), which absorbs
// 1/sqrt((y-lo)(hi-y)). f receives y and q = sqrt((y-lo)(hi-y)).
// The integrand seen by the quadrature is f(y, q) ds.
cplx integrate_sqrt_ends(const std::function<cplx(double, double)>& f, double lo, double hi,
                         double split_y = 0.0, bool split = false, double tol = 1e-13);

// Real or complex tanh-sinh on a finite interval.
cplx integrate_ts(const std::function<cplx(double)>& f, double a, double b, double tol = 1e-13);
// Semi-infinite [0, inf).
cplx integrate_half_line(const std::function<cplx(double)>& f, double tol = 1e-13);

}  // namespace sgas

#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "sgas/common.hpp"
#include "sgas/domain_geometry.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

struct EllipticParams {
    double alpha1 = 0, alpha2 = 0;
    double m = 0, m_prime = 0;
    cplx tau;
    double K = 0, K_prime = 0;
    double kappa = 0;           // closed form
    double kappa_quadrature = 0;
    double Omega = 0;           // closed form
    cplx Delta;
    double J = 0;               // real period integral behind Delta and x0
    double g_infty = 0, phi_infty = 0, x0 = 0;
};

// m, m', tau, K, K', kappa and Omega; kappa is cross-checked against its
// defining integral ratio and a mismatch beyond 1e-8 throws.
EllipticParams elliptic_params(double alpha1, double alpha2);

// w^2 = (z^2 + a1^2)(z^2 + a2^2), cuts on I = [i a1, i a2] and its conjugate,
// sqrt(R) > 0 on the real axis and on (-i a1, i a1). A point on the imaginary
// axis belongs to the side given by the sign of its real part (+0 is right).
class SpectralCurve {
public:
    SpectralCurve(double a1, double a2) : a1_(a1), a2_(a2) {}
    double alpha1() const { return a1_; }
    double alpha2() const { return a2_; }
    cplx R(cplx z) const;
    cplx sqrtR(cplx z) const;

private:
    double a1_, a2_;
};

using Mat2 = Eigen::Matrix2cd;

// Evaluators for the scalar functions g, f, u, the model matrix X and the
// step-like profile for a given ellipse and density.
class EllipticModel {
public:
    EllipticModel(const EllipseDomain& d, const SolitonDensity& beta);

    const EllipticParams& params() const { return p_; }
    const SpectralCurve& curve() const { return curve_; }
    const ThetaModulus& theta() const { return theta_; }

    // g(z) = -z + int_{i a2}^z (s^2 + kappa)/sqrt(R) ds
    cplx g(cplx z) const;
    double g_infty() const { return p_.g_infty; }

    cplx f(cplx z) const;
    cplx f_exponent(cplx z) const;
    // one-sided value at iy on a cut, from the Plemelj formula
    cplx f_boundary(double y, Side side) const;
    double phi_infty() const { return p_.phi_infty; }
    // phi_infty re-derived from f along z = R e^{i pi/4}, extrapolated in 1/R
    double phi_infty_from_ray(double R0 = 50.0) const;
    // sum of the densities' zeroth moment; vanishes when Delta is consistent
    cplx f_zeroth_moment() const;

    // Abel map with base point at infinity on sheet 1
    cplx abel_u(cplx z, int sheet = 1) const;
    // counterclockwise loop around I: the b-period, equal to tau
    cplx b_period(int nodes = 256) const;
    // a-cycle collapsed onto (-i a1, i a1), traversed on both sheets
    cplx a_period() const;
    // loop integral of (s^2 + kappa)/sqrt(R) around I, equal to Omega
    cplx omega_period(int nodes = 256) const;

    // ((z + i a1)(z - i a2)/((z + i a2)(z - i a1)))^(1/4), -> 1 at infinity
    cplx phi_root(cplx z) const;
    double epsilon(double x) const;
    Mat2 model_X(cplx z, double x) const;

    cplx psi0_theta(double x) const;
    cplx psi0_dn(double x) const;
    double x0() const { return p_.x0; }
    double period() const { return 2.0 * p_.K / (p_.alpha1 + p_.alpha2); }
    // location of the |psi0_theta| maximum nearest the closed-form x0
    double x0_fitted() const;

    // log r(iy) on I with r = delta S_+ beta^2, continuous along the segment
    cplx log_r(double y, double q) const;

private:
    double a1_, a2_;
    EllipseDomain dom_;
    SolitonDensity beta_;
    SpectralCurve curve_;
    EllipticParams p_;
    ThetaModulus theta_;
    double log_a0_;
    cplx log_beta_mid_;
    cplx H_a2_;

    cplx H(cplx z) const;
    cplx log_beta_on_I(double y) const;
    // cut: 0 off the segments, 1 on I, 2 on conj I, 3 on the middle segment
    cplx f_exponent_raw(cplx z, int cut = 0, double sigma = 0.0) const;
};

cplx big_delta(const EllipseDomain& d, const SolitonDensity& beta);

// Largest residuals of the scalar and matrix jump conditions at n interior
// points per segment (I, conj I, and the middle segment), "+" = left side.
struct JumpResiduals {
    double g = 0, u = 0, f = 0, X = 0;
};
JumpResiduals jump_residuals(const EllipticModel& m, double x, int n_per_segment);

// min Im(g(z) + z) over a grid of n_re x n_im points in the upper half plane
// (real parts avoid the imaginary axis).
double sign_lemma_min(const EllipticModel& m, int n_re = 20, int n_im = 10);

}  // namespace sgas

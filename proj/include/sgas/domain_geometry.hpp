#pragma once

#include <vector>

#include "sgas/common.hpp"

namespace sgas {

// Ellipse with foci i*alpha1, i*alpha2 and focal-distance sum 2*rho.
class EllipseDomain {
public:
    static EllipseDomain make(double alpha1, double alpha2, double rho);

    double alpha1() const { return a1_; }
    double alpha2() const { return a2_; }
    double rho() const { return rho_; }
    double c() const { return 0.5 * (a2_ - a1_); }
    double y0() const { return 0.5 * (a1_ + a2_); }
    double semi_minor() const;
    double area() const;
    double min_im() const { return y0() - rho_; }
    double max_im() const { return y0() + rho_; }
    // max over the closed ellipse of |Im w^2| = 2|Re w| Im w
    double max_abs_im_sq() const;

    bool contains(cplx z) const;
    // point of the disk parametrization, r in [0,1]
    cplx map(double r, double phi) const;

private:
    EllipseDomain(double a1, double a2, double rho) : a1_(a1), a2_(a2), rho_(rho) {}
    double a1_, a2_, rho_;
};

bool contains(const EllipseDomain& d, cplx z);
double area(const EllipseDomain& d);

// beta(z) = sum_k coeffs[k] z^k
class SolitonDensity {
public:
    SolitonDensity() : coeffs_{1.0} {}
    explicit SolitonDensity(std::vector<cplx> coeffs);
    static SolitonDensity constant(cplx v) { return SolitonDensity({v}); }

    cplx operator()(cplx z) const;
    // beta*(z) = conj(beta(conj z))
    cplx conj_eval(cplx z) const;
    cplx derivative(cplx z) const;
    bool is_zero() const;
    const std::vector<cplx>& coeffs() const { return coeffs_; }

private:
    std::vector<cplx> coeffs_;
};

struct QuadratureRule2D {
    std::vector<cplx> nodes;
    std::vector<double> weights;
    int n_r = 0, n_phi = 0;
    std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre in r (weight r), periodic trapezoid in phi.
QuadratureRule2D quadrature_2d(const EllipseDomain& d, int n_r, int n_phi);

// Deterministic area-uniform points: rings whose radii match the moments of
// the radial measure, each ring an equispaced angular grid.
std::vector<cplx> sample_uniform(const EllipseDomain& d, int N);

// delta S(iy) = (4 rho b / c^2) * S~(iy) from the chosen side of I.
// Side::Left is the default "+" value.
cplx schwarz_delta(const EllipseDomain& d, double y, Side side = Side::Left);

// r(iy) = delta S(iy) beta(iy)^2
cplx cut_function_r(const EllipseDomain& d, const SolitonDensity& beta, double y,
                    Side side = Side::Left);

}  // namespace sgas

#include <cmath>

#include "sgas/elliptic_asymptotics.hpp"

namespace sgas {

namespace {

// e^{-i pi/4} sqrt(i w): cut pointing up from w = 0
cplx sq_up(cplx w) { return std::polar(1.0, -kPi / 4) * std::sqrt(cplx(-w.imag(), w.real())); }

}  // namespace

cplx SpectralCurve::R(cplx z) const {
    const cplx z2 = z * z;
    return (z2 + a1_ * a1_) * (z2 + a2_ * a2_);
}

// S(z) = sq_up(z - i a1) sq_up(z - i a2) has its cut on I and S ~ z at infinity;
// the Schwarz reflection conj(S(conj z)) carries the cut on conj I.
cplx SpectralCurve::sqrtR(cplx z) const {
    const cplx zb = std::conj(z);
    const cplx s = sq_up(z - cplx(0, a1_)) * sq_up(z - cplx(0, a2_));
    const cplx sb = sq_up(zb - cplx(0, a1_)) * sq_up(zb - cplx(0, a2_));
    return s * std::conj(sb);
}

EllipticParams elliptic_params(double alpha1, double alpha2) {
    if (!(alpha1 > 0.0 && alpha2 > alpha1)) throw DomainError("elliptic_params needs alpha2 > alpha1 > 0");
    EllipticParams p;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    const double s = alpha1 + alpha2;
    p.m = 4.0 * alpha1 * alpha2 / (s * s);
    const double d = (alpha2 - alpha1) / s;
    p.m_prime = d * d;
    p.K = ellint_K(p.m);
    p.K_prime = ellint_K(p.m_prime);
    p.tau = cplx(0.0, p.K_prime / p.K);
    p.Omega = -kPi * s / p.K;

    const double m1 = (alpha1 * alpha1) / (alpha2 * alpha2);
    p.kappa = alpha2 * alpha2 * (1.0 - ellint_E(m1) / ellint_K(m1));
    // kappa = -int s^2 ds/sqrt(R) / int ds/sqrt(R) over [-i a1, i a1]
    const double a2sq = alpha2 * alpha2;
    auto num = [&](double y, double) { return cplx(y * y / std::sqrt(a2sq - y * y)); };
    auto den = [&](double y, double) { return cplx(1.0 / std::sqrt(a2sq - y * y)); };
    p.kappa_quadrature = (integrate_sqrt_ends(num, -alpha1, alpha1) / integrate_sqrt_ends(den, -alpha1, alpha1)).real();
    if (std::abs(p.kappa - p.kappa_quadrature) > 1e-8)
        throw ConvergenceError("elliptic_params: kappa closed form and defining integral disagree");
    return p;
}

}  // namespace sgas

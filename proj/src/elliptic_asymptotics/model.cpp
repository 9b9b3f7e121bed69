#include <algorithm>
#include <cmath>
#include <functional>

#include <boost/math/tools/roots.hpp>

#include "sgas/elliptic_asymptotics.hpp"

namespace sgas {

namespace {

// int_z^{sigma inf} h along the horizontal ray zeta = z + sigma w^2, sigma = side of z
cplx ray_integral(const std::function<cplx(cplx)>& h, cplx z) {
    const double sigma = z.real() < 0.0 ? -1.0 : 1.0;
    auto integrand = [&](double w) -> cplx {
        // the integrands here decay at least like |zeta|^-2
        if (w < 1e-150 || w > 1e60) return 0.0;
        return h(z + sigma * w * w) * (2.0 * sigma * w);
    };
    return integrate_half_line(integrand);
}

// e^{-i pi/8} (i w)^{1/4}, cut pointing up
cplx r4_up(cplx w) { return std::polar(1.0, -kPi / 8) * std::pow(cplx(-w.imag(), w.real()), 0.25); }
// e^{i pi/8} (-i w)^{1/4}, cut pointing down
cplx r4_down(cplx w) { return std::polar(1.0, kPi / 8) * std::pow(cplx(w.imag(), -w.real()), 0.25); }

ThetaModulus modulus_for(double a1, double a2) { return ThetaModulus(elliptic_params(a1, a2).tau); }

}  // namespace

EllipticModel::EllipticModel(const EllipseDomain& d, const SolitonDensity& beta)
    : a1_(d.alpha1()), a2_(d.alpha2()), dom_(d), beta_(beta), curve_(a1_, a2_),
      p_(elliptic_params(a1_, a2_)), theta_(modulus_for(a1_, a2_)) {
    // beta must be zero-free on I for log r
    double bmax = 0.0, bmin = 1e300;
    for (int k = 0; k <= 400; ++k) {
        const double v = std::abs(beta_(cplx(0.0, a1_ + (a2_ - a1_) * k / 400.0)));
        bmax = std::max(bmax, v);
        bmin = std::min(bmin, v);
    }
    if (!(bmax > 0.0) || bmin <= 1e-10 * bmax)
        throw DomainError("elliptic asymptotics need beta zero-free on the segment I");
    const double c = d.c();
    log_a0_ = std::log(4.0 * d.rho() * d.semi_minor() / (c * c));
    log_beta_mid_ = std::log(beta_(cplx(0.0, 0.5 * (a1_ + a2_))));

    const double a1 = a1_, a2 = a2_;
    auto s_of = [a1, a2](double y) { return std::sqrt((y + a1) * (y + a2)); };
    // J = int_I log r / sqrt(R)_+ - int_{conj I} log r* / sqrt(R)_+ = -2 int Re log r dy/|sqrt R|
    const cplx JI = integrate_sqrt_ends([&](double y, double q) { return -log_r(y, q) / s_of(y); }, a1, a2);
    const cplx JIb = integrate_sqrt_ends([&](double y, double q) { return std::conj(log_r(y, q)) / s_of(y); }, a1, a2);
    const cplx J = JI - JIb;
    if (!(std::abs(J.imag()) <= 1e-10 * std::max(1.0, std::abs(J))))
        throw ConvergenceError("period integral J is not real");
    p_.J = J.real();
    p_.Delta = cplx(0.0, -(a1 + a2) * p_.J / (2.0 * p_.K));

    H_a2_ = H(on_axis(a2, Side::Right));
    const cplx ginf = cplx(0.0, -a2) - H_a2_;
    if (!(std::abs(ginf.imag()) <= 1e-9)) throw ConvergenceError("g at infinity is not real");
    p_.g_infty = ginf.real();

    // phi_infty from the first moment of the jump densities (the zeroth vanishes)
    const cplx T1 = integrate_sqrt_ends([&](double y, double q) { return log_r(y, q) / s_of(y) * cplx(0, y); }, a1, a2) +
                    integrate_sqrt_ends([&](double y, double q) { return std::conj(log_r(y, q)) / s_of(y) * cplx(0, -y); }, a1, a2) +
                    p_.Delta * integrate_sqrt_ends([&](double y, double) { return I1 / std::sqrt(a2 * a2 - y * y) * cplx(0, y); }, -a1, a1);
    const cplx phinf = T1 / (2.0 * kPi);
    if (!(std::abs(phinf.imag()) <= 1e-9)) throw ConvergenceError("phi at infinity is not real");
    p_.phi_infty = phinf.real();
    p_.x0 = p_.K / (a1 + a2) - p_.J / (2.0 * kPi);
}

cplx EllipticModel::log_beta_on_I(double y) const {
    if (beta_.coeffs().size() == 1) return log_beta_mid_;
    // continuous branch: integrate beta'/beta from the midpoint
    const double ym = 0.5 * (a1_ + a2_);
    if (y == ym) return log_beta_mid_;
    static const GaussRule g = gauss_legendre(32, 0.0, 1.0);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < g.x.size(); ++k) {
        const cplx zz(0.0, ym + (y - ym) * g.x[k]);
        acc += g.w[k] * beta_.derivative(zz) / beta_(zz);
    }
    return log_beta_mid_ + acc * I1 * (y - ym);
}

cplx EllipticModel::log_r(double y, double q) const {
    // delta S_+ = -(4 rho b / c^2) q on I, hence the i pi
    return log_a0_ + std::log(q) + cplx(0.0, kPi) + 2.0 * log_beta_on_I(y);
}

cplx EllipticModel::H(cplx z) const {
    const double k = p_.kappa, a1s = a1_ * a1_, a2s = a2_ * a2_, lim = 4.0 * a2_;
    auto h = [&](cplx s) -> cplx {
        const cplx q = curve_.sqrtR(s);
        if (std::abs(s) < lim) return (s * s + k) / q - 1.0;
        // same quantity without the cancellation at large |s|
        const cplx d = ((a1s + a2s) * s * s + a1s * a2s) / (q + s * s);
        return (k - d) / q;
    };
    return -ray_integral(h, z);
}

cplx EllipticModel::g(cplx z) const { return cplx(0.0, -a2_) + H(z) - H_a2_; }

namespace {

// int phi(y, q) / (w(y) - z) dy/q over [lo, hi], w = sgn i y. With on_cut the point z
// sits on that segment at parameter y0, approached from the side sigma = sign Re z:
// the Plemelj limit is -sgn i PV - pi sigma phi(y0)/q0, and the principal value is
// int (phi(y) - phi(y0))/(y - y0) dy/q since PV int dy/((y - y0) q) vanishes.
cplx cauchy_on_segment(const std::function<cplx(double, double)>& phi, double lo, double hi, double sgn, cplx z,
                       bool on_cut, double y0, double sigma) {
    if (!on_cut) return integrate_sqrt_ends([&](double y, double q) { return phi(y, q) / (sgn * cplx(0.0, y) - z); },
                                            lo, hi, sgn * z.imag(), true);
    const double q0 = std::sqrt((y0 - lo) * (hi - y0));
    const cplx p0 = phi(y0, q0);
    const double tiny = 1e-12 * (hi - lo);
    const cplx pv = integrate_sqrt_ends(
        [&](double y, double q) {
            const double dy = y - y0;
            return std::abs(dy) < tiny ? cplx(0.0) : (phi(y, q) - p0) / dy;
        },
        lo, hi);
    return -sgn * I1 * pv - kPi * sigma * p0 / q0;
}

}  // namespace

cplx EllipticModel::f_exponent_raw(cplx z, int cut, double sigma) const {
    const double a1 = a1_, a2 = a2_;
    auto s_of = [a1, a2](double y) { return std::sqrt((y + a1) * (y + a2)); };
    const double y0 = z.imag();
    const cplx t1 = cauchy_on_segment([&](double y, double q) { return -log_r(y, q) / s_of(y); }, a1, a2, 1.0, z,
                                      cut == 1, y0, sigma);
    const cplx t2 = cauchy_on_segment([&](double y, double q) { return std::conj(log_r(y, q)) / s_of(y); }, a1, a2,
                                      -1.0, z, cut == 2, -y0, sigma);
    const cplx t3 = cauchy_on_segment([&](double y, double) { return I1 / std::sqrt(a2 * a2 - y * y); }, -a1, a1, 1.0,
                                      z, cut == 3, y0, sigma);
    return curve_.sqrtR(z) / (2.0 * kPi * I1) * (-t1 + t2 + p_.Delta * t3);
}

cplx EllipticModel::f_exponent(cplx z) const { return f_exponent_raw(z); }

cplx EllipticModel::f(cplx z) const { return std::exp(f_exponent_raw(z)); }

cplx EllipticModel::f_boundary(double y, Side side) const {
    const double ay = std::abs(y);
    if (!(ay < a2_) || ay == a1_) throw DomainError("f_boundary: point must lie inside a cut segment");
    const int cut = ay < a1_ ? 3 : (y > 0 ? 1 : 2);
    return std::exp(f_exponent_raw(on_axis(y, side), cut, side == Side::Left ? -1.0 : 1.0));
}

double EllipticModel::phi_infty_from_ray(double R0) const {
    const cplx e = std::polar(1.0, kPi / 4);
    const double v0 = f_exponent_raw(R0 * e).imag();
    const double v1 = f_exponent_raw(2.0 * R0 * e).imag();
    const double v2 = f_exponent_raw(4.0 * R0 * e).imag();
    return (8.0 * v2 - 6.0 * v1 + v0) / 3.0;
}

cplx EllipticModel::f_zeroth_moment() const {
    const double a1 = a1_, a2 = a2_;
    auto s_of = [a1, a2](double y) { return std::sqrt((y + a1) * (y + a2)); };
    return integrate_sqrt_ends([&](double y, double q) { return log_r(y, q) / s_of(y); }, a1, a2) +
           integrate_sqrt_ends([&](double y, double q) { return std::conj(log_r(y, q)) / s_of(y); }, a1, a2) +
           p_.Delta * integrate_sqrt_ends([&](double y, double) { return I1 / std::sqrt(a2 * a2 - y * y); }, -a1, a1);
}

cplx EllipticModel::abel_u(cplx z, int sheet) const {
    if (sheet != 1 && sheet != 2) throw DomainError("abel_u: sheet must be 1 or 2");
    const cplx cw = I1 * (a1_ + a2_) / (4.0 * p_.K);
    const cplx u1 = -cw * ray_integral([&](cplx s) { return 1.0 / curve_.sqrtR(s); }, z);
    return sheet == 1 ? u1 : -0.5 - u1;
}

cplx EllipticModel::b_period(int nodes) const {
    const cplx cw = I1 * (a1_ + a2_) / (4.0 * p_.K);
    const cplx center(0.0, 0.5 * (a1_ + a2_));
    const double rad = 0.5 * (0.5 * (a2_ - a1_) + 0.5 * (a1_ + a2_) + a1_);
    cplx acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const cplx e = std::polar(1.0, 2.0 * kPi * k / nodes);
        acc += I1 * rad * e / curve_.sqrtR(center + rad * e);
    }
    return cw * acc * (2.0 * kPi / nodes);
}

cplx EllipticModel::omega_period(int nodes) const {
    const cplx center(0.0, 0.5 * (a1_ + a2_));
    const double rad = 0.5 * (0.5 * (a2_ - a1_) + 0.5 * (a1_ + a2_) + a1_);
    cplx acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const cplx e = std::polar(1.0, 2.0 * kPi * k / nodes);
        const cplx z = center + rad * e;
        acc += I1 * rad * e * (z * z + p_.kappa) / curve_.sqrtR(z);
    }
    return acc * (2.0 * kPi / nodes);
}

cplx EllipticModel::a_period() const {
    const cplx cw = I1 * (a1_ + a2_) / (4.0 * p_.K);
    const double a2 = a2_;
    // 2 cw int_{i a1}^{-i a1} dz / sqrt(R), sqrt(R)(iy) = sqrt((a1^2 - y^2)(a2^2 - y^2))
    const cplx I = integrate_sqrt_ends([&](double y, double) { return cplx(1.0 / std::sqrt(a2 * a2 - y * y)); }, -a1_, a1_);
    return -2.0 * cw * I1 * I;
}

cplx EllipticModel::phi_root(cplx z) const {
    for (double a : {a1_, -a1_, a2_, -a2_})
        if (std::abs(z - cplx(0.0, a)) < 1e-14) throw DomainError("phi_root: z is a branch point");
    const cplx q1 = r4_down(z + cplx(0, a1_)) / r4_down(z + cplx(0, a2_));
    const cplx q2 = r4_up(z - cplx(0, a2_)) / r4_up(z - cplx(0, a1_));
    return q1 * q2;
}

double EllipticModel::epsilon(double x) const { return ((x * p_.Omega - I1 * p_.Delta) / (2.0 * kPi)).real(); }

Mat2 EllipticModel::model_X(cplx z, double x) const {
    const cplx u = abel_u(z);
    const double e = epsilon(x);
    auto th = [&](cplx v) { return theta_.theta3(v); };
    const cplx pref = th(0.0) / (2.0 * th(e));
    const cplx ph = phi_root(z);
    const cplx pp = ph + 1.0 / ph, pm = ph - 1.0 / ph;
    Mat2 X;
    X(0, 0) = pref * th(u - e) / th(u) * pp;
    X(0, 1) = -I1 * pref * th(u + 0.5 + e) / th(u + 0.5) * pm;
    X(1, 0) = I1 * pref * th(u + 0.5 - e) / th(u + 0.5) * pm;
    X(1, 1) = pref * th(u + e) / th(u) * pp;
    return X;
}

cplx EllipticModel::psi0_theta(double x) const {
    const double e = epsilon(x);
    auto th = [&](double v) { return theta_.theta3(v); };
    const cplx ph = std::exp(2.0 * I1 * (p_.g_infty * x + p_.phi_infty));
    return -I1 * ph * (a2_ - a1_) * th(0.0) * th(e + 0.5) / (th(0.5) * th(e));
}

cplx EllipticModel::psi0_dn(double x) const {
    const double s = a1_ + a2_;
    const cplx ph = std::exp(2.0 * I1 * (p_.g_infty * x + p_.phi_infty));
    return -I1 * ph * s * jacobi_dn(s * (x - p_.x0), p_.m);
}

double EllipticModel::x0_fitted() const {
    // |psi0_theta| peaks where the centered slope changes sign; the centered
    // difference of an even profile vanishes exactly at the peak
    const double hd = 1e-3;
    auto slope = [&](double x) { return std::abs(psi0_theta(x + hd)) - std::abs(psi0_theta(x - hd)); };
    const double P = period();
    double lo = p_.x0 - 0.25 * P, hi = p_.x0 + 0.25 * P;
    if (slope(lo) * slope(hi) > 0) throw ConvergenceError("x0_fitted: no peak near the closed-form x0");
    boost::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(slope, lo, hi, boost::math::tools::eps_tolerance<double>(50), iters);
    return 0.5 * (r.first + r.second);
}

cplx big_delta(const EllipseDomain& d, const SolitonDensity& beta) { return EllipticModel(d, beta).params().Delta; }

}  // namespace sgas

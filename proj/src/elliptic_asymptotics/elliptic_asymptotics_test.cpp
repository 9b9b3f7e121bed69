#include <cmath>
#include <random>

#include <doctest.h>
#include <gsl/gsl_integration.h>

#include "sgas/elliptic_asymptotics.hpp"

using namespace sgas;

namespace {

const EllipseDomain kDom = EllipseDomain::make(0.5, 1.5, 0.75);

const EllipticModel& model() {
    static const EllipticModel m(kDom, SolitonDensity());
    return m;
}

// int_a^b f(y) (y-a)^(-1/2) (b-y)^(-1/2) log^mu(y-a) log^nu(b-y) dy by QAWS
double qaws(double (*f)(double, void*), void* p, double a, double b, int mu, int nu) {
    gsl_integration_qaws_table* t = gsl_integration_qaws_table_alloc(-0.5, -0.5, mu, nu);
    gsl_integration_workspace* w = gsl_integration_workspace_alloc(200);
    gsl_function F{f, p};
    double res = 0, err = 0;
    gsl_integration_qaws(&F, a, b, t, 0.0, 1e-13, 200, w, &res, &err);
    gsl_integration_workspace_free(w);
    gsl_integration_qaws_table_free(t);
    return res;
}

struct Foci {
    double a1, a2, scale;
};

double inv_s(double y, void* p) {
    const auto* f = static_cast<Foci*>(p);
    return f->scale / std::sqrt((y + f->a1) * (y + f->a2));
}

}  // namespace

TEST_CASE("parameters for foci (1, 3)") {
    const auto p = elliptic_params(1.0, 3.0);
    CHECK(p.m == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(p.m_prime == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.tau.real() == 0.0);
    CHECK(p.tau.imag() == doctest::Approx(p.K_prime / p.K).epsilon(1e-15));
}

TEST_CASE("parameters are real where they should be") {
    const auto& p = model().params();
    CHECK(p.m > 0.0);
    CHECK(p.m < 1.0);
    CHECK(p.Omega < 0.0);
    CHECK(std::abs(p.Delta.real()) < 1e-10);
    CHECK(std::abs(p.kappa - p.kappa_quadrature) < 1e-8);
    CHECK(std::isfinite(p.g_infty));
    CHECK(std::isfinite(p.phi_infty));
    CHECK(std::isfinite(p.x0));
}

TEST_CASE("periods by loop quadrature") {
    const auto& m = model();
    CHECK(std::abs(m.omega_period() - m.params().Omega) < 1e-8);
    CHECK(std::abs(m.b_period() - m.params().tau) < 1e-10);
    CHECK(std::abs(m.a_period() - 1.0) < 1e-12);
}

TEST_CASE("Delta against a Gauss-Jacobi-log reference") {
    // J = -2 int_I Re log r / (sqrt((y+a1)(y+a2)) sqrt((y-a1)(a2-y))) dy with
    // Re log r = log A0 + (log(y-a1) + log(a2-y))/2 for beta = 1
    const double a1 = kDom.alpha1(), a2 = kDom.alpha2(), c = kDom.c();
    const double logA0 = std::log(4.0 * kDom.rho() * kDom.semi_minor() / (c * c));
    Foci f0{a1, a2, -2.0 * logA0}, f1{a1, a2, -1.0};
    const double J = qaws(inv_s, &f0, a1, a2, 0, 0) + qaws(inv_s, &f1, a1, a2, 1, 0) + qaws(inv_s, &f1, a1, a2, 0, 1);
    const auto& p = model().params();
    CHECK(std::abs(p.J - J) < 1e-9);
    CHECK(std::abs(p.Delta.imag() + (a1 + a2) * J / (2.0 * p.K)) < 1e-9);
}

TEST_CASE("Delta is linear in log of a constant density factor") {
    const cplx d1 = big_delta(kDom, SolitonDensity());
    const double lam = 2.5;
    const cplx d2 = big_delta(kDom, SolitonDensity::constant(lam));
    const cplx tau = model().params().tau;
    CHECK(std::abs(d2.real()) < 1e-10);
    CHECK(std::abs(d2 - (d1 + 4.0 * tau * std::log(lam))) < 1e-9);
}

TEST_CASE("density with a zero on the segment is rejected") {
    CHECK_THROWS_AS(EllipticModel(kDom, SolitonDensity({cplx(0.0, -1.0), 1.0})), DomainError);
}

TEST_CASE("g: Schwarz symmetry, jumps, sign lemma") {
    const auto& m = model();
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const cplx z(u(rng), u(rng));
        if (std::abs(z.real()) < 1e-3) continue;
        CHECK(std::abs(std::conj(m.g(std::conj(z))) - m.g(z)) < 1e-10);
    }
    const JumpResiduals j = jump_residuals(m, 0.0, 20);
    CHECK(j.g < 1e-8);
    CHECK(j.u < 1e-8);
    CHECK(j.f < 1e-7);
    CHECK(j.X < 1e-7);
    CHECK(sign_lemma_min(m, 20, 10) > 0.0);
}

TEST_CASE("X jumps at several x") {
    for (double x : {-7.3, 2.0, 11.0}) CHECK(jump_residuals(model(), x, 6).X < 1e-7);
}

TEST_CASE("f: symmetry and the limit at infinity") {
    const auto& m = model();
    for (cplx z : {cplx(0.4, 0.9), cplx(-1.2, 0.3), cplx(2.0, -1.0), cplx(-0.3, 2.5)})
        CHECK(std::abs(std::conj(m.f(std::conj(z))) * m.f(z) - 1.0) < 1e-10);
    const cplx e = std::polar(1.0, kPi / 4);
    // f = e^{i phi_infty}(1 + O(1/z))
    for (double R : {100.0, 1000.0}) CHECK(std::abs(std::abs(m.f(R * e)) - 1.0) < 1.0 / R);
    CHECK(std::abs(m.phi_infty_from_ray() - m.phi_infty()) < 1e-6);
    CHECK(std::abs(m.f_zeroth_moment()) < 1e-10);
}

TEST_CASE("Abel map normalization") {
    const auto& m = model();
    const cplx far = 1e6 * std::polar(1.0, kPi / 3);
    CHECK(std::abs(m.abel_u(far, 1)) < 1e-5);
    CHECK(std::abs(m.abel_u(far, 2) + 0.5) < 1e-5);
    CHECK_THROWS_AS(m.abel_u(far, 3), DomainError);
}

TEST_CASE("X tends to the identity like 1/z") {
    const auto& m = model();
    const cplx e = std::polar(1.0, 0.3);
    double lo = 1e300, hi = 0.0;
    for (double R : {10.0, 100.0, 1000.0}) {
        const Mat2 d = m.model_X(R * e, 0.5) - Mat2::Identity();
        const double c = R * d.cwiseAbs().maxCoeff();
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    CHECK(hi < 2.0 * lo);
    CHECK_THROWS_AS(m.phi_root(cplx(0.0, 0.5)), DomainError);
}

TEST_CASE("step-like profile: theta and dn forms") {
    const auto& m = model();
    const double a1 = 0.5, a2 = 1.5;
    for (double x = -50.0; x <= 0.0; x += 0.25) CHECK(std::abs(m.psi0_theta(x) - m.psi0_dn(x)) < 1e-10);
    const double P = m.period();
    CHECK(P == doctest::Approx(2.0 * m.params().K / (a1 + a2)).epsilon(1e-15));
    for (double x = -10.0; x <= 10.0; x += 0.37) {
        const double v = std::abs(m.psi0_dn(x));
        CHECK(v >= a2 - a1 - 1e-12);
        CHECK(v <= a2 + a1 + 1e-12);
        CHECK(std::abs(std::abs(m.psi0_dn(x + P)) - v) < 1e-12);
    }
    CHECK(std::abs(m.x0_fitted() - m.x0()) < 1e-8);
    double tmin = 1e300;
    for (double x = -100.0; x <= 100.0; x += 0.1) tmin = std::min(tmin, std::abs(m.theta().theta3(m.epsilon(x))));
    CHECK(tmin > 0.1);
}

TEST_CASE("plane-wave limit as alpha1 -> 0") {
    for (double a1 : {1e-2, 1e-3}) {
        const double a2 = 1.5;
        const auto d = EllipseDomain::make(a1, a2, 0.5 * a2);
        const EllipticModel m(d, SolitonDensity());
        double dev = 0.0;
        for (double x = -10.0; x <= 0.0; x += 0.1) dev = std::max(dev, std::abs(std::abs(m.psi0_dn(x)) - a2));
        CHECK(dev <= a1 + 1e-12);
    }
}

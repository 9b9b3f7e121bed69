#include <cmath>
#include <random>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <doctest.h>

#include "sgas/special_functions.hpp"

using namespace sgas;

namespace {

// Jacobi triple product, an independent route to theta3
cplx theta3_product(cplx z, cplx tau) {
    const cplx q = std::exp(I1 * kPi * tau);
    const cplx c = std::cos(2.0 * kPi * z);
    cplx p = 1.0, q2n = 1.0;
    for (int n = 1; n < 200; ++n) {
        const cplx q2n1 = q2n * q;  // q^{2n-1}
        q2n = q2n1 * q;
        p *= (1.0 - q2n) * (1.0 + 2.0 * q2n1 * c + q2n1 * q2n1);
    }
    return p;
}

}  // namespace

TEST_CASE("complete elliptic integrals at the endpoints") {
    CHECK(ellint_K(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(ellint_E(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(ellint_E(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::isinf(ellint_K(1.0)));
    CHECK_THROWS_AS(ellint_K(-0.1), DomainError);
}

TEST_CASE("K and E against Carlson-form reference values") {
    for (double m = 0.05; m < 1.0; m += 0.05) {
        const double k = std::sqrt(m);
        CHECK(std::abs(ellint_K(m) - boost::math::ellint_1(k)) < 1e-14 * ellint_K(m));
        CHECK(std::abs(ellint_E(m) - boost::math::ellint_2(k)) < 1e-14);
    }
}

TEST_CASE("Legendre relation") {
    for (double m = 0.1; m < 0.95; m += 0.1) {
        const double mp = 1.0 - m;
        const double lhs = ellint_E(m) * ellint_K(mp) + ellint_E(mp) * ellint_K(m) - ellint_K(m) * ellint_K(mp);
        CHECK(std::abs(lhs - kPi / 2) < 1e-13);
    }
}

TEST_CASE("dn special values and limits") {
    for (double m : {0.1, 0.5, 0.75, 0.99}) {
        CHECK(jacobi_dn(0.0, m) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(jacobi_dn(ellint_K(m), m) - std::sqrt(1.0 - m)) < 1e-13);
    }
    CHECK(jacobi_dn(0.7, 0.0) == 1.0);
    // m -> 1: dn -> sech
    const double m = 1.0 - 1e-6;
    for (double u = -3.0; u <= 3.0; u += 0.25) CHECK(std::abs(jacobi_dn(u, m) - 1.0 / std::cosh(u)) < 1e-4);
}

TEST_CASE("dn against an independent implementation") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> um(0.01, 0.99), uu(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double m = um(rng), u = uu(rng);
        CHECK(std::abs(jacobi_dn(u, m) - boost::math::jacobi_dn(std::sqrt(m), u)) < 1e-13);
    }
}

TEST_CASE("dn half-period product") {
    const double m = 0.75, K = ellint_K(m);
    for (double u = -2.0; u <= 2.0; u += 0.1)
        CHECK(std::abs(jacobi_dn(u + K, m) * jacobi_dn(u, m) - std::sqrt(1.0 - m)) < 1e-12);
}

TEST_CASE("theta3 symmetries and the zero") {
    const cplx tau(0.0, 0.7817009613480557);
    const ThetaModulus th(tau);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const cplx z(u(rng), 0.4 * u(rng));
        const cplx v = th.theta3(z);
        CHECK(std::abs(th.theta3(-z) - v) < 1e-13 * std::abs(v));
        CHECK(std::abs(th.theta3(z + 1.0) - v) < 1e-13 * std::abs(v));
        const cplx shifted = std::exp(-2.0 * I1 * kPi * z - I1 * kPi * tau) * v;
        CHECK(std::abs(th.theta3(z + tau) - shifted) < 1e-12 * std::abs(shifted));
    }
    CHECK(std::abs(th.theta3(0.5 * (1.0 + tau))) < 1e-12);
}

TEST_CASE("theta3 series against the triple product") {
    for (cplx tau : {cplx(0.0, 0.78), cplx(0.3, 1.2), cplx(-0.2, 0.5)}) {
        const ThetaModulus th(tau);
        for (cplx z : {cplx(0.1, 0.0), cplx(0.37, 0.2), cplx(-0.8, -0.3)}) {
            const cplx ref = theta3_product(z, tau);
            CHECK(std::abs(th.theta3(z) - ref) < 1e-13 * std::max(1.0, std::abs(ref)));
            CHECK(std::abs(theta3(z, tau) - ref) < 1e-13 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("theta modulus rejects the real axis") {
    CHECK_THROWS_AS(ThetaModulus(cplx(0.3, 0.0)), DomainError);
    CHECK_THROWS_AS(ThetaModulus(cplx(0.3, -1.0)), DomainError);
}

TEST_CASE("Gauss-Legendre is exact for polynomials of degree 2n-1") {
    for (int n : {1, 4, 13}) {
        const GaussRule g = gauss_legendre(n, -1.0, 2.0);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += g.w[i] * std::pow(g.x[i], k);
            const double exact = (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
            CHECK(s == doctest::Approx(exact).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), DomainError);
}

TEST_CASE("endpoint-singular quadrature") {
    const double a = 0.5, b = 1.5;
    const cplx one = integrate_sqrt_ends([](double, double) { return cplx(1.0); }, a, b);
    CHECK(std::abs(one - kPi) < 1e-13);
    const cplx lin = integrate_sqrt_ends([](double y, double) { return cplx(y); }, a, b);
    CHECK(std::abs(lin - kPi * (a + b) / 2) < 1e-13);
    // f receives q = sqrt((y-a)(b-y)); int q dy/q = b - a
    const cplx qq = integrate_sqrt_ends([](double, double q) { return cplx(q); }, a, b);
    CHECK(std::abs(qq - (b - a)) < 1e-13);
    // splitting changes nothing for a smooth integrand
    const cplx sp = integrate_sqrt_ends([](double y, double) { return cplx(std::exp(y)); }, a, b, 0.9, true);
    const cplx ns = integrate_sqrt_ends([](double y, double) { return cplx(std::exp(y)); }, a, b);
    CHECK(std::abs(sp - ns) < 1e-13);
    CHECK_THROWS_AS(integrate_sqrt_ends([](double, double) { return cplx(1.0); }, 1.0, 1.0), DomainError);
}

TEST_CASE("tanh-sinh on finite and half-infinite ranges") {
    CHECK(std::abs(integrate_ts([](double x) { return cplx(std::exp(x)); }, 0.0, 1.0) - (std::exp(1.0) - 1.0)) < 1e-14);
    CHECK(std::abs(integrate_half_line([](double x) { return cplx(std::exp(-x)); }) - 1.0) < 1e-13);
    CHECK(std::abs(integrate_half_line([](double x) { return cplx(1.0 / (1.0 + x * x)); }) - kPi / 2) < 1e-12);
    const cplx a(1.0, -1.0);
    CHECK(std::abs(integrate_half_line([&](double x) { return std::exp(-a * x); }) - 1.0 / a) < 1e-13);
}

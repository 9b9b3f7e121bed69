#include <cmath>
#include <limits>
#include <vector>

#include "sgas/special_functions.hpp"

namespace sgas {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_param(double m) {
    if (!(m >= 0.0 && m <= 1.0)) throw DomainError("elliptic parameter m must lie in [0, 1]");
}

}  // namespace

double ellint_K(double m) {
    check_param(m);
    if (m == 1.0) return std::numeric_limits<double>::infinity();
    double a = 1.0, g = std::sqrt(1.0 - m);
    // bounded: the iterates can settle one ulp apart
    for (int it = 0; it < 64 && std::abs(a - g) > 4.0 * kEps * a; ++it) {
        double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return kPi / (a + g);
}

// E = K (1 - sum 2^(n-1) c_n^2), c_0^2 = m
double ellint_E(double m) {
    check_param(m);
    if (m == 1.0) return 1.0;
    double a = 1.0, g = std::sqrt(1.0 - m);
    double c2 = m;
    double sum = 0.5 * c2;
    double pow2 = 0.5;
    for (int it = 0; it < 64; ++it) {
        double an = 0.5 * (a + g);
        double cn = 0.5 * (a - g);
        g = std::sqrt(a * g);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * cn * cn;
        // converged to rounding: further c_n are noise amplified by 2^n
        if (std::abs(cn) <= 4.0 * kEps * a) break;
    }
    return (kPi / (2.0 * a)) * (1.0 - sum);
}

double jacobi_dn(double u, double m) {
    check_param(m);
    if (m == 0.0) return 1.0;
    if (m == 1.0) return 1.0 / std::cosh(u);
    // descending Landen sequence
    std::vector<double> a{1.0}, c{std::sqrt(m)};
    double b = std::sqrt(1.0 - m);
    while (std::abs(c.back()) > 4.0 * kEps && a.size() < 40) {
        double an = 0.5 * (a.back() + b);
        double cn = 0.5 * (a.back() - b);
        b = std::sqrt(a.back() * b);
        a.push_back(an);
        c.push_back(cn);
    }
    const std::size_t n = a.size() - 1;
    double phi = std::ldexp(1.0, static_cast<int>(n)) * a[n] * u;
    for (std::size_t k = n; k >= 1; --k) phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
    // dn^2 = 1 - m sin^2 = cos^2 + m' sin^2: no cancellation, no 0/0 at the zeros of cn
    const double s = std::sin(phi), co = std::cos(phi);
    return std::sqrt(co * co + (1.0 - m) * s * s);
}

}  // namespace sgas

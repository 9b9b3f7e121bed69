#include <cmath>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gsl/gsl_integration.h>

#include "sgas/special_functions.hpp"

namespace sgas {

GaussRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
    if (!t) throw ConvergenceError("could not build Gauss-Legendre table");
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i)
        gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &r.x[i], &r.w[i], t);
    gsl_integration_glfixed_table_free(t);
    return r;
}

namespace {

boost::math::quadrature::tanh_sinh<double>& ts_engine() {
    static boost::math::quadrature::tanh_sinh<double> engine(15);
    return engine;
}

}  // namespace

cplx integrate_ts(const std::function<cplx(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    return ts_engine().integrate(f, a, b, tol);
}

cplx integrate_half_line(const std::function<cplx(double)>& f, double tol) {
    return ts_engine().integrate(f, 0.0, std::numeric_limits<double>::infinity(), tol);
}

cplx integrate_sqrt_ends(const std::function<cplx(double, double)>& f, double lo, double hi,
                         double split_y, bool split, double tol) {
    if (!(hi > lo)) throw DomainError("integrate_sqrt_ends needs lo < hi");
    const double d = hi - lo;
    // y = lo + d sin^2(s/2), q = (d/2) sin s, dy/q = ds
    auto piece = [&](double sa, double sb) -> cplx {
        auto g = [&](double s) -> cplx {
            const double s1 = kPi - s;
            const double a0 = std::sin(0.5 * s), a1 = std::sin(0.5 * s1);
            const double y = (s < s1) ? lo + d * a0 * a0 : hi - d * a1 * a1;
            const double q = d * a0 * a1;
            if (!(q > 0.0)) return 0.0;
            return f(y, q);
        };
        return ts_engine().integrate(g, sa, sb, tol);
    };
    if (!split || split_y <= lo || split_y >= hi) return piece(0.0, kPi);
    double ss = 2.0 * std::asin(std::sqrt((split_y - lo) / d));
    return piece(0.0, ss) + piece(ss, kPi);
}

}  // namespace sgas

#include <algorithm>
#include <cmath>

#include "sgas/elliptic_asymptotics.hpp"

namespace sgas {

namespace {

std::vector<double> interior(double lo, double hi, int n) {
    std::vector<double> y(n);
    for (int k = 0; k < n; ++k) y[k] = lo + (hi - lo) * (k + 0.5) / n;
    return y;
}

double max_abs(const Mat2& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

JumpResiduals jump_residuals(const EllipticModel& m, double x, int n) {
    const auto& p = m.params();
    const double a1 = p.alpha1, a2 = p.alpha2;
    JumpResiduals r;
    Mat2 J;
    J << 0.0, 1.0, -1.0, 0.0;
    const cplx e = std::exp(I1 * x * p.Omega + p.Delta);
    Mat2 D = Mat2::Zero();
    D(0, 0) = e;
    D(1, 1) = 1.0 / e;

    auto outer = [&](double y) {
        const cplx zl = on_axis(y, Side::Left), zr = on_axis(y, Side::Right);
        r.g = nan_max(r.g, std::abs(m.g(zl) + m.g(zr) + 2.0 * cplx(0.0, y)));
        const double half = y > 0 ? -0.5 : 0.5;
        r.u = nan_max(r.u, std::abs(m.abel_u(zl) + m.abel_u(zr) - half));
        r.X = nan_max(r.X, max_abs(m.model_X(zl, x) - m.model_X(zr, x) * J));
    };
    for (double y : interior(a1, a2, n)) {
        outer(y);
        // f_- f_+ = 1/r with r = delta S_+ beta^2
        const double q = std::sqrt((y - a1) * (a2 - y));
        const cplx rr = std::exp(m.log_r(y, q));
        const cplx fl = m.f_boundary(y, Side::Left), fr = m.f_boundary(y, Side::Right);
        r.f = nan_max(r.f, std::abs(fl * fr * rr - 1.0));
    }
    for (double y : interior(-a2, -a1, n)) {
        outer(y);
        // f_- f_+ = r*(z) = conj r(conj z)
        const double yy = -y;
        const double q = std::sqrt((yy - a1) * (a2 - yy));
        const cplx rs = std::conj(std::exp(m.log_r(yy, q)));
        const cplx fl = m.f_boundary(y, Side::Left), fr = m.f_boundary(y, Side::Right);
        r.f = nan_max(r.f, std::abs(fl * fr / rs - 1.0));
    }
    for (double y : interior(-a1, a1, n)) {
        const cplx zl = on_axis(y, Side::Left), zr = on_axis(y, Side::Right);
        r.g = nan_max(r.g, std::abs(m.g(zl) - m.g(zr) - p.Omega));
        r.u = nan_max(r.u, std::abs(m.abel_u(zl) - m.abel_u(zr) - p.tau));
        r.X = nan_max(r.X, max_abs(m.model_X(zl, x) - m.model_X(zr, x) * D));
        const cplx fl = m.f_boundary(y, Side::Left), fr = m.f_boundary(y, Side::Right);
        r.f = nan_max(r.f, std::abs(fl / (fr * std::exp(p.Delta)) - 1.0));
    }
    return r;
}

double sign_lemma_min(const EllipticModel& m, int n_re, int n_im) {
    const double a2 = m.params().alpha2;
    double lo = 1e300;
    for (int i = 0; i < n_re; ++i) {
        const double re = -2.0 * a2 + 4.0 * a2 * (i + 0.5) / n_re;
        for (int k = 0; k < n_im; ++k) {
            const double im = 2.0 * a2 * (k + 0.5) / n_im;
            const cplx z(re, im);
            lo = nan_min(lo, (m.g(z) + z).imag());
        }
    }
    return lo;
}

}  // namespace sgas

#include <algorithm>
#include <cmath>

#include "sgas/domain_geometry.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

EllipseDomain EllipseDomain::make(double alpha1, double alpha2, double rho) {
    if (!(alpha1 > 0.0 && alpha2 > alpha1))
        throw DomainError("ellipse foci need alpha2 > alpha1 > 0");
    const double c = 0.5 * (alpha2 - alpha1);
    const double y0 = 0.5 * (alpha1 + alpha2);
    if (!(rho > c)) throw DomainError("ellipse needs rho > (alpha2 - alpha1)/2");
    if (!(y0 - rho > 0.0)) throw DomainError("ellipse must lie strictly in the upper half-plane");
    return EllipseDomain(alpha1, alpha2, rho);
}

double EllipseDomain::semi_minor() const {
    const double cc = c();
    return std::sqrt(rho_ * rho_ - cc * cc);
}

double EllipseDomain::area() const { return kPi * rho_ * semi_minor(); }

double EllipseDomain::max_abs_im_sq() const {
    // Im w^2 is harmonic, so the maximum sits on the boundary
    const int n = 4096;
    double best = 0.0;
    for (int k = 0; k < n; ++k) {
        cplx w = map(1.0, 2.0 * kPi * k / n);
        best = std::max(best, std::abs((w * w).imag()));
    }
    return best * (1.0 + 1e-6);
}

bool EllipseDomain::contains(cplx z) const {
    return std::abs(z - cplx(0, a1_)) + std::abs(z - cplx(0, a2_)) < 2.0 * rho_;
}

cplx EllipseDomain::map(double r, double phi) const {
    return {semi_minor() * r * std::cos(phi), y0() + rho_ * r * std::sin(phi)};
}

bool contains(const EllipseDomain& d, cplx z) { return d.contains(z); }
double area(const EllipseDomain& d) { return d.area(); }

SolitonDensity::SolitonDensity(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

cplx SolitonDensity::operator()(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx SolitonDensity::conj_eval(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + std::conj(*it);
    return acc;
}

cplx SolitonDensity::derivative(cplx z) const {
    cplx acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
}

bool SolitonDensity::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx a) { return a == 0.0; });
}

QuadratureRule2D quadrature_2d(const EllipseDomain& d, int n_r, int n_phi) {
    if (n_r < 1 || n_phi < 1) throw DomainError("quadrature orders must be positive");
    const GaussRule gr = gauss_legendre(n_r, 0.0, 1.0);
    const double jac = d.semi_minor() * d.rho();
    QuadratureRule2D q;
    q.n_r = n_r;
    q.n_phi = n_phi;
    q.nodes.reserve(static_cast<std::size_t>(n_r) * n_phi);
    q.weights.reserve(q.nodes.capacity());
    for (int i = 0; i < n_r; ++i) {
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * kPi * (j + 0.5) / n_phi;
            q.nodes.push_back(d.map(gr.x[i], phi));
            q.weights.push_back(gr.w[i] * gr.x[i] * (2.0 * kPi / n_phi) * jac);
        }
    }
    return q;
}

namespace {

// sq_up(w) = e^{-i pi/4} sqrt(i w): cut along i[0, inf), ~ sqrt(w) for w > 0
cplx sq_up(cplx w) { return std::polar(1.0, -kPi / 4) * std::sqrt(cplx(-w.imag(), w.real())); }

}  // namespace

cplx schwarz_delta(const EllipseDomain& d, double y, Side side) {
    const double a1 = d.alpha1(), a2 = d.alpha2();
    if (!(y >= a1 && y <= a2)) throw DomainError("schwarz_delta: y outside [alpha1, alpha2]");
    const double c = d.c();
    const double pref = 4.0 * d.rho() * d.semi_minor() / (c * c);
    if (y == a1 || y == a2) return 0.0;
    const cplx z = on_axis(y, side);
    return pref * sq_up(z - cplx(0, a1)) * sq_up(z - cplx(0, a2));
}

cplx cut_function_r(const EllipseDomain& d, const SolitonDensity& beta, double y, Side side) {
    const cplx b = beta(cplx(0, y));
    return schwarz_delta(d, y, side) * b * b;
}

}  // namespace sgas

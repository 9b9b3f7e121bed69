#include <algorithm>
#include <cmath>
#include <limits>

#include "sgas/nsoliton.hpp"

namespace sgas {

// A(w) = sum_l c_l e^{2 theta(w)} / (2 pi i (w - z_l)),
// v_k(w) = conj(sqrt c_k) e^{-theta(conj z_k)} / (conj z_k - w).
// The contour encloses every z_l and none of their conjugates, so the integral
// of v_j A v_k collects the residues at z_l only.
double gram_residue_check(const SpectralData& s, double x, double t, double contour_radius, int nodes) {
    s.validate();
    if (nodes < 8) throw DomainError("gram_residue_check: too few contour nodes");
    const auto n = static_cast<Eigen::Index>(s.size());
    cplx center = 0.0;
    for (cplx z : s.z) center += z;
    center /= static_cast<double>(n);
    double inner = 0.0, outer = std::numeric_limits<double>::infinity();
    for (cplx z : s.z) {
        inner = std::max(inner, std::abs(z - center));
        outer = std::min(outer, std::abs(std::conj(z) - center));
    }
    if (!(contour_radius > inner)) throw DomainError("gram_residue_check: contour misses a pole z_j");
    if (!(contour_radius < outer)) throw DomainError("gram_residue_check: contour encloses a conjugate pole");

    const PhiMatrix P = phi_matrix(s, x, t);
    Eigen::MatrixXcd target = P.phi.conjugate() * P.phi;

    std::vector<cplx> vpref(n);
    for (Eigen::Index k = 0; k < n; ++k)
        vpref[k] = std::conj(std::sqrt(s.c[k])) * std::exp(-theta_phase(std::conj(s.z[k]), x, t));

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXcd v(n);
    for (int m = 0; m < nodes; ++m) {
        const cplx e = std::polar(1.0, 2.0 * kPi * m / nodes);
        const cplx w = center + contour_radius * e;
        const cplx dw = I1 * contour_radius * e * (2.0 * kPi / nodes);
        cplx A = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) A += s.c[l] / (w - s.z[l]);
        A *= std::exp(2.0 * theta_phase(w, x, t)) / (2.0 * kPi * I1);
        for (Eigen::Index k = 0; k < n; ++k) v[k] = vpref[k] / (std::conj(s.z[k]) - w);
        acc.noalias() += (A * dw) * (v * v.transpose());
    }
    return (acc + target).cwiseAbs().maxCoeff();
}

}  // namespace sgas

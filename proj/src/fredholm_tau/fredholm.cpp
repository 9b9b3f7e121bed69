#include <algorithm>
#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "sgas/fredholm_tau.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

std::string to_string(TauMethod m) {
    switch (m) {
        case TauMethod::HankelHalfline: return "hankel_halfline";
        case TauMethod::Block2D: return "block_2d";
        case TauMethod::NSoliton: return "nsoliton_N";
    }
    return "unknown";
}

TauMethod parse_tau_method(const std::string& s) {
    if (s == "hankel_halfline" || s == "hankel") return TauMethod::HankelHalfline;
    if (s == "block_2d" || s == "2d") return TauMethod::Block2D;
    if (s == "nsoliton_N" || s == "nsoliton") return TauMethod::NSoliton;
    throw DomainError("unknown tau method '" + s + "'");
}

HankelSymbol::HankelSymbol(const EllipseDomain& d, const SolitonDensity& beta, double t,
                           const QuadratureRule2D& quad)
    : nodes_(quad.nodes), amp_(quad.size()), area_(d.area()), beta_max_sq_(0.0), min_im_(d.min_im()),
      t_(t), max_im_sq_(d.max_abs_im_sq()) {
    for (std::size_t k = 0; k < quad.size(); ++k) {
        const cplx w = quad.nodes[k];
        const cplx b = beta(w);
        amp_[k] = quad.weights[k] * b * b * std::exp(2.0 * I1 * w * w * t) / kPi;
    }
    // sup of |beta| over the closed ellipse, sampled on the boundary (maximum principle)
    for (int k = 0; k < 2048; ++k)
        beta_max_sq_ = std::max(beta_max_sq_, std::norm(beta(d.map(1.0, 2.0 * kPi * k / 2048))));
}

cplx HankelSymbol::operator()(double s) const {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) acc += amp_[k] * std::exp(I1 * nodes_[k] * s);
    return acc;
}

double HankelSymbol::bound(double s) const {
    return area_ / kPi * beta_max_sq_ * std::exp(-s * min_im_) * std::exp(2.0 * std::abs(t_) * max_im_sq_);
}

cplx hankel_symbol(double s, double t, const EllipseDomain& d, const SolitonDensity& beta,
                   const QuadratureRule2D& quad) {
    return HankelSymbol(d, beta, t, quad)(s);
}

TauEvaluation log_tau_hankel(const EllipseDomain& d, const SolitonDensity& beta, double x, double t, int n,
                             const QuadratureRule2D& quad, double L, double budget) {
    if (n < 8) throw DomainError("log_tau_hankel needs n >= 8");
    TauEvaluation ev;
    ev.x = x;
    ev.t = t;
    ev.method = TauMethod::HankelHalfline;
    ev.n_nodes = n;
    ev.order_a = n;
    if (beta.is_zero()) return ev;
    const double demand = 2.0 * std::max(-x, 0.0) * d.max_im() + 2.0 * std::abs(t) * d.max_abs_im_sq();
    check_budget(demand, budget, "log_tau_hankel");
    if (L <= 0.0) L = 1.0 / d.min_im();

    const GaussRule g = gauss_legendre(n, -1.0, 1.0);
    const auto m = static_cast<Eigen::Index>(quad.size());
    Eigen::MatrixXcd E(n, m);
    Eigen::VectorXcd D(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const cplx w = quad.nodes[k];
        const cplx b = beta(w);
        D[k] = quad.weights[k] * b * b * std::exp(2.0 * I1 * w * w * t) / kPi;
    }
    for (int i = 0; i < n; ++i) {
        const double v = g.x[i];
        const double s = x + L * (1.0 + v) / (1.0 - v);
        const double ws = g.w[i] * 2.0 * L / ((1.0 - v) * (1.0 - v));
        const double r = std::sqrt(ws);
        for (Eigen::Index k = 0; k < m; ++k) E(i, k) = r * std::exp(I1 * quad.nodes[k] * s);
    }
    // symmetric Nystrom matrix of the Hankel operator; tau = prod(1 + sigma^2)
    Eigen::MatrixXcd B = E * D.asDiagonal() * E.transpose();
    Eigen::VectorXd sv = B.bdcSvd().singularValues();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::log1p(sv[i] * sv[i]);
    if (!std::isfinite(acc)) throw ConvergenceError("log_tau_hankel: non-finite determinant");
    ev.log_tau = acc;
    ev.diagnostic = sv.size() ? sv[0] : 0.0;
    return ev;
}

namespace {
constexpr double kBlockLuSpread = 8.0;
}

TauEvaluation log_tau_2d(const EllipseDomain& d, const SolitonDensity& beta, double x, double t,
                         const QuadratureRule2D& quad, double budget) {
    TauEvaluation ev;
    ev.x = x;
    ev.t = t;
    ev.method = TauMethod::Block2D;
    ev.n_nodes = static_cast<int>(quad.size());
    ev.order_a = quad.n_r;
    ev.order_b = quad.n_phi;
    if (beta.is_zero()) return ev;
    const double demand = 2.0 * std::abs(x) * d.max_im() + 2.0 * std::abs(t) * d.max_abs_im_sq();
    check_budget(demand, budget, "log_tau_2d");

    const auto n = static_cast<Eigen::Index>(quad.size());
    std::vector<cplx> w(n), wb(n), bw(n), bsw(n), th(n), thb(n);
    std::vector<double> sw(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        w[k] = quad.nodes[k];
        wb[k] = std::conj(w[k]);
        bw[k] = beta(w[k]);
        bsw[k] = beta.conj_eval(wb[k]);
        th[k] = theta_phase(w[k], x, t);
        thb[k] = theta_phase(wb[k], x, t);
        sw[k] = std::sqrt(quad.weights[k]);
    }
    // P = C C^H with column scales e^{Re theta(w_k)}. Once these spread over
    // many orders the identity in I + Pb P drowns in rounding; the same Nystrom
    // matrix is then evaluated through the pole-flipped residue system, which
    // equals det(I + Pb P) exactly in exact arithmetic.
    double spread = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) spread = std::max(spread, 2.0 * th[k].real());
    if (spread > kBlockLuSpread) {
        SpectralData s;
        for (Eigen::Index k = 0; k < n; ++k) {
            s.z.push_back(w[k]);
            s.c.push_back(quad.weights[k] * bw[k] * bw[k] / kPi);
        }
        const NSolitonSolve r = solve_nsoliton(s, x, t, budget);
        ev.log_tau = r.log_tau;
        ev.diagnostic = r.flips;
        return ev;
    }
    // P: L^2(D) -> L^2(conj D), Pbar: L^2(conj D) -> L^2(D)
    Eigen::MatrixXcd P(n, n), Pb(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double ww = sw[j] * sw[k] / kPi;
            P(j, k) = I1 * bsw[j] * bw[k] * std::exp(-thb[j] + th[k]) / (w[k] - wb[j]) * ww;
            Pb(j, k) = -I1 * bw[j] * bsw[k] * std::exp(th[j] - thb[k]) / (wb[k] - w[j]) * ww;
        }
    // det[[I, iPb], [iP, I]] = det(I + Pb P)
    Eigen::MatrixXcd M = Pb * P;
    M.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    const Eigen::MatrixXcd& LU = lu.matrixLU();
    double acc = 0.0, phase = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        acc += std::log(std::abs(LU(i, i)));
        phase += std::arg(LU(i, i));
    }
    if (lu.permutationP().determinant() < 0) phase += kPi;
    if (!std::isfinite(acc)) throw ConvergenceError("log_tau_2d: non-finite determinant");
    ev.log_tau = acc;
    ev.diagnostic = std::remainder(phase, 2.0 * kPi);
    return ev;
}

double abs_psi_sq(const std::function<double(double)>& log_tau_at, double x, double h) {
    if (!(h > 0.0)) throw DomainError("abs_psi_sq needs h > 0");
    return (log_tau_at(x - h) - 2.0 * log_tau_at(x) + log_tau_at(x + h)) / (h * h);
}

}  // namespace sgas

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "sgas/nsoliton.hpp"

namespace sgas {

double exponent_demand(const SpectralData& s, double x, double t) {
    double demand = 0.0;
    for (cplx z : s.z)
        demand = std::max(demand, 2.0 * std::abs(x) * z.imag() + 2.0 * std::abs(t) * std::abs((z * z).imag()));
    return demand;
}

void check_budget(double demand, double budget, const char* who) {
    if (demand > budget)
        throw BudgetError(std::string(who) + ": exponent " + std::to_string(demand) +
                          " exceeds budget " + std::to_string(budget));
}

PhiMatrix phi_matrix(const SpectralData& s, double x, double t, double budget, bool negate_roots) {
    s.validate();
    check_budget(exponent_demand(s, x, t), budget, "phi_matrix");
    const auto n = static_cast<Eigen::Index>(s.size());
    std::vector<cplx> root(n), th(n), thb(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        root[j] = std::sqrt(s.c[j]) * (negate_roots ? -1.0 : 1.0);
        th[j] = theta_phase(s.z[j], x, t);
        thb[j] = theta_phase(std::conj(s.z[j]), x, t);
    }
    PhiMatrix P;
    P.x = x;
    P.t = t;
    P.phi.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < n; ++j)
            P.phi(j, k) = root[j] * std::conj(root[k]) * std::exp(th[j] - thb[k]) /
                          (I1 * (s.z[j] - std::conj(s.z[k])));
    return P;
}

namespace {

double log_tau_direct(const SpectralData& s, double x, double t, double budget) {
    if (s.empty()) return 0.0;
    const PhiMatrix P = phi_matrix(s, x, t, budget);
    const auto n = P.phi.rows();
    if (n <= 512) {
        // -Phi = U diag(l) U^H, C = U sqrt(l), tau = prod (1 + sigma(C^T C)^2)
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(-P.phi);
        if (es.info() != Eigen::Success) throw ConvergenceError("log_tau_n: eigensolver failed");
        Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        Eigen::MatrixXcd C = es.eigenvectors() * lam.asDiagonal();
        Eigen::MatrixXcd S = C.transpose() * C;
        Eigen::VectorXd sv = S.jacobiSvd().singularValues();
        double acc = 0.0;
        for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::log1p(sv[i] * sv[i]);
        return acc;
    }
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(n, n) + P.phi * P.phi.conjugate();
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    const Eigen::MatrixXcd& LU = lu.matrixLU();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc += std::log(std::abs(LU(i, i)));
    if (!std::isfinite(acc)) throw ConvergenceError("log_tau_n: non-finite determinant");
    return acc;
}

}  // namespace

NSolitonSolve solve_nsoliton(const SpectralData& s, double x, double t, double budget, int max_flips) {
    NSolitonSolve out;
    if (s.empty()) {
        out.psi = 0.0;
        return out;
    }
    s.validate();
    check_budget(exponent_demand(s, x, t), budget, "solve_nsoliton");
    const auto n = static_cast<Eigen::Index>(s.size());
    const std::vector<cplx>& z = s.z;

    Eigen::VectorXcd base(n), self(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        base[j] = std::log(s.c[j]) + 2.0 * theta_phase(z[j], x, t);
        self[j] = 2.0 * std::log(z[j] - std::conj(z[j]));
    }
    // L_jk = log((z_j - z_k)/(z_j - conj z_k)), the Blaschke factor of pole k seen at z_j
    Eigen::MatrixXcd L(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < n; ++j)
            L(j, k) = (j == k) ? cplx(0.0) : std::log((z[j] - z[k]) / (z[j] - std::conj(z[k])));

    std::vector<char> flipped(n, 0);
    Eigen::VectorXcd pot = base;
    const int cap = max_flips < 0 ? static_cast<int>(10 * n + 10) : max_flips;
    int it = 0;
    for (; it < cap; ++it) {
        // log of |weight| / (2 Im z): the size of the residue relative to its conjugate distance
        Eigen::Index best = -1;
        double best_val = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            double v = pot[j].real() - std::log(2.0 * z[j].imag());
            if (flipped[j]) v = -v;
            if (v > best_val) {
                best_val = v;
                best = j;
            }
        }
        if (best < 0) break;
        flipped[best] = !flipped[best];
        pot += (flipped[best] ? 2.0 : -2.0) * L.col(best);
    }
    out.iterations = it;

    Eigen::VectorXcd P1(n), P2(n), W1(n), W2(n);
    double correction = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (flipped[j]) {
            ++out.flips;
            const cplx W = std::exp(-pot[j] + self[j]);
            P1[j] = std::conj(z[j]);
            W1[j] = -std::conj(W);
            correction += (pot[j] + base[j] - self[j]).real();
        } else {
            P1[j] = z[j];
            W1[j] = std::exp(pot[j]);
        }
        P2[j] = std::conj(P1[j]);
        W2[j] = -std::conj(W1[j]);
    }
    Eigen::MatrixXcd K12(n, n), K21(n, n);
    for (Eigen::Index q = 0; q < n; ++q)
        for (Eigen::Index p = 0; p < n; ++p) {
            K12(p, q) = W2[q] / (P1[p] - P2[q]);
            K21(p, q) = W1[q] / (P2[p] - P1[q]);
        }
    Eigen::MatrixXcd M = -K21 * K12;
    M.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    const Eigen::MatrixXcd& LU = lu.matrixLU();
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) logdet += std::log(std::abs(LU(i, i)));
    if (!std::isfinite(logdet)) throw ConvergenceError("solve_nsoliton: singular residue system");
    Eigen::VectorXcd y = lu.solve(Eigen::VectorXcd::Ones(n));
    out.psi = 2.0 * I1 * (W2.array() * y.array()).sum();
    out.log_tau = logdet + correction;
    if (!std::isfinite(out.log_tau) || !std::isfinite(std::abs(out.psi)))
        throw ConvergenceError("solve_nsoliton: non-finite result");
    return out;
}

cplx psi_n(const SpectralData& s, double x, double t, double budget) {
    return solve_nsoliton(s, x, t, budget).psi;
}

double log_tau_n(const SpectralData& s, double x, double t, TauNMethod method, double budget) {
    if (method == TauNMethod::Direct) return log_tau_direct(s, x, t, budget);
    return solve_nsoliton(s, x, t, budget).log_tau;
}

}  // namespace sgas

#include <algorithm>
#include <cmath>
#include <random>

#include "sgas/elliptic_asymptotics.hpp"
#include "sgas/harness.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

namespace {

CheckResult below(std::string name, double value, double tol, std::string detail = {}) {
    return {std::move(name), value < tol, value, tol, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_verify(const RunConfig& c) {
    c.validate();
    const EllipseDomain d = c.domain();
    const SolitonDensity beta = c.density();
    std::vector<CheckResult> out;

    // log tau >= 0, coarse orders
    {
        const QuadratureRule2D q = quadrature_2d(d, 12, 24);
        const SpectralData s = condense_2d(d, beta, 64);
        double lo = 1e300;
        for (double t : {0.0, 0.5})
            for (double x : {-6.0, -2.0, 0.0, 2.0, 6.0}) {
                lo = nan_min(lo, log_tau_hankel(d, beta, x, t, 64, q, 0.0, c.budget).log_tau);
                lo = nan_min(lo, log_tau_2d(d, beta, x, t, q, c.budget).log_tau);
                lo = nan_min(lo, log_tau_n(s, x, t, TauNMethod::Stabilized, c.budget));
            }
        out.push_back({"tau_positive", lo >= 0.0, lo, 0.0, "min log tau over 3 methods"});
    }
    // half-line and 2-D representations agree
    {
        const QuadratureRule2D q = quadrature_2d(d, c.n_r, c.n_phi);
        const double h = log_tau_hankel(d, beta, 0.0, 0.0, c.hankel_n, q, c.hankel_L, c.budget).log_tau;
        const double b = log_tau_2d(d, beta, 0.0, 0.0, q, c.budget).log_tau;
        out.push_back(below("hankel_vs_2d", std::abs(h - b), 1e-6));
    }
    // stabilized vs direct N-soliton tau
    {
        const SpectralData s = condense_2d(d, beta, 64);
        double worst = 0.0;
        for (double x : {-3.0, 0.0, 3.0})
            worst = nan_max(worst, std::abs(log_tau_n(s, x, 0.5, TauNMethod::Stabilized, c.budget) -
                                             log_tau_n(s, x, 0.5, TauNMethod::Direct, c.budget)));
        out.push_back(below("nsoliton_routes", worst, 1e-8));
    }
    // one-soliton closed form
    {
        const cplx z(0.3, 0.7), cc(1.1, -0.4);
        const SpectralData s{{z}, {cc}};
        const double a = z.real(), b = z.imag();
        const double x0 = std::log(std::abs(cc) / (2.0 * b)) / (2.0 * b);
        const cplx ph0 = -I1 * std::conj(cc) / std::abs(cc);
        double worst = 0.0;
        for (double t : {0.0, 0.5, 1.0})
            for (double x = -5.0; x <= 5.0; x += 0.5) {
                const cplx ref = 2.0 * b / std::cosh(2.0 * b * (x + 2.0 * a * t - x0)) *
                                 std::exp(-2.0 * I1 * (a * x + (a * a - b * b) * t)) * ph0;
                worst = nan_max(worst, std::abs(psi_n(s, x, t) - ref));
            }
        out.push_back(below("one_soliton", worst, 1e-10));
    }
    // Gram identity, random data
    {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> re(-0.3, 0.3), im(0.8, 1.2), mag(0.5, 2.0), ang(0.0, 2.0 * kPi);
        SpectralData s;
        for (int k = 0; k < 4; ++k) {
            s.z.emplace_back(re(rng), im(rng));
            s.c.push_back(std::polar(mag(rng), ang(rng)));
        }
        out.push_back(below("gram_identity", gram_residue_check(s, 0.3, 0.1, 0.8), 1e-6));
    }
    // elliptic side
    const EllipticModel m(d, beta);
    {
        const JumpResiduals j = jump_residuals(m, 0.7, 5);
        out.push_back(below("jump_g", j.g, 1e-7));
        out.push_back(below("jump_u", j.u, 1e-7));
        out.push_back(below("jump_f", j.f, 1e-7));
        out.push_back(below("jump_X", j.X, 1e-7));
        const double sl = sign_lemma_min(m, 10, 5);
        out.push_back({"sign_lemma", sl > 0.0, sl, 0.0, "min Im(g + z)"});
    }
    {
        double worst = 0.0;
        for (double x = -50.0; x <= 0.0; x += 0.5) worst = nan_max(worst, std::abs(m.psi0_theta(x) - m.psi0_dn(x)));
        out.push_back(below("theta_vs_dn", worst, 1e-10));
    }
    {
        const auto& p = m.params();
        const double E = ellint_E(p.m), Ep = ellint_E(p.m_prime);
        const double leg = std::abs(E * p.K_prime + Ep * p.K - p.K * p.K_prime - kPi / 2);
        out.push_back(below("legendre_relation", leg, 1e-13));
        double qp = 0.0, dn = 0.0;
        const ThetaModulus& th = m.theta();
        for (double v : {0.1, 0.37, -0.8}) {
            const cplx zz(v, 0.2 * v);
            const cplx lhs = th.theta3(zz + p.tau);
            const cplx rhs = std::exp(-I1 * kPi * p.tau - 2.0 * kPi * I1 * zz) * th.theta3(zz);
            qp = nan_max(qp, std::abs(lhs - rhs) / std::abs(rhs));
            dn = nan_max(dn, std::abs(jacobi_dn(v + p.K, p.m) * jacobi_dn(v, p.m) - std::sqrt(1.0 - p.m)));
        }
        out.push_back(below("theta_quasi_periodicity", qp, 1e-12));
        out.push_back(below("dn_half_period", dn, 1e-12));
    }
    return out;
}

}  // namespace sgas

// Seeded randomized invariants across modules.
#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include "sgas/domain_geometry.hpp"
#include "sgas/nsoliton.hpp"
#include "sgas/special_functions.hpp"

using namespace sgas;

namespace {

constexpr int kTrials = 40;

SpectralData make_random_data(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> re(-1.5, 1.5), im(0.1, 2.0), mag(1e-3, 5.0), ang(0.0, 2.0 * kPi);
    SpectralData s;
    for (int k = 0; k < n; ++k) {
        s.z.emplace_back(re(rng), im(rng));
        s.c.push_back(std::polar(mag(rng), ang(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("random Phi is Hermitian and negative semidefinite") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_int_distribution<int> un(1, 24);
    for (int trial = 0; trial < kTrials; ++trial) {
        const SpectralData s = make_random_data(rng, un(rng));
        const PhiMatrix P = phi_matrix(s, ux(rng), ux(rng));
        const double scale = P.phi.cwiseAbs().maxCoeff();
        CHECK((P.phi - P.phi.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale);
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(P.phi).eigenvalues();
        CHECK(ev.maxCoeff() <= 1e-10 * scale);
    }
}

TEST_CASE("random log tau is nonnegative and route independent") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_int_distribution<int> un(1, 16);
    for (int trial = 0; trial < kTrials; ++trial) {
        const SpectralData s = make_random_data(rng, un(rng));
        const double x = ux(rng), t = 0.3 * ux(rng);
        const double a = log_tau_n(s, x, t);
        const double b = log_tau_n(s, x, t, TauNMethod::Direct);
        CHECK(a >= 0.0);
        CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, a));
    }
}

TEST_CASE("log tau is invariant under relabelling the solitons") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        SpectralData s = make_random_data(rng, 8);
        const double a = log_tau_n(s, 0.2, 0.1);
        std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7};
        std::shuffle(perm.begin(), perm.end(), rng);
        SpectralData p;
        for (int k : perm) {
            p.z.push_back(s.z[k]);
            p.c.push_back(s.c[k]);
        }
        CHECK(std::abs(log_tau_n(p, 0.2, 0.1) - a) <= 1e-10 * std::max(1.0, a));
    }
}

TEST_CASE("theta3 quasi-periodicity for random moduli") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> ure(-0.5, 0.5), uim(0.3, 2.0), uz(-1.0, 1.0);
    for (int trial = 0; trial < kTrials; ++trial) {
        const cplx tau(ure(rng), uim(rng));
        const ThetaModulus th(tau);
        const cplx z(uz(rng), 0.3 * uz(rng));
        const cplx v = th.theta3(z);
        const cplx shifted = std::exp(-2.0 * I1 * kPi * z - I1 * kPi * tau) * v;
        CHECK(std::abs(th.theta3(z + 1.0) - v) <= 1e-12 * std::max(1.0, std::abs(v)));
        CHECK(std::abs(th.theta3(z + tau) - shifted) <= 1e-12 * std::max(1.0, std::abs(shifted)));
    }
}

TEST_CASE("dn stays in [sqrt(1-m), 1]") {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> um(0.0, 0.999), uu(-50.0, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double m = um(rng), v = jacobi_dn(uu(rng), m);
        CHECK(v >= std::sqrt(1.0 - m) - 1e-14);
        CHECK(v <= 1.0 + 1e-14);
    }
}

TEST_CASE("sampler stays inside random ellipses") {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> ua(0.1, 2.0), ur(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double a1 = ua(rng), a2 = a1 + ua(rng);
        const double c = 0.5 * (a2 - a1), y0 = 0.5 * (a1 + a2);
        const double rho = c + (y0 - c) * (0.05 + 0.9 * ur(rng));
        const auto d = EllipseDomain::make(a1, a2, rho);
        for (cplx z : sample_uniform(d, 200)) CHECK(d.contains(z));
        const auto q = quadrature_2d(d, 6, 12);
        double s = 0.0;
        for (double w : q.weights) s += w;
        CHECK(std::abs(s - d.area()) <= 1e-12 * d.area());
    }
}

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "sgas/domain_geometry.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

namespace {

// Ring counts proportional to Gauss-Legendre weights (largest remainder),
// then ring positions u_i = r_i^2 solving sum_i (n_i/N) u_i^k = 1/(k+1), k = 1..n_u.
struct Rings {
    std::vector<double> u;
    std::vector<int> count;
};

Rings moment_rings(int N, int nu) {
    const GaussRule g = gauss_legendre(nu, 0.0, 1.0);
    Rings R;
    R.u = g.x;
    R.count.assign(nu, 0);
    std::vector<double> frac(nu);
    int used = 0;
    for (int i = 0; i < nu; ++i) {
        const double share = g.w[i] * N;
        R.count[i] = static_cast<int>(std::floor(share));
        frac[i] = share - R.count[i];
        used += R.count[i];
    }
    std::vector<int> order(nu);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frac[a] > frac[b]; });
    for (int k = 0; k < N - used; ++k) ++R.count[order[k]];

    Eigen::VectorXd u = Eigen::Map<Eigen::VectorXd>(R.u.data(), nu);
    Eigen::VectorXd wt(nu);
    for (int i = 0; i < nu; ++i) wt[i] = static_cast<double>(R.count[i]) / N;
    for (int it = 0; it < 60; ++it) {
        Eigen::VectorXd F(nu);
        Eigen::MatrixXd J(nu, nu);
        for (int k = 1; k <= nu; ++k) {
            F[k - 1] = -1.0 / (k + 1);
            for (int i = 0; i < nu; ++i) {
                F[k - 1] += wt[i] * std::pow(u[i], k);
                J(k - 1, i) = wt[i] * k * std::pow(u[i], k - 1);
            }
        }
        Eigen::VectorXd du = J.partialPivLu().solve(F);
        u -= du;
        if (du.cwiseAbs().maxCoeff() < 1e-15) break;
    }
    for (int i = 0; i < nu; ++i) {
        if (!(u[i] > 0.0 && u[i] < 1.0))
            throw ConvergenceError("ring moment matching left the unit disk");
        R.u[i] = u[i];
    }
    return R;
}

}  // namespace

std::vector<cplx> sample_uniform(const EllipseDomain& d, int N) {
    if (N < 1) throw DomainError("sample_uniform needs N >= 1");
    if (N == 1) return {cplx(0.0, d.y0())};
    const int nu = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(N)) / 4.0)));
    const Rings R = moment_rings(N, nu);
    std::vector<cplx> pts;
    pts.reserve(N);
    for (int i = 0; i < nu; ++i) {
        const double r = std::sqrt(R.u[i]);
        const double off = 0.5 * (i % 2);
        for (int j = 0; j < R.count[i]; ++j)
            pts.push_back(d.map(r, 2.0 * kPi * (j + off) / R.count[i]));
    }
    return pts;
}

}  // namespace sgas

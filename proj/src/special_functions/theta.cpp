#include <cmath>

#include "sgas/special_functions.hpp"

namespace sgas {

ThetaModulus::ThetaModulus(cplx tau, double tol) : tau_(tau), tol_(tol) {
    if (!(tau.imag() > 0.0)) throw DomainError("theta modulus needs Im tau > 0");
    q_ = std::exp(I1 * kPi * tau);
    nterms_ = terms_for(0.0);
}

// log of the n-th term magnitude: -pi n^2 Im tau + 2 pi n |Im z|
int ThetaModulus::terms_for(double y) const {
    const double s = kPi * tau_.imag();
    auto logt = [&](double n) { return -s * n * n + 2.0 * kPi * n * y; };
    int n = static_cast<int>(std::ceil(y / tau_.imag())) + 1;  // past the peak
    const double logmax = logt(y / tau_.imag());
    while (true) {
        // terms beyond n decay at least geometrically with ratio r
        double r = std::exp(logt(n + 2) - logt(n + 1));
        double tail = 2.0 * std::exp(logt(n + 1)) / (1.0 - r);
        if (tail <= tol_ * std::max(1.0, std::exp(logmax))) return n;
        ++n;
    }
}

double ThetaModulus::tail_bound(double im_bound) const {
    const double s = kPi * tau_.imag();
    const int n = terms_for(im_bound);
    auto logt = [&](double k) { return -s * k * k + 2.0 * kPi * k * im_bound; };
    double r = std::exp(logt(n + 2) - logt(n + 1));
    return 2.0 * std::exp(logt(n + 1)) / (1.0 - r);
}

cplx ThetaModulus::theta3(cplx z) const {
    const int n = terms_for(std::abs(z.imag()));
    cplx sum = 1.0;
    for (int k = n; k >= 1; --k) {
        const double kk = static_cast<double>(k);
        cplx base = I1 * kPi * kk * kk * tau_;
        sum += std::exp(base + 2.0 * kPi * I1 * kk * z) + std::exp(base - 2.0 * kPi * I1 * kk * z);
    }
    return sum;
}

cplx theta3(cplx z, cplx tau) { return ThetaModulus(tau).theta3(z); }

}  // namespace sgas

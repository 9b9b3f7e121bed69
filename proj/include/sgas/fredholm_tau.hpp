#pragma once

#include <functional>
#include <string>

#include "sgas/common.hpp"
#include "sgas/domain_geometry.hpp"
#include "sgas/nsoliton.hpp"

namespace sgas {

enum class TauMethod { HankelHalfline, Block2D, NSoliton };

std::string to_string(TauMethod m);
TauMethod parse_tau_method(const std::string& s);

struct TauEvaluation {
    double x = 0.0, t = 0.0;
    double log_tau = 0.0;
    TauMethod method = TauMethod::HankelHalfline;
    int n_nodes = 0;
    int order_a = 0, order_b = 0;  // (n_r, n_phi), (n, 0) or (N, 0)
    double diagnostic = 0.0;       // determinant phase, largest singular value or flip count
};

// B^(s) = int_D beta(w)^2 e^{i(w s + 2 w^2 t)} d^2w / pi on a fixed 2-D rule
class HankelSymbol {
public:
    HankelSymbol(const EllipseDomain& d, const SolitonDensity& beta, double t, const QuadratureRule2D& quad);
    cplx operator()(double s) const;
    // |B^(s)| <= (A/pi) max|beta|^2 e^{-s min Im w} e^{2|t| max|Im w^2|}, s > 0
    double bound(double s) const;

private:
    std::vector<cplx> nodes_, amp_;
    double area_, beta_max_sq_, min_im_, t_, max_im_sq_;
};

cplx hankel_symbol(double s, double t, const EllipseDomain& d, const SolitonDensity& beta,
                   const QuadratureRule2D& quad);

// tau = det(I + B B^H) on L^2([x, inf)), s = x + L(1+v)/(1-v), n Gauss-Legendre nodes in v.
// L <= 0 selects 1/min Im w.
TauEvaluation log_tau_hankel(const EllipseDomain& d, const SolitonDensity& beta, double x, double t, int n,
                             const QuadratureRule2D& quad, double L = 0.0, double budget = kDefaultBudget);

// tau = det[[I, i Pbar], [i P, I]] on L^2(D) + L^2(conj D), Nystrom on the given rule.
// Evaluated by LU of I + Pbar P while max 2 Re theta(w) <= 8; beyond that the same
// discrete determinant goes through the flipped residue system (diagnostic = flips).
TauEvaluation log_tau_2d(const EllipseDomain& d, const SolitonDensity& beta, double x, double t,
                         const QuadratureRule2D& quad, double budget = kDefaultBudget);

// (log tau(x-h) - 2 log tau(x) + log tau(x+h)) / h^2
double abs_psi_sq(const std::function<double(double)>& log_tau_at, double x, double h);

}  // namespace sgas

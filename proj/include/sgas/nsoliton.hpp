#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgas/common.hpp"
#include "sgas/domain_geometry.hpp"

namespace sgas {

inline constexpr double kDefaultBudget = 600.0;

// Point spectrum z_j (Im > 0) with norming constants c_j.
struct SpectralData {
    std::vector<cplx> z, c;

    std::size_t size() const { return z.size(); }
    bool empty() const { return z.empty(); }
    // throws DomainError on a violated invariant
    void validate() const;

    // one line per pair: Re z, Im z, Re c, Im c
    void save(std::ostream& os) const;
    static SpectralData load(std::istream& is);
    void save_file(const std::string& path) const;
    static SpectralData load_file(const std::string& path);
};

// i (z^2 t + z x)
cplx theta_phase(cplx z, double x, double t);

// c_j = (A/(pi N)) beta(z_j)^2 on the deterministic sample; zero constants dropped
SpectralData condense_2d(const EllipseDomain& d, const SolitonDensity& beta, int N);

// Gauss-Legendre nodes on I with c_j = r(iy_j) w_j / (2 pi). The side picks the
// boundary value of delta S; Side::Right gives positive constants for beta = 1.
SpectralData condense_segment(const EllipseDomain& d, const SolitonDensity& beta, int M,
                              Side side = Side::Right);

struct PhiMatrix {
    Eigen::MatrixXcd phi;
    double x = 0.0, t = 0.0;
};

// Largest exponent 2|x| Im z + 2|t| |Im z^2| over the spectrum.
double exponent_demand(const SpectralData& s, double x, double t);
void check_budget(double demand, double budget, const char* who);

PhiMatrix phi_matrix(const SpectralData& s, double x, double t, double budget = kDefaultBudget,
                     bool negate_roots = false);

enum class TauNMethod {
    Stabilized,  // residue system with pole flips
    Direct       // det(I + Phi conj(Phi)): eigenvalue route for N <= 512, LU above
};

double log_tau_n(const SpectralData& s, double x, double t,
                 TauNMethod method = TauNMethod::Stabilized, double budget = kDefaultBudget);

struct NSolitonSolve {
    cplx psi;
    double log_tau = 0.0;
    int flips = 0;
    int iterations = 0;
};

// Solves the pole-free conditions for the N-soliton matrix. Poles whose
// residue weight would exceed order one are swapped with their conjugates
// (an exact Blaschke-factor gauge), keeping the linear system well scaled.
// max_flips = 0 gives the plain, unflipped system.
NSolitonSolve solve_nsoliton(const SpectralData& s, double x, double t,
                             double budget = kDefaultBudget, int max_flips = -1);

cplx psi_n(const SpectralData& s, double x, double t, double budget = kDefaultBudget);

// max_jk |A~(v_j, v_k) + (conj(Phi) Phi)_jk| with A~ from trapezoidal quadrature
// on the circle of the given radius around the centroid of the z_j.
double gram_residue_check(const SpectralData& s, double x, double t, double contour_radius,
                          int nodes = 256);

}  // namespace sgas

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sgas/domain_geometry.hpp"
#include "sgas/fredholm_tau.hpp"
#include "sgas/nsoliton.hpp"

namespace sgas {

struct RunConfig {
    double alpha1 = 0.5, alpha2 = 1.5, rho = 0.75;
    std::vector<cplx> beta{1.0};
    std::vector<int> N{64, 256, 1024};
    int M = 1024;
    Side segment_side = Side::Right;
    int n_r = 24, n_phi = 48;
    int hankel_n = 128;
    double hankel_L = 0.0;  // <= 0: 1/min Im w
    std::vector<double> x{-10, -9, -8, -7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<double> t{0.0, 0.5};
    double h = 0.01;
    double budget = kDefaultBudget;
    std::string output_dir = "out";
    int workers = 0;  // 0: environment or hardware
    // matching scenario
    int match_N = 1024;
    std::string match_source = "segment";  // segment | 2d
    double match_left_lo = -15, match_left_hi = -5, match_right_lo = 5, match_right_hi = 15;
    double match_step = 0.25;
    // shielding scenario grid
    std::vector<double> shield_x;  // empty: -10..10 step 0.5

    EllipseDomain domain() const { return EllipseDomain::make(alpha1, alpha2, rho); }
    SolitonDensity density() const { return SolitonDensity(beta); }
    void validate() const;
};

// Reads a JSON file; keys absent from the file keep their defaults.
RunConfig load_config(const std::string& path);
RunConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const RunConfig& c);

// Grid helper: start, stop inclusive, step
std::vector<double> grid(double start, double stop, double step);

int resolve_workers(int requested);
// Runs body(i) for i in [0, n) on a pool; exceptions are rethrown after join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

struct TauRow {
    double x = 0, t = 0;
    std::string method;
    double log_tau = 0;
    int n_nodes = 0;
    std::string status = "ok";
};

std::vector<TauRow> run_tau(const RunConfig& c, const std::vector<TauMethod>& methods);

struct CrosscheckResult {
    std::vector<TauRow> rows;
    // per (x,t): hankel - block_2d, nsoliton - hankel
    struct Diff {
        double x, t, hankel_minus_2d, nsoliton_minus_hankel;
        std::string status;
    };
    std::vector<Diff> diffs;
};
CrosscheckResult run_crosscheck(const RunConfig& c);

struct ProfileRow {
    double x = 0;
    cplx psi;
    std::string status = "ok";
};

struct ShieldingResult {
    struct Row {
        int N;
        double x, abs_2d, abs_segment, diff;
        std::string status;
    };
    std::vector<Row> rows;
    std::vector<std::pair<int, double>> sup_diff;  // (N = M, sup |diff|)
};
ShieldingResult run_shielding(const RunConfig& c);

struct MatchingReport {
    double c_minus = 0, c_plus = 0, r2_plus = 0;
    double max_mismatch = 0;
    double x0 = 0;
    int N = 0;
    std::string source;
    struct Row {
        double x, abs_psi_n, abs_dn, residual;
    };
    std::vector<Row> table;
    std::vector<std::pair<double, double>> right_tail;  // (x, |psi_N|)
};
MatchingReport run_matching(const RunConfig& c);

std::vector<ProfileRow> nsoliton_profile(const RunConfig& c, const SpectralData& s, const std::vector<double>& xs,
                                         double t);

// Least-squares line y = a + b x; returns (a, b, R^2)
struct LineFit {
    double a, b, r2;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct CheckResult {
    std::string name;
    bool pass;
    double value, tolerance;
    std::string detail;
};
// Invariant suite behind `verify`: fast versions of the acceptance checks
std::vector<CheckResult> run_verify(const RunConfig& c);

// CSV helpers: %.17g numbers, fixed headers
std::string fmt_num(double v);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
void write_tau_csv(const std::string& path, const std::vector<TauRow>& rows);
void write_profile_csv(const std::string& path, const std::vector<ProfileRow>& rows);
void write_report_csv(const std::string& path, const std::vector<std::pair<std::string, std::string>>& kv);
void write_gnuplot(const std::string& path, const std::vector<ProfileRow>& rows);

}  // namespace sgas

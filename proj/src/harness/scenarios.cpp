#include <algorithm>
#include <cmath>
#include <limits>

#include "sgas/elliptic_asymptotics.hpp"
#include "sgas/harness.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

namespace {

std::string status_of(const std::exception& e) {
    if (dynamic_cast<const BudgetError*>(&e)) return "budget_exceeded";
    if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence_failure";
    if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
    return "error";
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_line needs two or more points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f;
    f.b = sxy / sxx;
    f.a = my - f.b * mx;
    f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

std::vector<TauRow> run_tau(const RunConfig& c, const std::vector<TauMethod>& methods) {
    c.validate();
    const EllipseDomain d = c.domain();
    const SolitonDensity beta = c.density();
    const QuadratureRule2D quad = quadrature_2d(d, c.n_r, c.n_phi);
    const int Nmax = *std::max_element(c.N.begin(), c.N.end());
    SpectralData spectral;
    const bool need_ns = std::find(methods.begin(), methods.end(), TauMethod::NSoliton) != methods.end();
    if (need_ns && !beta.is_zero()) spectral = condense_2d(d, beta, Nmax);

    struct Task {
        double x, t;
        TauMethod m;
    };
    std::vector<Task> tasks;
    for (double t : c.t)
        for (double x : c.x)
            for (TauMethod m : methods) tasks.push_back({x, t, m});
    std::vector<TauRow> rows(tasks.size());
    parallel_for(tasks.size(), c.workers, [&](std::size_t i) {
        const Task& tk = tasks[i];
        TauRow& r = rows[i];
        r.x = tk.x;
        r.t = tk.t;
        r.method = to_string(tk.m);
        try {
            switch (tk.m) {
                case TauMethod::HankelHalfline: {
                    r.n_nodes = c.hankel_n;
                    r.log_tau = log_tau_hankel(d, beta, tk.x, tk.t, c.hankel_n, quad, c.hankel_L, c.budget).log_tau;
                    break;
                }
                case TauMethod::Block2D: {
                    r.n_nodes = static_cast<int>(quad.size());
                    r.log_tau = log_tau_2d(d, beta, tk.x, tk.t, quad, c.budget).log_tau;
                    break;
                }
                case TauMethod::NSoliton: {
                    r.n_nodes = static_cast<int>(spectral.size());
                    r.log_tau = spectral.empty() ? 0.0 : log_tau_n(spectral, tk.x, tk.t, TauNMethod::Stabilized, c.budget);
                    break;
                }
            }
        } catch (const std::exception& e) {
            r.log_tau = kNaN;
            r.status = status_of(e);
        }
    });
    return rows;
}

CrosscheckResult run_crosscheck(const RunConfig& c) {
    CrosscheckResult res;
    res.rows = run_tau(c, {TauMethod::HankelHalfline, TauMethod::Block2D, TauMethod::NSoliton});
    for (std::size_t i = 0; i + 2 < res.rows.size(); i += 3) {
        const TauRow &h = res.rows[i], &b = res.rows[i + 1], &n = res.rows[i + 2];
        std::string st = "ok";
        for (const TauRow* r : {&h, &b, &n})
            if (r->status != "ok") st = r->status;
        res.diffs.push_back({h.x, h.t, h.log_tau - b.log_tau, n.log_tau - h.log_tau, st});
    }
    return res;
}

std::vector<ProfileRow> nsoliton_profile(const RunConfig& c, const SpectralData& s, const std::vector<double>& xs,
                                         double t) {
    std::vector<ProfileRow> rows(xs.size());
    parallel_for(xs.size(), c.workers, [&](std::size_t i) {
        rows[i].x = xs[i];
        try {
            rows[i].psi = s.empty() ? cplx(0.0) : psi_n(s, xs[i], t, c.budget);
        } catch (const std::exception& e) {
            rows[i].psi = cplx(kNaN, kNaN);
            rows[i].status = status_of(e);
        }
    });
    return rows;
}

ShieldingResult run_shielding(const RunConfig& c) {
    c.validate();
    const EllipseDomain d = c.domain();
    const SolitonDensity beta = c.density();
    const std::vector<double> xs = c.shield_x.empty() ? grid(-10.0, 10.0, 0.5) : c.shield_x;
    ShieldingResult res;
    for (int N : c.N) {
        SpectralData s2, ss;
        if (!beta.is_zero()) {
            s2 = condense_2d(d, beta, N);
            ss = condense_segment(d, beta, std::max(N, 2), c.segment_side);
        }
        const auto p2 = nsoliton_profile(c, s2, xs, 0.0);
        const auto ps = nsoliton_profile(c, ss, xs, 0.0);
        double sup = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const std::string st = p2[i].status != "ok" ? p2[i].status : ps[i].status;
            const double a = std::abs(p2[i].psi), b = std::abs(ps[i].psi);
            const double df = std::abs(a - b);
            if (st == "ok") sup = std::max(sup, df);
            res.rows.push_back({N, xs[i], a, b, df, st});
        }
        res.sup_diff.emplace_back(N, sup);
    }
    return res;
}

MatchingReport run_matching(const RunConfig& c) {
    c.validate();
    const EllipseDomain d = c.domain();
    const SolitonDensity beta = c.density();
    const EllipticModel model(d, beta);
    MatchingReport rep;
    rep.N = c.match_N;
    rep.source = c.match_source;
    rep.x0 = model.x0();
    const SpectralData s = c.match_source == "segment" ? condense_segment(d, beta, c.match_N, c.segment_side)
                                                       : condense_2d(d, beta, c.match_N);
    const double budget_need = 2.0 * std::max(std::abs(c.match_left_lo), std::abs(c.match_right_hi)) * d.max_im();
    check_budget(budget_need, c.budget, "run_matching window");

    const auto xl = grid(c.match_left_lo, c.match_left_hi, c.match_step);
    const auto pl = nsoliton_profile(c, s, xl, 0.0);
    const double sum = d.alpha1() + d.alpha2();
    for (std::size_t i = 0; i < xl.size(); ++i) {
        if (pl[i].status != "ok") throw ConvergenceError("run_matching: N-soliton failed at x = " + fmt_num(xl[i]));
        const double an = std::abs(pl[i].psi);
        const double ad = sum * jacobi_dn(sum * (xl[i] - rep.x0), model.params().m);
        const double res = an - ad;
        rep.table.push_back({xl[i], an, ad, res});
        rep.max_mismatch = nan_max(rep.max_mismatch, std::abs(res) / ad);
    }
    // residual envelope: max |residual| per period, regressed against the period center
    const double P = model.period();
    std::vector<double> cx, cy;
    for (double lo = c.match_left_lo; lo + P <= c.match_left_hi + 1e-12; lo += P) {
        double mx = 0.0;
        for (const auto& r : rep.table)
            if (r.x >= lo && r.x < lo + P) mx = std::max(mx, std::abs(r.residual));
        if (mx > 0.0) {
            cx.push_back(lo + 0.5 * P);
            cy.push_back(std::log(mx));
        }
    }
    if (cx.size() < 2) {
        cx.clear();
        cy.clear();
        for (const auto& r : rep.table)
            if (std::abs(r.residual) > 0.0) {
                cx.push_back(r.x);
                cy.push_back(std::log(std::abs(r.residual)));
            }
    }
    rep.c_minus = fit_line(cx, cy).b;

    const auto xr = grid(c.match_right_lo, c.match_right_hi, c.match_step);
    const auto pr = nsoliton_profile(c, s, xr, 0.0);
    std::vector<double> rx, ry;
    for (std::size_t i = 0; i < xr.size(); ++i) {
        if (pr[i].status != "ok") throw ConvergenceError("run_matching: N-soliton failed at x = " + fmt_num(xr[i]));
        rep.right_tail.emplace_back(xr[i], std::abs(pr[i].psi));
        rx.push_back(xr[i]);
        ry.push_back(std::log(std::abs(pr[i].psi)));
    }
    const LineFit fr = fit_line(rx, ry);
    rep.c_plus = -fr.b;
    rep.r2_plus = fr.r2;
    return rep;
}

}  // namespace sgas

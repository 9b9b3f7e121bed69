#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgas/elliptic_asymptotics.hpp"
#include "sgas/harness.hpp"

using namespace sgas;

namespace {

// "a:b:step" or "v1,v2,..."
std::vector<double> parse_grid(const std::string& s) {
    if (s.find(':') != std::string::npos) {
        double a, b, h;
        char c1, c2;
        std::istringstream is(s);
        if (!(is >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':') throw ParseError("grid must be start:stop:step");
        return grid(a, b, h);
    }
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw ParseError("bad number '" + tok + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad number '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError("empty grid");
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_grid(s)) out.push_back(static_cast<int>(v));
    return out;
}

std::string path_in(const RunConfig& c, const std::string& name) {
    return (std::filesystem::path(c.output_dir) / name).string();
}

struct Overrides {
    std::string config, out, x, t, N, beta_re;
    double alpha1 = 0, alpha2 = 0, rho = 0, budget = 0;
    int workers = 0, M = 0, n_r = 0, n_phi = 0, hankel_n = 0;
    std::string side;

    RunConfig resolve(CLI::App& app) const {
        RunConfig c = config.empty() ? RunConfig{} : load_config(config);
        auto given = [&](const char* name) { return app.count(name) > 0; };
        if (given("--alpha1")) c.alpha1 = alpha1;
        if (given("--alpha2")) c.alpha2 = alpha2;
        if (given("--rho")) c.rho = rho;
        if (given("--budget")) c.budget = budget;
        if (given("--workers")) c.workers = workers;
        if (given("--out")) c.output_dir = out;
        if (given("--x")) c.x = parse_grid(x);
        if (given("--t")) c.t = parse_grid(t);
        if (given("--N")) c.N = parse_ints(N);
        if (given("--M")) c.M = M;
        if (given("--n-r")) c.n_r = n_r;
        if (given("--n-phi")) c.n_phi = n_phi;
        if (given("--hankel-n")) c.hankel_n = hankel_n;
        if (given("--beta")) {
            c.beta.clear();
            for (double v : parse_grid(beta_re)) c.beta.emplace_back(v, 0.0);
        }
        if (given("--side")) c.segment_side = side == "left" ? Side::Left : Side::Right;
        c.validate();
        return c;
    }
};

void add_common(CLI::App* sub, Overrides& o) {
    sub->add_option("--config", o.config, "JSON configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--workers", o.workers, "worker threads (else SGAS_WORKERS, else hardware)")->check(CLI::PositiveNumber);
    sub->add_option("--alpha1", o.alpha1, "lower focus");
    sub->add_option("--alpha2", o.alpha2, "upper focus");
    sub->add_option("--rho", o.rho, "half the focal-distance sum");
    sub->add_option("--beta", o.beta_re, "real polynomial coefficients of beta, comma separated");
    sub->add_option("--budget", o.budget, "largest admissible exponent");
    sub->add_option("--x", o.x, "x grid: start:stop:step or a comma list");
    sub->add_option("--t", o.t, "t grid: start:stop:step or a comma list");
    sub->add_option("--N", o.N, "condensation sizes, comma list");
    sub->add_option("--M", o.M, "segment condensation size");
    sub->add_option("--n-r", o.n_r, "radial quadrature order");
    sub->add_option("--n-phi", o.n_phi, "angular quadrature order");
    sub->add_option("--hankel-n", o.hankel_n, "half-line quadrature order");
    sub->add_option("--side", o.side, "side of the segment for condensation")->check(CLI::IsMember({"left", "right"}));
}

void print_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
    for (const auto& [k, v] : kv) std::cout << k << " = " << v << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Soliton-gas tau functions, N-soliton condensates and elliptic asymptotics"};
    app.require_subcommand(1);
    Overrides o;

    auto* tau = app.add_subcommand("tau", "log tau on an (x, t) grid");
    add_common(tau, o);
    std::string method = "all";
    tau->add_option("--method", method, "all | hankel | 2d | nsoliton")
        ->check(CLI::IsMember({"all", "hankel", "2d", "nsoliton", "hankel_halfline", "block_2d", "nsoliton_N"}));

    auto* ns = app.add_subcommand("nsoliton", "N-soliton profile psi_N(x, t)");
    add_common(ns, o);
    std::string source = "2d", spectral_in, spectral_out, gnuplot;
    ns->add_option("--source", source, "2d | segment")->check(CLI::IsMember({"2d", "segment"}));
    ns->add_option("--spectral", spectral_in, "read z_j, c_j from this file instead of condensing")->check(CLI::ExistingFile);
    ns->add_option("--save-spectral", spectral_out, "write the spectral data used");
    ns->add_option("--gnuplot", gnuplot, "also write a two-column x |psi| file");

    auto* asy = app.add_subcommand("asymptotic", "elliptic parameters and the step-like profile psi0");
    add_common(asy, o);
    asy->add_option("--gnuplot", gnuplot, "also write a two-column x |psi0| file");

    auto* ver = app.add_subcommand("verify", "invariant checks; nonzero exit on any failure");
    add_common(ver, o);

    auto* sh = app.add_subcommand("shield", "2-D versus segment condensation profiles");
    add_common(sh, o);

    auto* ma = app.add_subcommand("match", "N-soliton profile against the dn asymptotics");
    add_common(ma, o);
    ma->add_option("--source", source, "segment | 2d")->check(CLI::IsMember({"2d", "segment"}));
    ma->add_option("--gnuplot", gnuplot, "also write a two-column x |psi_N| file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        RunConfig c = o.resolve(*sub);
        if (sub == tau) {
            std::vector<TauRow> rows;
            if (method == "all") {
                const auto cc = run_crosscheck(c);
                rows = cc.rows;
                std::vector<std::vector<std::string>> diffs;
                for (const auto& d : cc.diffs)
                    diffs.push_back({fmt_num(d.x), fmt_num(d.t), fmt_num(d.hankel_minus_2d),
                                     fmt_num(d.nsoliton_minus_hankel), d.status});
                write_csv(path_in(c, "crosscheck.csv"),
                          {"x", "t", "hankel_minus_2d", "nsoliton_minus_hankel", "status"}, diffs);
            } else {
                rows = run_tau(c, {parse_tau_method(method)});
            }
            write_tau_csv(path_in(c, "tau.csv"), rows);
            int bad = 0;
            for (const auto& r : rows) bad += r.status != "ok";
            std::cout << rows.size() << " rows, " << bad << " not ok -> " << path_in(c, "tau.csv") << '\n';
        } else if (sub == ns) {
            SpectralData s;
            if (!spectral_in.empty()) s = SpectralData::load_file(spectral_in);
            else if (source == "segment") s = condense_segment(c.domain(), c.density(), c.M, c.segment_side);
            else s = condense_2d(c.domain(), c.density(), *std::max_element(c.N.begin(), c.N.end()));
            if (!spectral_out.empty()) s.save_file(spectral_out);
            std::vector<ProfileRow> all;
            for (double t : c.t) {
                auto rows = nsoliton_profile(c, s, c.x, t);
                if (c.t.size() > 1)
                    write_profile_csv(path_in(c, "profile_t" + fmt_num(t) + ".csv"), rows);
                all.insert(all.end(), rows.begin(), rows.end());
            }
            if (c.t.size() == 1) write_profile_csv(path_in(c, "profile.csv"), all);
            if (!gnuplot.empty()) write_gnuplot(gnuplot, std::vector<ProfileRow>(all.begin(), all.begin() + c.x.size()));
            std::cout << "N = " << s.size() << ", " << all.size() << " profile rows -> " << c.output_dir << '\n';
        } else if (sub == asy) {
            const EllipticModel m(c.domain(), c.density());
            const auto& p = m.params();
            std::vector<ProfileRow> rows;
            for (double x : c.x) rows.push_back({x, m.psi0_dn(x), "ok"});
            write_profile_csv(path_in(c, "profile.csv"), rows);
            const std::vector<std::pair<std::string, std::string>> kv{
                {"m", fmt_num(p.m)},         {"K", fmt_num(p.K)},
                {"tau_im", fmt_num(p.tau.imag())}, {"kappa", fmt_num(p.kappa)},
                {"Omega", fmt_num(p.Omega)}, {"Delta_im", fmt_num(p.Delta.imag())},
                {"g_infty", fmt_num(p.g_infty)}, {"phi_infty", fmt_num(p.phi_infty)},
                {"x0", fmt_num(p.x0)},       {"period", fmt_num(m.period())}};
            write_report_csv(path_in(c, "report.csv"), kv);
            if (!gnuplot.empty()) write_gnuplot(gnuplot, rows);
            print_kv(kv);
        } else if (sub == ver) {
            const auto checks = run_verify(c);
            std::vector<std::pair<std::string, std::string>> kv;
            bool ok = true;
            for (const auto& r : checks) {
                ok = ok && r.pass;
                std::printf("[%s] %-24s value=%.3e tol=%.1e %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.value,
                            r.tolerance, r.detail.c_str());
                kv.emplace_back(r.name, r.pass ? "pass" : "fail");
                kv.emplace_back(r.name + "_value", fmt_num(r.value));
            }
            write_report_csv(path_in(c, "verify.csv"), kv);
            return ok ? 0 : 1;
        } else if (sub == sh) {
            const auto res = run_shielding(c);
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : res.rows)
                rows.push_back({std::to_string(r.N), fmt_num(r.x), fmt_num(r.abs_2d), fmt_num(r.abs_segment),
                                fmt_num(r.diff), r.status});
            write_csv(path_in(c, "shield.csv"), {"N", "x", "abs_2d", "abs_segment", "diff", "status"}, rows);
            std::vector<std::pair<std::string, std::string>> kv;
            for (const auto& [N, v] : res.sup_diff) kv.emplace_back("sup_diff_N" + std::to_string(N), fmt_num(v));
            write_report_csv(path_in(c, "report.csv"), kv);
            print_kv(kv);
        } else if (sub == ma) {
            if (ma->count("--source")) c.match_source = source;
            if (ma->count("--N")) c.match_N = c.N.back();
            const auto rep = run_matching(c);
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : rep.table)
                rows.push_back({fmt_num(r.x), fmt_num(r.abs_psi_n), fmt_num(r.abs_dn), fmt_num(r.residual)});
            write_csv(path_in(c, "match.csv"), {"x", "abs_psi_n", "abs_dn", "residual"}, rows);
            const std::vector<std::pair<std::string, std::string>> kv{
                {"N", std::to_string(rep.N)},       {"source", rep.source},
                {"x0", fmt_num(rep.x0)},             {"max_rel_mismatch", fmt_num(rep.max_mismatch)},
                {"c_minus", fmt_num(rep.c_minus)},   {"c_plus", fmt_num(rep.c_plus)},
                {"r2_plus", fmt_num(rep.r2_plus)}};
            write_report_csv(path_in(c, "report.csv"), kv);
            if (!gnuplot.empty()) {
                std::vector<ProfileRow> pr;
                for (const auto& r : rep.table) pr.push_back({r.x, r.abs_psi_n, "ok"});
                for (const auto& [x, a] : rep.right_tail) pr.push_back({x, a, "ok"});
                write_gnuplot(gnuplot, pr);
            }
            print_kv(kv);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "sgas/harness.hpp"

using namespace sgas;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string tmp_dir(const char* tag) {
    const auto p = std::filesystem::temp_directory_path() / (std::string("sgas_harness_") + tag);
    std::filesystem::remove_all(p);
    return p.string();
}

RunConfig small_config() {
    RunConfig c;
    c.x = {-2.0, 0.0, 2.0};
    c.t = {0.0};
    c.N = {32};
    c.n_r = 8;
    c.n_phi = 16;
    c.hankel_n = 32;
    c.workers = 1;
    return c;
}

}  // namespace

TEST_CASE("config: JSON round trip and defaults") {
    RunConfig c;
    c.alpha1 = 0.4;
    c.beta = {cplx(1.0, 0.5), 0.2};
    c.N = {8, 16};
    c.segment_side = Side::Left;
    c.x = {-1.0, 1.0};
    c.match_source = "2d";
    c.shield_x = {0.0, 0.5};
    const RunConfig r = config_from_json_text(config_to_json_text(c));
    CHECK(r.alpha1 == 0.4);
    CHECK(r.beta == c.beta);
    CHECK(r.N == c.N);
    CHECK(r.segment_side == Side::Left);
    CHECK(r.x == c.x);
    CHECK(r.match_source == "2d");
    CHECK(r.shield_x == c.shield_x);
    CHECK(config_to_json_text(r) == config_to_json_text(c));

    const RunConfig d = config_from_json_text(R"({"grid": {"x": {"start": -1, "stop": 1, "step": 0.5}, "t": 0.25}})");
    CHECK(d.x.size() == 5u);
    CHECK(d.t == std::vector<double>{0.25});
    CHECK(d.alpha2 == 1.5);
}

TEST_CASE("shipped default config equals the built-in defaults") {
    RunConfig d;
    d.shield_x = grid(-10.0, 10.0, 0.5);
    CHECK(config_to_json_text(load_config(SGAS_SOURCE_DIR "/config/default.json")) == config_to_json_text(d));
}

TEST_CASE("config: malformed input") {
    CHECK_THROWS_AS(config_from_json_text("{not json"), ParseError);
    CHECK_THROWS_AS(config_from_json_text(R"({"domain": {"alpha1": "x"}})"), ParseError);
    CHECK_THROWS_AS(config_from_json_text(R"({"condensation": {"segment_side": "up"}})"), ParseError);
    CHECK_THROWS_AS(config_from_json_text(R"({"domain": {"rho": 0.1}})"), DomainError);
    CHECK_THROWS_AS(config_from_json_text(R"({"match": {"source": "x"}})"), DomainError);
    CHECK_THROWS_AS(load_config("/nonexistent/sgas.json"), ParseError);
}

TEST_CASE("grid helper") {
    CHECK(grid(-1.0, 1.0, 0.5) == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(grid(0.0, 0.3, 0.1).size() == 4u);
    CHECK_THROWS_AS(grid(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(grid(1.0, 0.0, 0.1), DomainError);
}

TEST_CASE("worker resolution") {
    CHECK(resolve_workers(3) == 3);
    setenv("SGAS_WORKERS", "5", 1);
    CHECK(resolve_workers(0) == 5);
    setenv("SGAS_WORKERS", "junk", 1);
    CHECK(resolve_workers(0) >= 1);
    unsetenv("SGAS_WORKERS");
    CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("parallel_for covers every index once and propagates errors") {
    for (int w : {1, 4}) {
        std::vector<std::atomic<int>> hits(97);
        parallel_for(hits.size(), w, [&](std::size_t i) { hits[i]++; });
        for (auto& h : hits) CHECK(h.load() == 1);
        CHECK_THROWS_AS(parallel_for(10, w,
                                     [](std::size_t i) {
                                         if (i == 7) throw std::runtime_error("boom");
                                     }),
                        std::runtime_error);
    }
    parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("tau scenario: zero density, ordering, worker independence") {
    RunConfig c = small_config();
    c.beta = {0.0};
    for (const auto& r : run_tau(c, {TauMethod::HankelHalfline, TauMethod::Block2D, TauMethod::NSoliton})) {
        CHECK(r.status == "ok");
        CHECK(r.log_tau == 0.0);
    }
    c = small_config();
    c.t = {0.0, 0.5};
    const auto a = run_tau(c, {TauMethod::HankelHalfline, TauMethod::NSoliton});
    REQUIRE(a.size() == 12u);
    CHECK(a[0].method == to_string(TauMethod::HankelHalfline));
    CHECK(a[1].method == to_string(TauMethod::NSoliton));
    CHECK(a[0].t == 0.0);
    CHECK(a[6].t == 0.5);
    CHECK(a[2].x == 0.0);
    c.workers = 3;
    const auto b = run_tau(c, {TauMethod::HankelHalfline, TauMethod::NSoliton});
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].log_tau == b[i].log_tau);
}

TEST_CASE("tau scenario: budget failures become status rows") {
    RunConfig c = small_config();
    c.x = {-400.0, 0.0};
    c.budget = 100.0;
    const auto rows = run_tau(c, {TauMethod::HankelHalfline, TauMethod::NSoliton});
    REQUIRE(rows.size() == 4u);
    CHECK(rows[0].status == "budget_exceeded");
    CHECK(rows[1].status == "budget_exceeded");
    CHECK(std::isnan(rows[0].log_tau));
    CHECK(rows[2].status == "ok");
    CHECK(rows[3].status == "ok");
}

TEST_CASE("CSV output: headers, status column, byte-identical reruns") {
    const std::string dir = tmp_dir("csv");
    const RunConfig c = small_config();
    const auto rows = run_tau(c, {TauMethod::HankelHalfline});
    write_tau_csv(dir + "/a/tau.csv", rows);
    write_tau_csv(dir + "/b/tau.csv", run_tau(c, {TauMethod::HankelHalfline}));
    const std::string s = slurp(dir + "/a/tau.csv");
    CHECK(s.rfind("x,t,method,log_tau,n_nodes,status\n", 0) == 0);
    CHECK(s == slurp(dir + "/b/tau.csv"));

    const std::vector<ProfileRow> prof{{0.0, cplx(3.0, 4.0), "ok"}, {1.0, cplx(0.0), "budget_exceeded"}};
    write_profile_csv(dir + "/p.csv", prof);
    CHECK(slurp(dir + "/p.csv") == "x,re_psi,im_psi,abs_psi,status\n0,3,4,5,ok\n1,0,0,0,budget_exceeded\n");
    write_report_csv(dir + "/r.csv", {{"m", "0.75"}});
    CHECK(slurp(dir + "/r.csv") == "key,value\nm,0.75\n");
    write_gnuplot(dir + "/g.dat", prof);
    CHECK(slurp(dir + "/g.dat").rfind("# x abs_psi\n0 5\n", 0) == 0);
    CHECK(fmt_num(0.1) == "0.10000000000000001");
    std::filesystem::remove_all(dir);
}

TEST_CASE("line fit") {
    const LineFit f = fit_line({0.0, 1.0, 2.0, 3.0}, {1.0, 3.0, 5.0, 7.0});
    CHECK(f.a == doctest::Approx(1.0));
    CHECK(f.b == doctest::Approx(2.0));
    CHECK(f.r2 == doctest::Approx(1.0));
    CHECK_THROWS(fit_line({1.0}, {2.0}));
}

TEST_CASE("profile scenario on a one-soliton") {
    const RunConfig c = small_config();
    const SpectralData s{{cplx(0.0, 0.5)}, {1.0}};
    const auto rows = nsoliton_profile(c, s, {0.0, 1.0}, 0.0);
    REQUIRE(rows.size() == 2u);
    CHECK(std::abs(std::abs(rows[0].psi) - 1.0) < 1e-12);  // peak at x0 = 0
    CHECK(rows[1].status == "ok");
}

TEST_CASE("verify suite passes at defaults") {
    RunConfig c;
    c.workers = 1;
    for (const auto& r : run_verify(c)) {
        INFO(r.name << " " << r.value << " " << r.detail);
        CHECK(r.pass);
    }
}

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sgas/harness.hpp"

namespace sgas {

using nlohmann::json;

std::vector<double> grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    if (stop < start) throw DomainError("grid stop below start");
    const long n = std::lround(std::floor((stop - start) / step + 1e-9));
    std::vector<double> g;
    for (long k = 0; k <= n; ++k) g.push_back(start + step * static_cast<double>(k));
    return g;
}

void RunConfig::validate() const {
    (void)domain();
    if (N.empty()) throw DomainError("config: N list is empty");
    for (int n : N)
        if (n < 1) throw DomainError("config: N entries must be positive");
    if (M < 2) throw DomainError("config: M must be at least 2");
    if (n_r < 1 || n_phi < 1 || hankel_n < 8) throw DomainError("config: invalid quadrature orders");
    if (x.empty() || t.empty()) throw DomainError("config: x and t grids must be nonempty");
    if (!(h > 0.0)) throw DomainError("config: h must be positive");
    if (!(budget > 0.0)) throw DomainError("config: budget must be positive");
    if (match_source != "segment" && match_source != "2d") throw DomainError("config: match.source must be segment or 2d");
    if (!(match_left_lo < match_left_hi) || !(match_right_lo < match_right_hi) || !(match_step > 0.0))
        throw DomainError("config: invalid matching windows");
}

namespace {

std::vector<double> read_grid(const json& j) {
    if (j.is_array()) return j.get<std::vector<double>>();
    if (j.is_object()) return grid(j.at("start").get<double>(), j.at("stop").get<double>(), j.at("step").get<double>());
    if (j.is_number()) return {j.get<double>()};
    throw ParseError("config: grid must be a list, a number or {start, stop, step}");
}

std::vector<cplx> read_coeffs(const json& j) {
    std::vector<cplx> out;
    for (const auto& e : j) {
        if (e.is_number()) out.emplace_back(e.get<double>(), 0.0);
        else if (e.is_array() && e.size() == 2) out.emplace_back(e[0].get<double>(), e[1].get<double>());
        else throw ParseError("config: beta coefficients are numbers or [re, im] pairs");
    }
    if (out.empty()) out.push_back(0.0);
    return out;
}

template <class T>
void take(const json& j, const char* key, T& dst) {
    if (j.contains(key)) dst = j.at(key).get<T>();
}

}  // namespace

RunConfig config_from_json_text(const std::string& text) {
    RunConfig c;
    json j;
    try {
        j = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    try {
        if (j.contains("domain")) {
            const json& d = j["domain"];
            take(d, "alpha1", c.alpha1);
            take(d, "alpha2", c.alpha2);
            take(d, "rho", c.rho);
        }
        if (j.contains("beta")) c.beta = read_coeffs(j["beta"].is_object() ? j["beta"].at("coeffs") : j["beta"]);
        if (j.contains("condensation")) {
            const json& d = j["condensation"];
            take(d, "N", c.N);
            take(d, "M", c.M);
            if (d.contains("segment_side")) {
                const auto s = d["segment_side"].get<std::string>();
                if (s == "left") c.segment_side = Side::Left;
                else if (s == "right") c.segment_side = Side::Right;
                else throw ParseError("config: segment_side must be left or right");
            }
        }
        if (j.contains("quadrature")) {
            const json& d = j["quadrature"];
            take(d, "n_r", c.n_r);
            take(d, "n_phi", c.n_phi);
            take(d, "hankel_n", c.hankel_n);
            take(d, "hankel_L", c.hankel_L);
        }
        if (j.contains("grid")) {
            const json& d = j["grid"];
            if (d.contains("x")) c.x = read_grid(d["x"]);
            if (d.contains("t")) c.t = read_grid(d["t"]);
        }
        take(j, "h", c.h);
        take(j, "budget", c.budget);
        take(j, "output_dir", c.output_dir);
        if (j.contains("parallel")) take(j["parallel"], "workers", c.workers);
        if (j.contains("match")) {
            const json& d = j["match"];
            take(d, "N", c.match_N);
            take(d, "source", c.match_source);
            take(d, "step", c.match_step);
            if (d.contains("left")) {
                auto w = d["left"].get<std::vector<double>>();
                if (w.size() != 2) throw ParseError("config: match.left is [lo, hi]");
                c.match_left_lo = w[0];
                c.match_left_hi = w[1];
            }
            if (d.contains("right")) {
                auto w = d["right"].get<std::vector<double>>();
                if (w.size() != 2) throw ParseError("config: match.right is [lo, hi]");
                c.match_right_lo = w[0];
                c.match_right_hi = w[1];
            }
        }
        if (j.contains("shield") && j["shield"].contains("x")) c.shield_x = read_grid(j["shield"]["x"]);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot read config " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json_text(const RunConfig& c) {
    json j;
    j["domain"] = {{"alpha1", c.alpha1}, {"alpha2", c.alpha2}, {"rho", c.rho}};
    json coeffs = json::array();
    for (cplx b : c.beta) coeffs.push_back({b.real(), b.imag()});
    j["beta"] = {{"coeffs", coeffs}};
    j["condensation"] = {{"N", c.N}, {"M", c.M}, {"segment_side", c.segment_side == Side::Left ? "left" : "right"}};
    j["quadrature"] = {{"n_r", c.n_r}, {"n_phi", c.n_phi}, {"hankel_n", c.hankel_n}, {"hankel_L", c.hankel_L}};
    j["grid"] = {{"x", c.x}, {"t", c.t}};
    j["h"] = c.h;
    j["budget"] = c.budget;
    j["output_dir"] = c.output_dir;
    j["parallel"] = {{"workers", c.workers}};
    j["match"] = {{"N", c.match_N},
                  {"source", c.match_source},
                  {"step", c.match_step},
                  {"left", {c.match_left_lo, c.match_left_hi}},
                  {"right", {c.match_right_lo, c.match_right_hi}}};
    if (!c.shield_x.empty()) j["shield"] = {{"x", c.shield_x}};
    return j.dump(2);
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SGAS_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body) {
    const int w = std::max(1, std::min<int>(resolve_workers(workers), static_cast<int>(n)));
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < w; ++k) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace sgas

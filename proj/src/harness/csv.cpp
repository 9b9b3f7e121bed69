#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sgas/harness.hpp"

namespace sgas {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ParseError("cannot write " + path);
    for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
        os << '\n';
    }
}

void write_tau_csv(const std::string& path, const std::vector<TauRow>& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
        out.push_back({fmt_num(r.x), fmt_num(r.t), r.method, fmt_num(r.log_tau), std::to_string(r.n_nodes), r.status});
    write_csv(path, {"x", "t", "method", "log_tau", "n_nodes", "status"}, out);
}

void write_profile_csv(const std::string& path, const std::vector<ProfileRow>& rows) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows)
        out.push_back({fmt_num(r.x), fmt_num(r.psi.real()), fmt_num(r.psi.imag()), fmt_num(std::abs(r.psi)), r.status});
    write_csv(path, {"x", "re_psi", "im_psi", "abs_psi", "status"}, out);
}

void write_report_csv(const std::string& path, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::vector<std::vector<std::string>> out;
    for (const auto& [k, v] : kv) out.push_back({k, v});
    write_csv(path, {"key", "value"}, out);
}

void write_gnuplot(const std::string& path, const std::vector<ProfileRow>& rows) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ParseError("cannot write " + path);
    os << "# x abs_psi\n";
    for (const auto& r : rows) os << fmt_num(r.x) << ' ' << fmt_num(std::abs(r.psi)) << '\n';
}

}  // namespace sgas

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sgas/nsoliton.hpp"
#include "sgas/special_functions.hpp"

namespace sgas {

void SpectralData::validate() const {
    if (z.size() != c.size()) throw DomainError("spectral data: z and c lengths differ");
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (!(z[j].imag() > 0.0)) throw DomainError("spectral data: Im z_j must be positive");
        if (c[j] == 0.0) throw DomainError("spectral data: zero norming constant");
        if (!std::isfinite(std::abs(z[j])) || !std::isfinite(std::abs(c[j])))
            throw DomainError("spectral data: non-finite entry");
    }
    std::vector<cplx> sorted = z;
    auto lex = [](cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); };
    std::sort(sorted.begin(), sorted.end(), lex);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("spectral data: repeated eigenvalue");
}

void SpectralData::save(std::ostream& os) const {
    os << std::setprecision(17);
    for (std::size_t j = 0; j < z.size(); ++j)
        os << z[j].real() << ", " << z[j].imag() << ", " << c[j].real() << ", " << c[j].imag() << '\n';
}

SpectralData SpectralData::load(std::istream& is) {
    SpectralData s;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double v[4];
        for (double& e : v)
            if (!(ls >> e)) throw ParseError("spectral data line " + std::to_string(lineno) + ": expected 4 numbers");
        std::string extra;
        if (ls >> extra) throw ParseError("spectral data line " + std::to_string(lineno) + ": trailing fields");
        s.z.emplace_back(v[0], v[1]);
        s.c.emplace_back(v[2], v[3]);
    }
    s.validate();
    return s;
}

void SpectralData::save_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot write " + path);
    save(os);
}

SpectralData SpectralData::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot read " + path);
    return load(is);
}

cplx theta_phase(cplx z, double x, double t) { return I1 * (z * z * t + z * x); }

SpectralData condense_2d(const EllipseDomain& d, const SolitonDensity& beta, int N) {
    const std::vector<cplx> pts = sample_uniform(d, N);
    const double scale = d.area() / (kPi * N);
    SpectralData s;
    for (cplx p : pts) {
        const cplx b = beta(p);
        const cplx cj = scale * b * b;
        if (cj == 0.0) continue;
        s.z.push_back(p);
        s.c.push_back(cj);
    }
    if (s.empty()) throw DomainError("condense_2d: all norming constants vanish");
    return s;
}

SpectralData condense_segment(const EllipseDomain& d, const SolitonDensity& beta, int M, Side side) {
    if (M < 2) throw DomainError("condense_segment needs M >= 2");
    const GaussRule g = gauss_legendre(M, d.alpha1(), d.alpha2());
    SpectralData s;
    for (int j = 0; j < M; ++j) {
        const cplx cj = cut_function_r(d, beta, g.x[j], side) * g.w[j] / (2.0 * kPi);
        if (cj == 0.0) continue;
        s.z.emplace_back(0.0, g.x[j]);
        s.c.push_back(cj);
    }
    if (s.empty()) throw DomainError("condense_segment: density vanishes on the segment");
    return s;
}

}  // namespace sgas

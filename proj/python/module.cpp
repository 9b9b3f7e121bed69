#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgas/elliptic_asymptotics.hpp"
#include "sgas/fredholm_tau.hpp"
#include "sgas/harness.hpp"
#include "sgas/nsoliton.hpp"
#include "sgas/special_functions.hpp"

namespace py = pybind11;
using namespace sgas;

namespace {

Side side_of(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw DomainError("side must be left or right");
}

py::dict params_dict(const EllipticParams& p) {
    py::dict d;
    d["alpha1"] = p.alpha1;
    d["alpha2"] = p.alpha2;
    d["m"] = p.m;
    d["tau"] = p.tau;
    d["K"] = p.K;
    d["K_prime"] = p.K_prime;
    d["kappa"] = p.kappa;
    d["Omega"] = p.Omega;
    d["Delta"] = p.Delta;
    d["J"] = p.J;
    d["g_infty"] = p.g_infty;
    d["phi_infty"] = p.phi_infty;
    d["x0"] = p.x0;
    return d;
}

}  // namespace

PYBIND11_MODULE(sgas, m) {
    m.doc() = "Soliton gas tau functions, N-soliton condensates and elliptic asymptotics";

    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("ellint_K", &ellint_K, py::arg("m"));
    m.def("ellint_E", &ellint_E, py::arg("m"));
    m.def("jacobi_dn", &jacobi_dn, py::arg("u"), py::arg("m"));
    m.def("theta3", py::overload_cast<cplx, cplx>(&theta3), py::arg("z"), py::arg("tau"));

    py::class_<EllipseDomain>(m, "EllipseDomain")
        .def(py::init(&EllipseDomain::make), py::arg("alpha1"), py::arg("alpha2"), py::arg("rho"))
        .def_property_readonly("alpha1", &EllipseDomain::alpha1)
        .def_property_readonly("alpha2", &EllipseDomain::alpha2)
        .def_property_readonly("rho", &EllipseDomain::rho)
        .def_property_readonly("area", &EllipseDomain::area)
        .def("contains", &EllipseDomain::contains, py::arg("z"))
        .def("sample", [](const EllipseDomain& d, int N) { return sample_uniform(d, N); }, py::arg("N"));

    py::class_<SolitonDensity>(m, "SolitonDensity")
        .def(py::init<>())
        .def(py::init<std::vector<cplx>>(), py::arg("coeffs"))
        .def("__call__", &SolitonDensity::operator(), py::arg("z"));

    py::class_<SpectralData>(m, "SpectralData")
        .def(py::init<>())
        .def(py::init([](std::vector<cplx> z, std::vector<cplx> c) {
                 SpectralData s{std::move(z), std::move(c)};
                 s.validate();
                 return s;
             }),
             py::arg("z"), py::arg("c"))
        .def_readonly("z", &SpectralData::z)
        .def_readonly("c", &SpectralData::c)
        .def("__len__", &SpectralData::size)
        .def("save", &SpectralData::save_file, py::arg("path"))
        .def_static("load", &SpectralData::load_file, py::arg("path"));

    m.def("condense_2d", &condense_2d, py::arg("domain"), py::arg("beta"), py::arg("N"));
    m.def(
        "condense_segment",
        [](const EllipseDomain& d, const SolitonDensity& b, int M, const std::string& side) {
            return condense_segment(d, b, M, side_of(side));
        },
        py::arg("domain"), py::arg("beta"), py::arg("M"), py::arg("side") = "right");
    m.def(
        "log_tau_n",
        [](const SpectralData& s, double x, double t, bool direct, double budget) {
            return log_tau_n(s, x, t, direct ? TauNMethod::Direct : TauNMethod::Stabilized, budget);
        },
        py::arg("spectral"), py::arg("x"), py::arg("t") = 0.0, py::arg("direct") = false,
        py::arg("budget") = kDefaultBudget);
    m.def("psi_n", &psi_n, py::arg("spectral"), py::arg("x"), py::arg("t") = 0.0, py::arg("budget") = kDefaultBudget);

    m.def(
        "log_tau",
        [](const EllipseDomain& d, const SolitonDensity& b, double x, double t, const std::string& method, int n_r,
           int n_phi, int n) {
            const QuadratureRule2D q = quadrature_2d(d, n_r, n_phi);
            switch (parse_tau_method(method)) {
                case TauMethod::HankelHalfline: return log_tau_hankel(d, b, x, t, n, q).log_tau;
                case TauMethod::Block2D: return log_tau_2d(d, b, x, t, q).log_tau;
                case TauMethod::NSoliton: return log_tau_n(condense_2d(d, b, n), x, t);
            }
            return 0.0;
        },
        py::arg("domain"), py::arg("beta"), py::arg("x"), py::arg("t") = 0.0, py::arg("method") = "hankel",
        py::arg("n_r") = 24, py::arg("n_phi") = 48, py::arg("n") = 128,
        "log tau by the half-line, 2-D or condensed N-soliton route; n is the node count or N");

    py::class_<EllipticModel>(m, "EllipticModel")
        .def(py::init<const EllipseDomain&, const SolitonDensity&>(), py::arg("domain"),
             py::arg("beta") = SolitonDensity())
        .def_property_readonly("params", [](const EllipticModel& e) { return params_dict(e.params()); })
        .def_property_readonly("period", &EllipticModel::period)
        .def("psi0_dn", &EllipticModel::psi0_dn, py::arg("x"))
        .def("psi0_theta", &EllipticModel::psi0_theta, py::arg("x"))
        .def("g", &EllipticModel::g, py::arg("z"))
        .def("f", &EllipticModel::f, py::arg("z"));

    m.def(
        "verify",
        [](const std::string& config_json) {
            const RunConfig c = config_json.empty() ? RunConfig{} : config_from_json_text(config_json);
            py::list out;
            for (const auto& r : run_verify(c)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["value"] = r.value;
                d["tolerance"] = r.tolerance;
                out.append(d);
            }
            return out;
        },
        py::arg("config_json") = "");
}

// python bindings for the core operations
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ortholab/acceptance.hpp"
#include "ortholab/kernels.hpp"
#include "ortholab/quadrature.hpp"
#include "ortholab/specfun.hpp"
#include "ortholab/summability.hpp"

namespace py = pybind11;
using namespace ortholab;
using complexd = std::complex<double>;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reproducing kernels and geometric-weight summability for "
              "classical orthogonal expansions";

    // ---- specfun
    auto sf = m.def_submodule("specfun");
    py::class_<specfun::SeriesControl>(sf, "SeriesControl")
        .def(py::init<>())
        .def_readwrite("max_terms", &specfun::SeriesControl::max_terms)
        .def_readwrite("rel_tol", &specfun::SeriesControl::rel_tol)
        .def_readwrite("consecutive_small", &specfun::SeriesControl::consecutive_small);
    sf.def("log_gamma", &specfun::log_gamma, py::arg("x"));
    sf.def("besseli_entire",
           [](double nu, complexd w) { return specfun::besseli_entire(nu, w); },
           py::arg("nu"), py::arg("w"));
    sf.def("bessel_k", &specfun::bessel_k, py::arg("nu"), py::arg("x"));
    sf.def("bessel_k_integral", &specfun::bessel_k_integral, py::arg("nu"),
           py::arg("x"));
    sf.def("gauss_2f1",
           [](double a, double b, double c, complexd t) {
               return specfun::gauss_2f1(a, b, c, t);
           },
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"));
    sf.def("appell_f4",
           [](double a, double b, double c1, double c2, complexd t, complexd s) {
               return specfun::appell_f4(a, b, c1, c2, t, s);
           },
           py::arg("a"), py::arg("b"), py::arg("c1"), py::arg("c2"), py::arg("t"),
           py::arg("s"));
    sf.def("pochhammer_ratio_limit_check", &specfun::pochhammer_ratio_limit_check,
           py::arg("a"), py::arg("b"), py::arg("k_max"));

    // ---- orthopoly
    auto op = m.def_submodule("orthopoly");
    py::class_<orthopoly::FamilySpec>(op, "FamilySpec")
        .def_static("hermite", &orthopoly::FamilySpec::hermite)
        .def_static("laguerre", &orthopoly::FamilySpec::laguerre, py::arg("nu"))
        .def_static("jacobi", &orthopoly::FamilySpec::jacobi, py::arg("alpha"),
                    py::arg("beta"))
        .def_static("gegenbauer", &orthopoly::FamilySpec::gegenbauer, py::arg("lam"))
        .def_static("chebyshev_t", &orthopoly::FamilySpec::chebyshev_t)
        .def_readonly("nu", &orthopoly::FamilySpec::nu)
        .def_readonly("alpha", &orthopoly::FamilySpec::alpha)
        .def_readonly("beta", &orthopoly::FamilySpec::beta)
        .def_readonly("lam", &orthopoly::FamilySpec::lambda);
    op.def("recurrence_coeffs", &orthopoly::recurrence_coeffs, py::arg("family"),
           py::arg("k"));
    op.def("eval_orthonormal", &orthopoly::eval_orthonormal, py::arg("family"),
           py::arg("k"), py::arg("z"));
    op.def("eval_orthonormal_all", &orthopoly::eval_orthonormal_all,
           py::arg("family"), py::arg("k_max"), py::arg("z"));
    op.def("standard_scale", &orthopoly::standard_scale, py::arg("family"),
           py::arg("k"));

    // ---- kernels
    auto ke = m.def_submodule("kernels");
    py::class_<kernels::KernelSpec>(ke, "KernelSpec")
        .def_static("hermite_mehler", &kernels::KernelSpec::hermite_mehler,
                    py::arg("theta"))
        .def_static("laguerre_hardy_hille", &kernels::KernelSpec::laguerre_hardy_hille,
                    py::arg("theta"), py::arg("nu"))
        .def_static("jacobi_bailey", &kernels::KernelSpec::jacobi_bailey,
                    py::arg("theta"), py::arg("alpha"), py::arg("beta"))
        .def_static("gegenbauer_closed", &kernels::KernelSpec::gegenbauer_closed,
                    py::arg("theta"), py::arg("lam"))
        .def_static("hat_k", &kernels::KernelSpec::hat_k, py::arg("theta"),
                    py::arg("lam"))
        .def_static("bergman_selberg", &kernels::KernelSpec::bergman_selberg,
                    py::arg("theta"), py::arg("lam"))
        .def_static("reduced_hermite", &kernels::KernelSpec::reduced_hermite,
                    py::arg("theta"))
        .def_static("reduced_laguerre", &kernels::KernelSpec::reduced_laguerre,
                    py::arg("theta"), py::arg("nu"));
    ke.def("kernel_closed",
           [](const kernels::KernelSpec& spec, complexd z, complexd u) {
               return kernels::kernel_closed(spec, z, u);
           },
           py::arg("spec"), py::arg("z"), py::arg("u"));
    ke.def("kernel_series",
           [](const orthopoly::FamilySpec& family, double theta, complexd z,
              complexd u, int K) {
               const auto eval = kernels::kernel_series(family, theta, z, u, K);
               return py::make_tuple(eval.value, eval.last_term_mag, eval.terms_used);
           },
           py::arg("family"), py::arg("theta"), py::arg("z"), py::arg("u"),
           py::arg("k_max"));
    ke.def("gram_min_eig", &kernels::gram_min_eig, py::arg("spec"), py::arg("points"));
    ke.def("factorization_residual",
           [](const std::string& kind, double theta, complexd z, complexd u,
              double nu) {
               const auto fk = kind == "hermite" ? orthopoly::FamilyKind::Hermite
                                                : orthopoly::FamilyKind::Laguerre;
               return kernels::factorization_residual(fk, theta, z, u, nu);
           },
           py::arg("kind"), py::arg("theta"), py::arg("z"), py::arg("u"),
           py::arg("nu") = 0.0);
    ke.def("gegenbauer_reduction_residual",
           [](double theta, double lam, complexd z, complexd u) {
               return kernels::gegenbauer_reduction_residual(theta, lam, z, u);
           },
           py::arg("theta"), py::arg("lam"), py::arg("z"), py::arg("u"));
    ke.def("hatk_ratio_scan",
           [](double lam, double mu, int k_max) {
               const auto s = kernels::hatk_ratio_scan(lam, mu, k_max);
               return py::make_tuple(s.inf, s.sup, s.last);
           },
           py::arg("lam"), py::arg("mu"), py::arg("k_max"));
    ke.def("jacobi_ratio_scan",
           [](double alpha, double beta, double gamma, int kl_max) {
               const auto s = kernels::jacobi_ratio_scan(alpha, beta, gamma, kl_max);
               return py::make_tuple(s.inf, s.sup);
           },
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("kl_max"));
    ke.def("gamma_k_eval", &kernels::gamma_k_eval, py::arg("theta"), py::arg("lam"),
           py::arg("k"), py::arg("z"));
    ke.def("alpha_max", &kernels::alpha_max, py::arg("theta"), py::arg("lam"),
           py::arg("k"));

    // ---- quadrature
    auto qu = m.def_submodule("quadrature");
    qu.def("gauss_rule",
           [](const orthopoly::FamilySpec& family, int n) {
               const auto rule = quadrature::gauss_rule(family, n);
               return py::make_tuple(rule.nodes, rule.weights);
           },
           py::arg("family"), py::arg("n"));
    qu.def("fourier_coefficients",
           [](const std::function<complexd(double)>& f,
              const orthopoly::FamilySpec& family, int K, int n) {
               return quadrature::fourier_coefficients(f, family, K, n).values;
           },
           py::arg("f"), py::arg("family"), py::arg("k_max"), py::arg("n"));
    qu.def("chebyshev_boundary_gram", &quadrature::chebyshev_boundary_gram,
           py::arg("theta"), py::arg("k"), py::arg("m"), py::arg("n_nodes") = 1024);
    qu.def("ellipse_contour_integral",
           [](const std::function<complexd(complexd)>& g, double theta, int n_nodes,
              const std::function<double(complexd)>& rho) {
               return quadrature::ellipse_contour_integral(
                   g, quadrature::EllipseContour{theta, n_nodes}, rho);
           },
           py::arg("g"), py::arg("theta"), py::arg("n_nodes"), py::arg("rho"));

    // ---- summability
    auto su = m.def_submodule("summability");
    py::class_<summability::VerificationReport>(su, "VerificationReport")
        .def_readonly("identity", &summability::VerificationReport::identity)
        .def_readonly("computed", &summability::VerificationReport::computed)
        .def_readonly("expected", &summability::VerificationReport::expected)
        .def_readonly("abs_err", &summability::VerificationReport::abs_err)
        .def_readonly("rel_err", &summability::VerificationReport::rel_err)
        .def_readonly("tolerance", &summability::VerificationReport::tolerance)
        .def_readonly("pass_", &summability::VerificationReport::pass)
        .def_readonly("runtime_ms", &summability::VerificationReport::runtime_ms);
    su.def("weighted_sum",
           [](const orthopoly::FamilySpec& family, const std::vector<complexd>& values,
              double theta, int K) {
               CoefficientSeries series{family, values, 0};
               const auto out = summability::weighted_sum(series, theta, K);
               return py::make_tuple(out.partial_sums, out.overflow);
           },
           py::arg("family"), py::arg("values"), py::arg("theta"), py::arg("k_max"));
    su.def("radius_estimate",
           [](const orthopoly::FamilySpec& family, const std::vector<complexd>& values) {
               CoefficientSeries series{family, values, 0};
               const auto r = summability::radius_estimate(series);
               const char* flag =
                   r.flag == summability::RadiusEstimate::Flag::Finite
                       ? "finite"
                       : (r.flag == summability::RadiusEstimate::Flag::Infinite
                              ? "infinite"
                              : "inconclusive");
               return py::make_tuple(r.value, flag);
           },
           py::arg("family"), py::arg("values"));
    su.def("hermite_norm_identity",
           [](double t, double theta, int K, int res) {
               const auto grid = quadrature::PlanarGridSpec::cartesian_for_hermite(
                   theta, 0, std::abs(t) * (theta + 1.0), res);
               return summability::hermite_norm_identity(t, theta, grid, K);
           },
           py::arg("t"), py::arg("theta"), py::arg("k_max") = 48,
           py::arg("resolution") = 200);
    su.def("laguerre_norm_identity",
           [](double t, double theta, double nu, int K, int res) {
               const auto grid =
                   quadrature::PlanarGridSpec::polar_for_laguerre(theta, 0, res);
               return summability::laguerre_norm_identity(t, theta, nu, grid, K);
           },
           py::arg("t"), py::arg("theta"), py::arg("nu"), py::arg("k_max") = 48,
           py::arg("resolution") = 192);

    // ---- acceptance
    m.def("run_acceptance",
          []() {
              py::list out;
              for (const auto& r : acceptance::run_all()) {
                  py::dict d;
                  d["criterion"] = r.number;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["worst_err"] = r.worst_err;
                  d["tolerance"] = r.tolerance;
                  d["runtime_ms"] = r.runtime_ms;
                  d["detail"] = r.detail;
                  out.append(std::move(d));
              }
              return out;
          },
          "Run the twelve acceptance criteria and return their results");
}

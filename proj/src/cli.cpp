#include "ortholab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "ortholab/acceptance.hpp"
#include "ortholab/kernels.hpp"
#include "ortholab/quadrature.hpp"
#include "ortholab/report.hpp"
#include "ortholab/summability.hpp"

namespace ortholab::cli {

namespace {

using complexd = std::complex<double>;
using report::csv_cell;
using report::Json;
using summability::VerificationReport;

struct OutputPaths {
    std::string json_path;
    std::string csv_path;
};

// exit code 3 on I/O failure, else the code passed in
int emit(const Json& doc, const std::string& csv, const OutputPaths& paths,
         int code) {
    const std::string text = doc.dump();
    if (paths.json_path.empty()) {
        std::cout << text;
    } else if (!report::write_file(paths.json_path, text)) {
        std::cerr << "ortholab: cannot write " << paths.json_path << "\n";
        return 3;
    }
    if (!paths.csv_path.empty() && !report::write_file(paths.csv_path, csv)) {
        std::cerr << "ortholab: cannot write " << paths.csv_path << "\n";
        return 3;
    }
    return code;
}

Json failure_report(const std::string& command, const std::string& message) {
    Json reports = Json::array();
    Json entry = Json::object();
    entry.set("identity", command + " execution");
    entry.set("error", message);
    entry.set("pass", false);
    reports.push_back(std::move(entry));
    return report::report_document(command, Json::object(), std::move(reports), 0, 1,
                                   0.0);
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 1) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

std::vector<double> parse_grid(const std::string& csv_list) {
    std::vector<double> grid;
    std::stringstream ss(csv_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(std::stod(item));
    }
    if (grid.empty()) throw DomainError("theta grid is empty");
    return grid;
}

// ---- kernel-check ---------------------------------------------------

int cmd_kernel_check(const std::string& kind, double theta, double nu,
                     double alpha, double beta, double lambda, int pairs,
                     int kmax, double tol, std::uint64_t seed,
                     const OutputPaths& paths) {
    using kernels::kernel_closed;
    using kernels::kernel_series;
    orthopoly::FamilySpec family;
    kernels::KernelSpec spec;
    if (kind == "mehler") {
        family = orthopoly::FamilySpec::hermite();
        spec = kernels::KernelSpec::hermite_mehler(theta);
    } else if (kind == "hardy-hille") {
        family = orthopoly::FamilySpec::laguerre(nu);
        spec = kernels::KernelSpec::laguerre_hardy_hille(theta, nu);
    } else if (kind == "bailey") {
        family = orthopoly::FamilySpec::jacobi(alpha, beta);
        spec = kernels::KernelSpec::jacobi_bailey(theta, alpha, beta);
    } else {
        family = orthopoly::FamilySpec::gegenbauer(lambda);
        spec = kernels::KernelSpec::gegenbauer_closed(theta, lambda);
    }
    const bool ellipse_domain = (kind == "bailey" || kind == "gegenbauer");
    const kernels::EllipseDomain dom{theta};

    Rng rng(seed);
    auto draw = [&]() -> complexd {
        for (;;) {
            complexd z;
            if (ellipse_domain) {
                z = complexd(rng.uniform(-dom.semi_major(), dom.semi_major()),
                             rng.uniform(-dom.semi_minor(), dom.semi_minor()));
                if (!dom.contains(z)) continue;
            } else {
                z = complexd(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            }
            return z;
        }
    };

    Json reports = Json::array();
    std::vector<std::vector<std::string>> rows;
    int pass_count = 0, fail_count = 0;
    double max_rel = 0.0;
    int done = 0, attempts = 0;
    while (done < pairs && attempts < 20000) {
        ++attempts;
        const complexd z = draw(), u = draw();
        // truncation feasibility: the measured tail must stay below tol/10
        const auto eval = kernel_series(family, theta, z, u, kmax);
        if (eval.terms_used == kmax + 1) {
            const auto prev = kernel_series(family, theta, z, u, kmax - 1);
            const double ratio = prev.last_term_mag > 0.0
                                     ? eval.last_term_mag / prev.last_term_mag
                                     : 0.0;
            if (ratio >= 0.95) continue;
            if (eval.last_term_mag / (1.0 - ratio) >
                0.1 * tol * std::abs(eval.value))
                continue;
        }
        complexd closed;
        try {
            closed = kernel_closed(spec, z, u);
        } catch (const GuardError&) {
            continue;
        }
        ++done;
        const double rel = std::abs(eval.value - closed) / std::abs(closed);
        max_rel = std::max(max_rel, rel);
        auto rep = summability::make_report(
            "kernel " + kind + " pair " + std::to_string(done), eval.value, closed,
            tol);
        rep.pass ? ++pass_count : ++fail_count;
        reports.push_back(report::to_json(rep));
        rows.push_back({std::to_string(done), csv_cell(z.real()), csv_cell(z.imag()),
                        csv_cell(u.real()), csv_cell(u.imag()),
                        csv_cell(eval.value.real()), csv_cell(eval.value.imag()),
                        csv_cell(closed.real()), csv_cell(closed.imag()),
                        csv_cell(rel), rep.pass ? "1" : "0"});
    }
    if (done < pairs) {
        fail_count += pairs - done;
    }

    Json config = Json::object();
    config.set("kind", kind);
    config.set("theta", theta);
    config.set("nu", nu);
    config.set("alpha", alpha);
    config.set("beta", beta);
    config.set("lambda", lambda);
    config.set("pairs", pairs);
    config.set("kmax", kmax);
    config.set("tolerance", tol);
    config.set("seed", static_cast<long long>(seed));
    const Json doc = report::report_document("kernel-check", std::move(config),
                                             std::move(reports), pass_count,
                                             fail_count, max_rel);
    const std::string csv = report::csv_table(
        {"pair", "z_re", "z_im", "u_re", "u_im", "series_re", "series_im",
         "closed_re", "closed_im", "rel_err", "pass"},
        rows);
    return emit(doc, csv, paths, fail_count == 0 ? 0 : 1);
}

// ---- ortho-verify ---------------------------------------------------

int cmd_ortho_verify(const std::string& family_name, double theta, double nu,
                     int kmax, int res, const OutputPaths& paths) {
    const bool hermite = family_name == "hermite";
    quadrature::PlanarGridSpec grid =
        hermite ? quadrature::PlanarGridSpec::cartesian_for_hermite(theta, 2 * kmax,
                                                                    0.0, res)
                : quadrature::PlanarGridSpec::polar_for_laguerre(theta, 2 * kmax, res);
    const double diag_tol = hermite ? 1e-6 : 1e-4;
    const double offdiag_scale = hermite ? 1e-8 : 1e-6;
    const auto table = summability::orthogonality_matrix(
        hermite ? orthopoly::FamilyKind::Hermite : orthopoly::FamilyKind::Laguerre,
        theta, nu, kmax, grid, diag_tol, offdiag_scale);

    Json reports = Json::array();
    std::vector<std::vector<std::string>> rows;
    int pass_count = 0, fail_count = 0;
    double max_rel = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        for (int m = 0; m <= kmax; ++m) {
            const auto& rep = table[k][m];
            rep.pass ? ++pass_count : ++fail_count;
            if (k == m) max_rel = std::max(max_rel, rep.rel_err);
            reports.push_back(report::to_json(rep));
            rows.push_back({std::to_string(k), std::to_string(m),
                            csv_cell(rep.computed.real()), csv_cell(rep.computed.imag()),
                            csv_cell(rep.expected.real()), csv_cell(rep.abs_err),
                            csv_cell(rep.rel_err), csv_cell(rep.tolerance),
                            rep.pass ? "1" : "0"});
        }
    }
    Json config = Json::object();
    config.set("family", family_name);
    config.set("theta", theta);
    config.set("nu", nu);
    config.set("kmax", kmax);
    config.set("resolution", res);
    config.set("diag_tolerance", diag_tol);
    config.set("offdiag_tolerance_scale", offdiag_scale);
    const Json doc =
        report::report_document("ortho-verify", std::move(config), std::move(reports),
                                pass_count, fail_count, max_rel);
    const std::string csv = report::csv_table(
        {"k", "m", "computed_re", "computed_im", "expected_re", "abs_err", "rel_err",
         "tolerance", "pass"},
        rows);
    return emit(doc, csv, paths, fail_count == 0 ? 0 : 1);
}

// ---- ellipse-ortho --------------------------------------------------

int cmd_ellipse_ortho(double theta, int kmax, int nodes, const OutputPaths& paths) {
    Json reports = Json::array();
    std::vector<std::vector<std::string>> rows;
    int pass_count = 0, fail_count = 0;
    double max_rel = 0.0;
    std::vector<double> diag(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        diag[k] = (k == 0) ? 4.0 : std::pow(theta, k) + std::pow(theta, -k);
    for (int k = 0; k <= kmax; ++k) {
        for (int m = k; m <= kmax; ++m) {
            const complexd got = quadrature::chebyshev_boundary_gram(theta, k, m, nodes);
            VerificationReport rep;
            if (k == m)
                rep = summability::make_report(
                    "boundary_gram(" + std::to_string(k) + "," + std::to_string(m) + ")",
                    got, complexd(diag[k], 0.0), 1e-10);
            else
                rep = summability::make_report(
                    "boundary_gram(" + std::to_string(k) + "," + std::to_string(m) + ")",
                    got / std::sqrt(diag[k] * diag[m]), complexd(0.0, 0.0), 1e-10);
            rep.pass ? ++pass_count : ++fail_count;
            max_rel = std::max(max_rel, rep.rel_err);
            reports.push_back(report::to_json(rep));
            rows.push_back({std::to_string(k), std::to_string(m),
                            csv_cell(got.real()), csv_cell(got.imag()),
                            csv_cell(k == m ? diag[k] : 0.0), csv_cell(rep.rel_err),
                            rep.pass ? "1" : "0"});
        }
    }

    // empirically orthonormalizing constants for the orthonormal-Chebyshev
    // candidates: 1/sqrt of the boundary norm of T-normalized elements
    Json constants = Json::array();
    for (int k = 0; k <= kmax; ++k) {
        const double gram_kk =
            quadrature::chebyshev_boundary_gram(theta, k, k, nodes).real();
        const double std_norm2 = (k == 0) ? 0.5 * gram_kk : gram_kk;
        Json c = Json::object();
        c.set("k", k);
        c.set("orthonormalizing_constant", 1.0 / std::sqrt(std_norm2));
        constants.push_back(std::move(c));
    }

    Json config = Json::object();
    config.set("theta", theta);
    config.set("kmax", kmax);
    config.set("nodes", nodes);
    config.set("orthonormalizing_constants", std::move(constants));
    const Json doc =
        report::report_document("ellipse-ortho", std::move(config), std::move(reports),
                                pass_count, fail_count, max_rel);
    const std::string csv = report::csv_table(
        {"k", "m", "computed_re", "computed_im", "expected", "rel_err", "pass"}, rows);
    return emit(doc, csv, paths, fail_count == 0 ? 0 : 1);
}

// ---- summability ----------------------------------------------------

int cmd_summability(const std::string& family_name, double nu, double alpha,
                    double beta, double gen_t, const std::string& grid_str, int kmax,
                    const OutputPaths& paths) {
    const auto grid = parse_grid(grid_str);
    orthopoly::FamilySpec family;
    std::function<complexd(double)> f_real;
    std::function<complexd(complexd)> f_complex;
    const double t = gen_t;
    if (family_name == "hermite") {
        family = orthopoly::FamilySpec::hermite();
        f_real = [t](double x) { return complexd(std::exp(2.0 * x * t - t * t), 0.0); };
    } else if (family_name == "laguerre") {
        family = orthopoly::FamilySpec::laguerre(nu);
        f_real = [t, nu](double x) {
            return complexd(std::pow(1.0 - t, -nu - 1.0) * std::exp(-x * t / (1.0 - t)),
                            0.0);
        };
    } else {
        family = family_name == "chebyshev"
                     ? orthopoly::FamilySpec::chebyshev_t()
                     : orthopoly::FamilySpec::jacobi(alpha, beta);
        f_real = [t](double x) {
            return complexd((1.0 - t * t) / (1.0 - 2.0 * t * x + t * t), 0.0);
        };
        f_complex = [t](complexd z) {
            return (1.0 - t * t) / (1.0 - 2.0 * t * z + t * t);
        };
    }
    const bool jacobi_type = static_cast<bool>(f_complex);

    const auto coeffs = quadrature::fourier_coefficients(f_real, family, kmax,
                                                         kmax + 24);
    const auto sweep = summability::summability_report(coeffs, grid);
    Json reports = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double theta = grid[i];
        const auto& sums = sweep.partial_sums[i];
        Json entry = Json::object();
        entry.set("theta", theta);
        entry.set("verdict", summability::to_string(sweep.verdicts[i]));
        entry.set("sum_final", sums.empty() ? Json() : Json(sums.back()));
        entry.set("kept_terms", sweep.kept_terms);
        double boundary = std::nan("");
        double ratio = std::nan("");
        if (jacobi_type) {
            auto g = [&](complexd z) {
                const complexd v = f_complex(z);
                return v * std::conj(v);
            };
            boundary = quadrature::ellipse_contour_integral(
                           g, quadrature::EllipseContour{theta, 512},
                           [](complexd) { return 1.0; })
                           .real();
            ratio = sums.empty() ? std::nan("") : sums.back() / boundary;
            entry.set("boundary_norm", boundary);
            entry.set("ratio", ratio);
        }
        reports.push_back(std::move(entry));
        rows.push_back({csv_cell(theta), summability::to_string(sweep.verdicts[i]),
                        csv_cell(sums.empty() ? std::nan("") : sums.back()),
                        csv_cell(boundary), csv_cell(ratio)});
    }

    // the radius does not depend on theta
    Json radius_json = Json::object();
    if (!sweep.radius_available) {
        radius_json.set("flag", "unavailable");
        radius_json.set("value", Json());
    } else {
        switch (sweep.radius.flag) {
        case summability::RadiusEstimate::Flag::Finite:
            radius_json.set("flag", "finite");
            radius_json.set("value", sweep.radius.value);
            break;
        case summability::RadiusEstimate::Flag::Infinite:
            radius_json.set("flag", "infinite");
            radius_json.set("value", Json());
            break;
        case summability::RadiusEstimate::Flag::Inconclusive:
            radius_json.set("flag", "inconclusive");
            radius_json.set("value", sweep.radius.value);
            break;
        }
    }

    Json config = Json::object();
    config.set("family", family_name);
    config.set("nu", nu);
    config.set("alpha", alpha);
    config.set("beta", beta);
    config.set("gen_t", gen_t);
    config.set("kmax", kmax);
    Json grid_json = Json::array();
    for (double theta : grid) grid_json.push_back(theta);
    config.set("theta_grid", std::move(grid_json));
    config.set("radius_estimate", std::move(radius_json));

    const int n = static_cast<int>(grid.size());
    const Json doc = report::report_document("summability", std::move(config),
                                             std::move(reports), n, 0, 0.0);
    const std::string csv = report::csv_table(
        {"theta", "verdict", "sum_final", "boundary_norm", "ratio"}, rows);
    return emit(doc, csv, paths, 0);
}

// ---- norm-identity --------------------------------------------------

int cmd_norm_identity(const std::string& family_name, double t, double theta,
                      double nu, int kmax, int res, const OutputPaths& paths) {
    VerificationReport rep;
    if (family_name == "hermite") {
        const auto grid = quadrature::PlanarGridSpec::cartesian_for_hermite(
            theta, 0, std::abs(t) * (theta + 1.0), res);
        rep = summability::hermite_norm_identity(t, theta, grid, kmax);
    } else {
        const auto grid = quadrature::PlanarGridSpec::polar_for_laguerre(theta, 0, res);
        rep = summability::laguerre_norm_identity(t, theta, nu, grid, kmax);
    }
    Json reports = Json::array();
    reports.push_back(report::to_json(rep));
    Json config = Json::object();
    config.set("family", family_name);
    config.set("t", t);
    config.set("theta", theta);
    config.set("nu", nu);
    config.set("kmax", kmax);
    config.set("resolution", res);
    const Json doc =
        report::report_document("norm-identity", std::move(config), std::move(reports),
                                rep.pass ? 1 : 0, rep.pass ? 0 : 1, rep.rel_err);
    const std::string csv = report::csv_table(
        {"identity", "computed_re", "expected_re", "rel_err", "tolerance", "pass"},
        {{rep.identity, csv_cell(rep.computed.real()), csv_cell(rep.expected.real()),
          csv_cell(rep.rel_err), csv_cell(rep.tolerance), rep.pass ? "1" : "0"}});
    return emit(doc, csv, paths, rep.pass ? 0 : 1);
}

// ---- full-suite -----------------------------------------------------

int cmd_full_suite(const OutputPaths& paths) {
    const auto results = acceptance::run_all();
    Json reports = Json::array();
    std::vector<std::vector<std::string>> rows;
    int pass_count = 0, fail_count = 0;
    double max_err = 0.0;
    for (const auto& r : results) {
        std::cout << acceptance::format_line(r) << "\n";
        r.pass ? ++pass_count : ++fail_count;
        max_err = std::max(max_err, r.worst_err);
        Json entry = Json::object();
        entry.set("criterion", r.number);
        entry.set("name", r.name);
        entry.set("pass", r.pass);
        entry.set("worst_err", r.worst_err);
        entry.set("tolerance", r.tolerance);
        entry.set("runtime_ms", r.runtime_ms);
        entry.set("detail", r.detail);
        reports.push_back(std::move(entry));
        rows.push_back({std::to_string(r.number), r.name, r.pass ? "1" : "0",
                        csv_cell(r.worst_err), csv_cell(r.tolerance),
                        std::to_string(r.runtime_ms)});
    }
    const Json doc = report::report_document("full-suite", Json::object(),
                                             std::move(reports), pass_count,
                                             fail_count, max_err);
    const std::string csv = report::csv_table(
        {"criterion", "name", "pass", "worst_err", "tolerance", "runtime_ms"}, rows);
    // always write the JSON to a file if requested; console already has lines
    OutputPaths out = paths;
    if (out.json_path.empty()) out.json_path = "full_suite_report.json";
    return emit(doc, csv, out, fail_count == 0 ? 0 : 1);
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"ortholab: reproducing-kernel identities and geometric-weight "
                 "summability analyses for classical orthogonal expansions"};
    app.require_subcommand(1);

    // kernel-check
    auto* kc = app.add_subcommand("kernel-check",
                                  "bilinear kernel series vs closed form");
    std::string kc_kind;
    double kc_theta = 2.0, kc_nu = 0.5, kc_alpha = 0.5, kc_beta = 0.5,
           kc_lambda = 1.0, kc_tol = 1e-8;
    int kc_pairs = 20, kc_kmax = 60;
    std::uint64_t kc_seed = 12345;
    OutputPaths kc_paths;
    kc->add_option("--kind", kc_kind, "mehler|hardy-hille|bailey|gegenbauer")
        ->required()
        ->check(CLI::IsMember({"mehler", "hardy-hille", "bailey", "gegenbauer"}));
    kc->add_option("--theta", kc_theta, "geometric weight, > 1");
    kc->add_option("--nu", kc_nu, "Laguerre parameter");
    kc->add_option("--alpha", kc_alpha, "Jacobi alpha");
    kc->add_option("--beta", kc_beta, "Jacobi beta");
    kc->add_option("--lambda", kc_lambda, "Gegenbauer lambda");
    kc->add_option("--pairs", kc_pairs, "number of point pairs");
    kc->add_option("--kmax", kc_kmax, "series truncation");
    kc->add_option("--tol", kc_tol, "relative tolerance");
    kc->add_option("--seed", kc_seed, "sampler seed");
    kc->add_option("--out", kc_paths.json_path, "JSON output path");
    kc->add_option("--csv", kc_paths.csv_path, "CSV output path");

    // ortho-verify
    auto* ov = app.add_subcommand("ortho-verify",
                                  "complex-plane orthogonality relations");
    std::string ov_family;
    double ov_theta = 2.0, ov_nu = 0.5;
    int ov_kmax = 4, ov_res = 0;
    OutputPaths ov_paths;
    ov->add_option("--family", ov_family, "hermite|laguerre")
        ->required()
        ->check(CLI::IsMember({"hermite", "laguerre"}));
    ov->add_option("--theta", ov_theta, "geometric weight, > 1");
    ov->add_option("--nu", ov_nu, "Laguerre parameter");
    ov->add_option("--kmax", ov_kmax, "largest polynomial degree");
    ov->add_option("--res", ov_res, "grid resolution (0 = default)");
    ov->add_option("--out", ov_paths.json_path, "JSON output path");
    ov->add_option("--csv", ov_paths.csv_path, "CSV output path");

    // ellipse-ortho
    auto* eo = app.add_subcommand("ellipse-ortho",
                                  "ellipse boundary Gram table (Zhukowskii map)");
    double eo_theta = 2.0;
    int eo_kmax = 10, eo_nodes = 1024;
    OutputPaths eo_paths;
    eo->add_option("--theta", eo_theta, "geometric weight, > 1");
    eo->add_option("--kmax", eo_kmax, "largest degree");
    eo->add_option("--nodes", eo_nodes, "contour nodes (power of two >= 64)");
    eo->add_option("--out", eo_paths.json_path, "JSON output path");
    eo->add_option("--csv", eo_paths.csv_path, "CSV output path");

    // summability
    auto* su = app.add_subcommand("summability",
                                  "weighted coefficient sums across a theta grid");
    std::string su_family, su_grid = "1.5,2,4";
    double su_nu = 0.5, su_alpha = 0.5, su_beta = 0.5, su_t = 0.5;
    int su_kmax = 64;
    OutputPaths su_paths;
    su->add_option("--family", su_family, "hermite|laguerre|chebyshev|jacobi")
        ->required()
        ->check(CLI::IsMember({"hermite", "laguerre", "chebyshev", "jacobi"}));
    su->add_option("--nu", su_nu, "Laguerre parameter");
    su->add_option("--alpha", su_alpha, "Jacobi alpha");
    su->add_option("--beta", su_beta, "Jacobi beta");
    su->add_option("--gen-t", su_t, "generating-family parameter");
    su->add_option("--theta-grid", su_grid, "comma-separated theta values");
    su->add_option("--kmax", su_kmax, "number of coefficients");
    su->add_option("--out", su_paths.json_path, "JSON output path");
    su->add_option("--csv", su_paths.csv_path, "CSV output path");

    // norm-identity
    auto* ni = app.add_subcommand("norm-identity",
                                  "coefficient sum vs weighted area integral");
    std::string ni_family;
    double ni_t = 0.2, ni_theta = 2.0, ni_nu = 0.5;
    int ni_kmax = 48, ni_res = 0;
    OutputPaths ni_paths;
    ni->add_option("--family", ni_family, "hermite|laguerre")
        ->required()
        ->check(CLI::IsMember({"hermite", "laguerre"}));
    ni->add_option("--t", ni_t, "generating parameter");
    ni->add_option("--theta", ni_theta, "geometric weight, > 1");
    ni->add_option("--nu", ni_nu, "Laguerre parameter");
    ni->add_option("--kmax", ni_kmax, "number of coefficients");
    ni->add_option("--res", ni_res, "grid resolution (0 = default)");
    ni->add_option("--out", ni_paths.json_path, "JSON output path");
    ni->add_option("--csv", ni_paths.csv_path, "CSV output path");

    // full-suite
    auto* fs = app.add_subcommand("full-suite", "run all acceptance criteria");
    OutputPaths fs_paths;
    fs->add_option("--out", fs_paths.json_path, "JSON output path");
    fs->add_option("--csv", fs_paths.csv_path, "CSV output path");

    std::vector<const char*> argv;
    argv.push_back("ortholab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints contextual help, exits 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    try {
        if (kc->parsed())
            return cmd_kernel_check(kc_kind, kc_theta, kc_nu, kc_alpha, kc_beta,
                                    kc_lambda, kc_pairs, kc_kmax, kc_tol, kc_seed,
                                    kc_paths);
        if (ov->parsed()) {
            if (ov_res == 0) ov_res = ov_family == "hermite" ? 160 : 192;
            return cmd_ortho_verify(ov_family, ov_theta, ov_nu, ov_kmax, ov_res,
                                    ov_paths);
        }
        if (eo->parsed()) return cmd_ellipse_ortho(eo_theta, eo_kmax, eo_nodes, eo_paths);
        if (su->parsed())
            return cmd_summability(su_family, su_nu, su_alpha, su_beta, su_t, su_grid,
                                   su_kmax, su_paths);
        if (ni->parsed()) {
            if (ni_res == 0) ni_res = ni_family == "hermite" ? 200 : 192;
            return cmd_norm_identity(ni_family, ni_t, ni_theta, ni_nu, ni_kmax, ni_res,
                                     ni_paths);
        }
        if (fs->parsed()) return cmd_full_suite(fs_paths);
    } catch (const std::exception& e) {
        // numeric failures become a failed report on stdout
        std::cout << failure_report(app.get_subcommands().front()->get_name(),
                                    e.what())
                         .dump();
        return 1;
    }
    return 2;
}

} // namespace ortholab::cli

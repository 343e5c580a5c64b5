#include "ortholab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "ortholab/parallel.hpp"
#include "ortholab/specfun.hpp"

namespace ortholab::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

using orthopoly::eval_orthonormal_all;
using orthopoly::recurrence_coeffs;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// phi_n(x), phi_n'(x) and the Christoffel sum sum_{k<n} phi_k(x)^2 from
// the orthonormal recurrence.
struct RecurrenceEval {
    double p_n = 0.0;
    double dp_n = 0.0;
    double christoffel = 0.0; // sum of phi_k^2, k = 0..n-1
    bool overflow = false;
};

RecurrenceEval eval_with_derivative(const FamilySpec& family, int n, double x) {
    RecurrenceEval out;
    double p_prev = 0.0, p_cur = 1.0 / std::sqrt(family.weight_mass());
    double d_prev = 0.0, d_cur = 0.0;
    double chris = p_cur * p_cur;
    for (int k = 0; k < n; ++k) {
        const auto [a_k, b_k] = recurrence_coeffs(family, k);
        const auto b_next = recurrence_coeffs(family, k + 1).second;
        const double p_next = ((x - a_k) * p_cur - b_k * p_prev) / b_next;
        const double d_next = (p_cur + (x - a_k) * d_cur - b_k * d_prev) / b_next;
        p_prev = p_cur;
        p_cur = p_next;
        d_prev = d_cur;
        d_cur = d_next;
        if (k + 1 < n) chris += p_cur * p_cur;
        if (!std::isfinite(p_cur) || std::abs(p_cur) > 1e280 || chris > 1e280) {
            out.overflow = true;
            return out;
        }
    }
    out.p_n = p_cur;
    out.dp_n = d_cur;
    out.christoffel = chris;
    return out;
}

// Gauss-Legendre on [-1,1] as the Jacobi(0,0) rule.
const QuadratureRule& legendre_rule(int n) {
    thread_local int cached_n = -1;
    thread_local QuadratureRule cached;
    if (cached_n != n) {
        cached = gauss_rule(FamilySpec::jacobi(0.0, 0.0), n);
        cached_n = n;
    }
    return cached;
}

// Relative mass of the 1-D Gaussian weight exp(-2x^2/s) outside [-R,R].
double gaussian_tail_rel(double s, double R) {
    return std::erfc(R * std::sqrt(2.0 / s));
}

// Relative mass of the radial weight r^{nu+1} K_nu(a r) beyond R, from the
// exponential bound on K_nu.
double bessel_tail_rel(double nu, double a, double R) {
    const double x = a * R;
    const double corr = 1.0 + (nu + 0.5) / x + std::abs((nu + 0.5) * (nu - 0.5)) / (x * x);
    const double tail = std::sqrt(kPi / 2.0) * std::pow(x, nu + 0.5) * std::exp(-x) * corr;
    const double total = std::exp(nu * std::log(2.0) + specfun::log_gamma(nu + 1.0));
    return tail / total;
}

} // namespace

QuadratureRule gauss_rule(const FamilySpec& family, int n) {
    if (n < 1 || n > 256)
        throw DomainError("gauss_rule: n must lie in [1, 256]");
    family.validate();
    Eigen::VectorXd diag(n), subdiag(n - 1 > 0 ? n - 1 : 1);
    for (int k = 0; k < n; ++k) {
        const auto [a_k, b_k] = recurrence_coeffs(family, k);
        diag[k] = a_k;
        if (k >= 1) subdiag[k - 1] = b_k;
    }
    QuadratureRule rule;
    rule.family = family;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = diag[0];
        rule.weights[0] = family.weight_mass();
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_rule: tridiagonal eigen-solve failed");
    const double mass = family.weight_mass();
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        // polish the eigenvalue with Newton steps on phi_n and take the
        // Christoffel weight 1/sum phi_k(x)^2; falls back to the
        // eigenvector weight when the sum leaves the representable range
        // (extreme Laguerre nodes at large n)
        RecurrenceEval ev{};
        bool polished = false;
        for (int it = 0; it < 3; ++it) {
            ev = eval_with_derivative(family, n, x);
            if (ev.overflow || ev.dp_n == 0.0) break;
            const double dx = ev.p_n / ev.dp_n;
            x -= dx;
            polished = true;
            if (std::abs(dx) <= 1e-15 * (1.0 + std::abs(x))) break;
        }
        if (polished) ev = eval_with_derivative(family, n, x);
        rule.nodes[i] = x;
        if (polished && !ev.overflow && ev.christoffel > 0.0 &&
            std::isfinite(1.0 / ev.christoffel)) {
            rule.weights[i] = 1.0 / ev.christoffel;
        } else {
            const double v0 = solver.eigenvectors()(0, i);
            rule.weights[i] = mass * v0 * v0;
        }
    }
    return rule;
}

CoefficientSeries fourier_coefficients(const std::function<complex(double)>& f,
                                       const FamilySpec& family, int K, int n) {
    if (K < 0) throw DomainError("fourier_coefficients: K must be >= 0");
    const QuadratureRule rule = gauss_rule(family, n);
    std::vector<complex> fw(n);
    std::vector<std::vector<double>> phi(n);
    for (int j = 0; j < n; ++j) {
        fw[j] = rule.weights[j] * f(rule.nodes[j]);
        auto vals = eval_orthonormal_all(family, K, complex(rule.nodes[j], 0.0));
        phi[j].resize(K + 1);
        for (int k = 0; k <= K; ++k) phi[j][k] = vals[k].real();
    }
    CoefficientSeries series;
    series.family = family;
    series.quadrature_order = n;
    series.values.resize(K + 1);
    std::vector<complex> buf(n);
    for (int k = 0; k <= K; ++k) {
        for (int j = 0; j < n; ++j) buf[j] = fw[j] * phi[j][k];
        series.values[k] = parallel::pairwise_sum(buf.data(), buf.size());
    }
    return series;
}

PlanarGridSpec PlanarGridSpec::cartesian_for_hermite(double theta, int degree,
                                                     double peak_shift,
                                                     int resolution) {
    if (!(theta > 1.0)) throw DomainError("cartesian_for_hermite: theta > 1 required");
    PlanarGridSpec grid;
    grid.scheme = PlanarScheme::CartesianTensor;
    grid.extent = std::sqrt((theta + 1.0) / 2.0) * (6.0 + std::sqrt(2.0 * degree + 1.0)) +
                  std::abs(peak_shift);
    grid.resolution = resolution;
    return grid;
}

PlanarGridSpec PlanarGridSpec::polar_for_laguerre(double theta, int degree,
                                                  int resolution) {
    if (!(theta > 1.0)) throw DomainError("polar_for_laguerre: theta > 1 required");
    if (theta > 8.0)
        throw DomainError("polar_for_laguerre: theta <= 8 enforced (growth margin)");
    PlanarGridSpec grid;
    grid.scheme = PlanarScheme::PolarTensor;
    // 10 radial units per polynomial degree: the integrand tail decays at
    // rate 2/(sqrt(theta)+1) per unit r but grows like r^degree, so a
    // 4-per-degree slope loses ground once r is in the tens
    grid.extent = (theta - 1.0) / (2.0 * std::sqrt(theta)) * (50.0 + 10.0 * degree);
    grid.resolution = resolution;
    return grid;
}

PlanarIntegral planar_weighted_integral(const std::function<complex(complex)>& g,
                                        const HermiteThetaWeight& weight,
                                        const PlanarGridSpec& grid) {
    if (!(weight.theta > 1.0))
        throw DomainError("planar_weighted_integral: theta > 1 required");
    if (grid.scheme != PlanarScheme::CartesianTensor)
        throw DomainError("planar_weighted_integral: Hermite weight uses CartesianTensor");
    const double R = grid.extent;
    const int n = grid.resolution;
    const double theta = weight.theta;
    const QuadratureRule& gl = legendre_rule(n);

    std::vector<double> x(n), wx(n), expx(n), expy(n);
    for (int i = 0; i < n; ++i) {
        x[i] = R * gl.nodes[i];
        wx[i] = R * gl.weights[i];
        expx[i] = std::exp(-2.0 * x[i] * x[i] / (theta + 1.0));
        expy[i] = std::exp(-2.0 * x[i] * x[i] / (theta - 1.0));
    }
    const std::size_t total = static_cast<std::size_t>(n) * n;
    std::vector<complex> buf(total);
    parallel::parallel_fill(total, buf.data(), [&](std::size_t idx) {
        const int i = static_cast<int>(idx / n);
        const int j = static_cast<int>(idx % n);
        const complex z(x[i], x[j]);
        return g(z) * (expx[i] * expy[j] * wx[i] * wx[j]);
    });

    PlanarIntegral out;
    out.value = parallel::pairwise_sum(buf.data(), buf.size());
    out.neglected_mass_rel = gaussian_tail_rel(theta + 1.0, R) +
                             gaussian_tail_rel(theta - 1.0, R);
    out.truncation_warning = out.neglected_mass_rel > 1e-12;
    return out;
}

PlanarIntegral planar_weighted_integral(const std::function<complex(complex)>& g,
                                        const LaguerreThetaWeight& weight,
                                        const PlanarGridSpec& grid) {
    if (!(weight.theta > 1.0))
        throw DomainError("planar_weighted_integral: theta > 1 required");
    if (!(weight.nu > -1.0))
        throw DomainError("planar_weighted_integral: nu > -1 required");
    if (grid.scheme != PlanarScheme::PolarTensor)
        throw DomainError("planar_weighted_integral: Laguerre weight uses PolarTensor");
    const double theta = weight.theta;
    const double nu = weight.nu;
    const double R = grid.extent;
    const double a = 2.0 * std::sqrt(theta) / (theta - 1.0);
    const double c = 2.0 / (theta - 1.0);

    // radius: Gauss-Legendre on geometric panels, finer near 0 where the
    // r^{2 nu} component of K_nu has limited smoothness
    const double edges[5] = {0.0, R / 27.0, R / 9.0, R / 3.0, R};
    const int per_panel = std::max(grid.resolution / 4, 8);
    const QuadratureRule& gl = legendre_rule(per_panel);
    std::vector<double> r, wr;
    for (int p = 0; p < 4; ++p) {
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        const double mid = 0.5 * (edges[p + 1] + edges[p]);
        for (int q = 0; q < per_panel; ++q) {
            r.push_back(mid + half * gl.nodes[q]);
            wr.push_back(half * gl.weights[q]);
        }
    }
    const int n_r = static_cast<int>(r.size());
    std::vector<double> radial(n_r);
    for (int q = 0; q < n_r; ++q) {
        const double kv = specfun::bessel_k_ex(nu, a * r[q]).value;
        radial[q] = std::pow(r[q], nu) * kv * r[q] * wr[q];
    }

    const int n_phi = grid.resolution;
    const double wphi = kTwoPi / n_phi;
    std::vector<double> cphi(n_phi), sphi(n_phi);
    for (int j = 0; j < n_phi; ++j) {
        cphi[j] = std::cos(wphi * j);
        sphi[j] = std::sin(wphi * j);
    }

    const std::size_t total = static_cast<std::size_t>(n_r) * n_phi;
    std::vector<complex> buf(total);
    parallel::parallel_fill(total, buf.data(), [&](std::size_t idx) {
        const int q = static_cast<int>(idx / n_phi);
        const int j = static_cast<int>(idx % n_phi);
        const complex z(r[q] * cphi[j], r[q] * sphi[j]);
        return g(z) * (std::exp(c * z.real()) * radial[q] * wphi);
    });

    PlanarIntegral out;
    out.value = parallel::pairwise_sum(buf.data(), buf.size());
    out.neglected_mass_rel = bessel_tail_rel(nu, a, R);
    out.truncation_warning = out.neglected_mass_rel > 1e-12;
    return out;
}

void EllipseContour::validate() const {
    if (!(theta > 1.0)) throw DomainError("EllipseContour: theta > 1 required");
    if (!is_power_of_two(n_nodes) || n_nodes < 64)
        throw DomainError("EllipseContour: n_nodes must be a power of two >= 64");
}

double EllipseContour::semi_major() const {
    return 0.5 * (std::sqrt(theta) + 1.0 / std::sqrt(theta));
}

double EllipseContour::semi_minor() const {
    return 0.5 * (std::sqrt(theta) - 1.0 / std::sqrt(theta));
}

complex ellipse_contour_integral(const std::function<complex(complex)>& g,
                                 const EllipseContour& contour,
                                 const std::function<double(complex)>& rho) {
    contour.validate();
    const int n = contour.n_nodes;
    const double rt = std::sqrt(contour.theta);
    std::vector<complex> buf(n);
    for (int j = 0; j < n; ++j) {
        const double phi = kTwoPi * j / n;
        const complex w = rt * std::exp(complex(0.0, phi));
        const complex z = 0.5 * (w + 1.0 / w);
        const double jac = 0.5 * std::abs(w - 1.0 / w); // |dz/dphi|
        buf[j] = g(z) * rho(z) * jac * (kTwoPi / n);
    }
    return parallel::pairwise_sum(buf.data(), buf.size());
}

complex chebyshev_boundary_gram(double theta, int k, int m, int n_nodes) {
    if (k < 0 || m < 0) throw DomainError("chebyshev_boundary_gram: k, m >= 0");
    EllipseContour contour{theta, n_nodes};
    const int kmax = std::max(k, m);
    auto g = [&](complex z) {
        // Tt_j(z) = 2 T_j(z): Tt_0 = 2, Tt_1 = 2z, Tt_{j+1} = 2z Tt_j - Tt_{j-1}
        complex prev = 2.0, cur = 2.0 * z;
        complex tk = (k == 0) ? prev : cur;
        complex tm = (m == 0) ? prev : cur;
        for (int j = 2; j <= kmax; ++j) {
            const complex next = 2.0 * z * cur - prev;
            prev = cur;
            cur = next;
            if (j == k) tk = cur;
            if (j == m) tm = cur;
        }
        return tk * std::conj(tm);
    };
    auto rho = [](complex z) { return 1.0 / std::sqrt(std::abs(z * z - 1.0)); };
    return ellipse_contour_integral(g, contour, rho) / kTwoPi;
}

} // namespace ortholab::quadrature

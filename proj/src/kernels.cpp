#include "ortholab/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace ortholab::kernels {

namespace {

constexpr double kPi = 3.14159265358979323846;

using orthopoly::tau_gegenbauer;
using orthopoly::tau_jacobi;
using specfun::log_gamma;

complex mehler(double theta, complex z, complex ub) {
    const double pref = theta / std::sqrt(kPi * (theta * theta - 1.0));
    return pref * std::exp((2.0 * z * ub * theta - z * z - ub * ub) /
                           (theta * theta - 1.0));
}

complex reduced_hermite_k(double theta, complex prod) {
    const double pref = theta / std::sqrt(kPi * (theta * theta - 1.0));
    return pref * std::exp(2.0 * prod * theta / (theta * theta - 1.0));
}

complex reduced_laguerre_k(double theta, double nu, complex prod,
                           const SeriesControl& ctrl) {
    const double pref = std::pow(theta / (theta - 1.0), nu + 1.0);
    const complex w = theta * prod / ((theta - 1.0) * (theta - 1.0));
    return pref * specfun::besseli_entire(nu, w, ctrl);
}

complex hardy_hille(double theta, double nu, complex z, complex ub,
                    const SeriesControl& ctrl) {
    return std::exp(-(z + ub) / (theta - 1.0)) *
           reduced_laguerre_k(theta, nu, z * ub, ctrl);
}

// Gegenbauer 2F1 factor shared by GegenbauerClosed and HatK.
complex gegenbauer_2f1_factor(double theta, double lambda, complex z, complex ub,
                              complex& denom, const SeriesControl& ctrl) {
    denom = theta * theta - 2.0 * theta * z * ub + 1.0;
    const complex y =
        4.0 * theta * theta * (1.0 - z * z) * (1.0 - ub * ub) / (denom * denom);
    if (std::abs(y) > 0.97)
        throw GuardError("kernel_closed: Gegenbauer 2F1 argument guard |y| <= 0.97 failed");
    return specfun::gauss_2f1(0.5 * (lambda + 1.0), 0.5 * (lambda + 2.0),
                              lambda + 0.5, y, ctrl);
}

double pochhammer_sqrt_log(double lambda, int k) {
    // 0.5 * ln( (lambda)_k / k! )
    return 0.5 * (log_gamma(lambda + k) - log_gamma(lambda) - log_gamma(k + 1.0));
}

// ln a_k^lambda for the hat-kernel coefficient sequence.
double log_hatk_coef(double lambda, int k) {
    const double a = 0.5 * (lambda + 1.0);
    const double b = 0.5 * (lambda + 2.0);
    const double c = lambda + 0.5;
    return log_gamma(a + k) - log_gamma(a) + log_gamma(b + k) - log_gamma(b) -
           (log_gamma(c + k) - log_gamma(c)) - log_gamma(k + 1.0);
}

// ln of the (k,l)-dependent part of a^{alpha,beta}_{k,l}.
double log_jacobi_coef(double alpha, double beta, int k, int l) {
    const double a = 0.5 * (alpha + beta) + 1.0;
    const double b = 0.5 * (alpha + beta + 3.0);
    return log_gamma(a + k + l) - log_gamma(a) + log_gamma(b + k + l) -
           log_gamma(b) - (log_gamma(alpha + 1.0 + k) - log_gamma(alpha + 1.0)) -
           (log_gamma(beta + 1.0 + l) - log_gamma(beta + 1.0)) -
           log_gamma(k + 1.0) - log_gamma(l + 1.0);
}

} // namespace

double EllipseDomain::semi_major() const {
    return 0.5 * (std::sqrt(theta) + 1.0 / std::sqrt(theta));
}

double EllipseDomain::semi_minor() const {
    return 0.5 * (std::sqrt(theta) - 1.0 / std::sqrt(theta));
}

double EllipseDomain::boundary_defect(complex z) const {
    const double rt = std::sqrt(theta);
    return std::abs(z - 1.0) + std::abs(z + 1.0) - (rt + 1.0 / rt);
}

double h_lambda_theta(double theta, double lambda) {
    return kPi * std::pow(theta, 2.0 * lambda) /
           (tau_gegenbauer(lambda) * std::pow(theta * theta + 1.0, lambda));
}

KernelSpec KernelSpec::hermite_mehler(double theta) {
    KernelSpec s{KernelKind::HermiteMehler, theta};
    s.validate();
    return s;
}
KernelSpec KernelSpec::laguerre_hardy_hille(double theta, double nu) {
    KernelSpec s{KernelKind::LaguerreHardyHille, theta};
    s.nu = nu;
    s.validate();
    return s;
}
KernelSpec KernelSpec::jacobi_bailey(double theta, double alpha, double beta) {
    KernelSpec s{KernelKind::JacobiBailey, theta};
    s.alpha = alpha;
    s.beta = beta;
    s.validate();
    return s;
}
KernelSpec KernelSpec::gegenbauer_closed(double theta, double lambda) {
    KernelSpec s{KernelKind::GegenbauerClosed, theta};
    s.lambda = lambda;
    s.validate();
    return s;
}
KernelSpec KernelSpec::hat_k(double theta, double lambda) {
    KernelSpec s{KernelKind::HatK, theta};
    s.lambda = lambda;
    s.validate();
    return s;
}
KernelSpec KernelSpec::bergman_selberg(double theta, double lambda) {
    KernelSpec s{KernelKind::BergmanSelberg, theta};
    s.lambda = lambda;
    s.validate();
    return s;
}
KernelSpec KernelSpec::reduced_hermite(double theta) {
    KernelSpec s{KernelKind::ReducedHermite, theta};
    s.validate();
    return s;
}
KernelSpec KernelSpec::reduced_laguerre(double theta, double nu) {
    KernelSpec s{KernelKind::ReducedLaguerre, theta};
    s.nu = nu;
    s.validate();
    return s;
}

void KernelSpec::validate() const {
    if (!(theta > 1.0)) throw DomainError("KernelSpec: theta > 1 required");
    switch (kind) {
    case KernelKind::HermiteMehler:
    case KernelKind::ReducedHermite:
        return;
    case KernelKind::LaguerreHardyHille:
    case KernelKind::ReducedLaguerre:
        if (!(nu > -1.0)) throw DomainError("KernelSpec: nu > -1 required");
        return;
    case KernelKind::JacobiBailey:
        if (!(alpha > -1.0 && beta > -1.0))
            throw DomainError("KernelSpec: alpha, beta > -1 required");
        return;
    case KernelKind::GegenbauerClosed:
        if (!(lambda >= 0.0)) throw DomainError("KernelSpec: lambda >= 0 required");
        return;
    case KernelKind::HatK:
        if (!(lambda > -0.5)) throw DomainError("KernelSpec: lambda > -1/2 required");
        return;
    case KernelKind::BergmanSelberg:
        if (!(lambda > 0.0)) throw DomainError("KernelSpec: lambda > 0 required");
        return;
    }
    throw DomainError("KernelSpec: unknown kind");
}

FamilySpec KernelSpec::series_family() const {
    switch (kind) {
    case KernelKind::HermiteMehler: return FamilySpec::hermite();
    case KernelKind::LaguerreHardyHille: return FamilySpec::laguerre(nu);
    case KernelKind::JacobiBailey: return FamilySpec::jacobi(alpha, beta);
    case KernelKind::GegenbauerClosed: return FamilySpec::gegenbauer(lambda);
    default:
        throw DomainError("KernelSpec: kernel has no bilinear polynomial expansion");
    }
}

complex kernel_closed(const KernelSpec& spec, complex z, complex u,
                      const SeriesControl& ctrl) {
    spec.validate();
    const complex ub = std::conj(u);
    const double theta = spec.theta;
    switch (spec.kind) {
    case KernelKind::HermiteMehler:
        return mehler(theta, z, ub);
    case KernelKind::ReducedHermite:
        return reduced_hermite_k(theta, z * ub);
    case KernelKind::LaguerreHardyHille:
        return hardy_hille(theta, spec.nu, z, ub, ctrl);
    case KernelKind::ReducedLaguerre:
        return reduced_laguerre_k(theta, spec.nu, z * ub, ctrl);
    case KernelKind::JacobiBailey: {
        const EllipseDomain dom{theta};
        if (!dom.contains(z) || !dom.contains(u))
            throw DomainError("kernel_closed: JacobiBailey points must lie in E_theta");
        const double a = 0.5 * (spec.alpha + spec.beta) + 1.0;
        const double b = a + 0.5;
        const double denom = (theta + 1.0) * (theta + 1.0);
        const complex t = theta * (1.0 - z) * (1.0 - ub) / denom;
        const complex s = theta * (1.0 + z) * (1.0 + ub) / denom;
        const double pref =
            std::exp((spec.alpha + spec.beta + 1.0) * std::log(theta) +
                     std::log(theta - 1.0) -
                     (spec.alpha + spec.beta + 2.0) * std::log(theta + 1.0)) /
            tau_jacobi(spec.alpha, spec.beta);
        return pref *
               specfun::appell_f4(a, b, spec.alpha + 1.0, spec.beta + 1.0, t, s, ctrl);
    }
    case KernelKind::GegenbauerClosed: {
        const EllipseDomain dom{theta};
        if (!dom.contains(z) || !dom.contains(u))
            throw DomainError("kernel_closed: GegenbauerClosed points must lie in E_theta");
        complex denom;
        const complex f = gegenbauer_2f1_factor(theta, spec.lambda, z, ub, denom, ctrl);
        const double pref = std::pow(theta, 2.0 * spec.lambda) *
                            (theta * theta - 1.0) / tau_gegenbauer(spec.lambda);
        return pref * f / std::pow(denom, complex(spec.lambda + 1.0));
    }
    case KernelKind::HatK: {
        const EllipseDomain dom{theta};
        if (!dom.contains(z) || !dom.contains(u))
            throw DomainError("kernel_closed: HatK points must lie in E_theta");
        complex denom;
        const complex f = gegenbauer_2f1_factor(theta, spec.lambda, z, ub, denom, ctrl);
        return (theta * theta - 1.0) / (kPi * denom) * f;
    }
    case KernelKind::BergmanSelberg: {
        const double radius = std::sqrt((theta * theta + 1.0) / (2.0 * theta));
        if (!(std::abs(z) < radius && std::abs(u) < radius))
            throw DomainError("kernel_closed: BergmanSelberg points must satisfy |z| < sqrt((theta^2+1)/(2 theta))");
        const complex denom = 1.0 - 2.0 * theta / (theta * theta + 1.0) * z * ub;
        return h_lambda_theta(theta, spec.lambda) /
               std::pow(denom, complex(spec.lambda));
    }
    }
    throw DomainError("kernel_closed: unknown kind");
}

SeriesEval kernel_series(const FamilySpec& family, double theta, complex z,
                         complex u, int K, const SeriesControl& ctrl) {
    if (!(theta > 1.0)) throw DomainError("kernel_series: theta > 1 required");
    if (K < 0) throw DomainError("kernel_series: K >= 0 required");
    ctrl.validate();
    const auto phi_z = orthopoly::eval_orthonormal_all(family, K, z);
    const auto phi_u = orthopoly::eval_orthonormal_all(family, K, u);
    SeriesEval out;
    complex sum = 0.0;
    double inv_pow = 1.0;
    int small_run = 0;
    for (int k = 0; k <= K; ++k) {
        const complex term = phi_z[k] * std::conj(phi_u[k]) * inv_pow;
        sum += term;
        out.last_term_mag = std::abs(term);
        out.terms_used = k + 1;
        inv_pow /= theta;
        if (out.last_term_mag <= ctrl.rel_tol * std::abs(sum)) {
            if (++small_run >= ctrl.consecutive_small) break;
        } else {
            small_run = 0;
        }
    }
    out.value = sum;
    return out;
}

double gram_min_eig(const KernelSpec& spec, const std::vector<complex>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 1 || n > 32)
        throw DomainError("gram_min_eig: 1 <= n <= 32 points required");
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = kernel_closed(spec, points[i], points[j]);
    const Eigen::MatrixXcd herm = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double factorization_residual(FamilyKind kind, double theta, complex z,
                              complex u, double nu) {
    if (!(theta > 1.0)) throw DomainError("factorization_residual: theta > 1");
    complex full, reduced, s_z, s_u;
    if (kind == FamilyKind::Hermite) {
        full = kernel_closed(KernelSpec::hermite_mehler(theta), z, u);
        reduced = kernel_closed(KernelSpec::reduced_hermite(theta), z, u);
        s_z = std::exp(-z * z / (theta * theta - 1.0));
        s_u = std::exp(-u * u / (theta * theta - 1.0));
    } else if (kind == FamilyKind::Laguerre) {
        full = kernel_closed(KernelSpec::laguerre_hardy_hille(theta, nu), z, u);
        reduced = kernel_closed(KernelSpec::reduced_laguerre(theta, nu), z, u);
        s_z = std::exp(-z / (theta - 1.0));
        s_u = std::exp(-u / (theta - 1.0));
    } else {
        throw DomainError("factorization_residual: kind must be Hermite or Laguerre");
    }
    return std::abs(full - s_z * std::conj(s_u) * reduced) / std::abs(full);
}

double gegenbauer_reduction_residual(double theta, double lambda, complex z,
                                     complex u, const SeriesControl& ctrl) {
    if (!(lambda >= 0.0))
        throw DomainError("gegenbauer_reduction_residual: lambda >= 0");
    const complex jac = kernel_closed(
        KernelSpec::jacobi_bailey(theta, lambda - 0.5, lambda - 0.5), z, u, ctrl);
    const complex geg =
        kernel_closed(KernelSpec::gegenbauer_closed(theta, lambda), z, u, ctrl);
    return std::abs(jac - geg) / std::abs(geg);
}

RatioScanResult hatk_ratio_scan(double lambda, double mu, int k_max) {
    if (!(lambda > -0.5 && mu > -0.5))
        throw DomainError("hatk_ratio_scan: lambda, mu > -1/2 required");
    if (k_max < 50) throw DomainError("hatk_ratio_scan: k_max >= 50 required");
    RatioScanResult out;
    out.inf = out.sup = 1.0; // k = 0 term
    for (int k = 0; k <= k_max; ++k) {
        const double r = std::exp(log_hatk_coef(mu, k) - log_hatk_coef(lambda, k));
        out.inf = std::min(out.inf, r);
        out.sup = std::max(out.sup, r);
        out.last = r;
    }
    return out;
}

JacobiRatioScanResult jacobi_ratio_scan(double alpha, double beta, double gamma,
                                        int kl_max) {
    if (!(alpha > -1.0 && beta > -1.0 && gamma > -1.0))
        throw DomainError("jacobi_ratio_scan: parameters must exceed -1");
    if (!(gamma >= std::max(alpha, beta)))
        throw DomainError("jacobi_ratio_scan: gamma >= max(alpha, beta) required");
    if (kl_max < 50) throw DomainError("jacobi_ratio_scan: kl_max >= 50 required");
    JacobiRatioScanResult out;
    out.inf = out.sup = 1.0; // (k,l) = (0,0)
    for (int k = 0; k <= kl_max; ++k) {
        for (int l = 0; l <= kl_max; ++l) {
            const double r = std::exp(log_jacobi_coef(alpha, beta, k, l) -
                                      log_jacobi_coef(gamma, gamma, k, l));
            out.inf = std::min(out.inf, r);
            out.sup = std::max(out.sup, r);
        }
    }
    return out;
}

complex gamma_k_eval(double theta, double lambda, int k, complex z) {
    if (!(theta > 1.0 && lambda > 0.0))
        throw DomainError("gamma_k_eval: theta > 1 and lambda > 0 required");
    if (k < 0) throw DomainError("gamma_k_eval: k >= 0 required");
    const double radius = std::sqrt((theta * theta + 1.0) / (2.0 * theta));
    if (!(std::abs(z) < radius))
        throw DomainError("gamma_k_eval: |z| < sqrt((theta^2+1)/(2 theta)) required");
    const double log_coef =
        0.5 * std::log(h_lambda_theta(theta, lambda)) +
        pochhammer_sqrt_log(lambda, k) +
        0.5 * k * std::log(2.0 * theta / (theta * theta + 1.0));
    return std::exp(log_coef) * std::pow(z, k);
}

double alpha_max(double theta, double lambda, int k) {
    if (!(theta > 1.0 && lambda > 0.0))
        throw DomainError("alpha_max: theta > 1 and lambda > 0 required");
    if (k < 0) throw DomainError("alpha_max: k >= 0 required");
    const double ratio = (theta + 1.0) / std::sqrt(2.0 * (theta * theta + 1.0));
    return std::exp(0.5 * std::log(h_lambda_theta(theta, lambda)) +
                    pochhammer_sqrt_log(lambda, k) + k * std::log(ratio));
}

} // namespace ortholab::kernels

#ifndef ORTHOLAB_KERNELS_HPP
#define ORTHOLAB_KERNELS_HPP

#include <complex>
#include <vector>

#include "ortholab/orthopoly.hpp"
#include "ortholab/specfun.hpp"

namespace ortholab::kernels {

using complex = std::complex<double>;
using orthopoly::FamilyKind;
using orthopoly::FamilySpec;
using specfun::SeriesControl;

// The ellipse E_theta = { z : |z-1| + |z+1| < sqrt(theta) + 1/sqrt(theta) },
// foci at +-1; natural domain of the Jacobi-type kernels.
struct EllipseDomain {
    double theta = 2.0;

    double semi_major() const;
    double semi_minor() const;
    // |z-1| + |z+1| - (sqrt(theta) + 1/sqrt(theta)); negative inside.
    double boundary_defect(complex z) const;
    bool contains(complex z) const { return boundary_defect(z) < 0.0; }
};

// h_lambda^theta = pi theta^{2 lambda} / (tau(lambda) (theta^2+1)^lambda),
// the Bergman-Selberg normalization constant.
double h_lambda_theta(double theta, double lambda);

enum class KernelKind {
    HermiteMehler,
    LaguerreHardyHille,
    JacobiBailey,
    GegenbauerClosed,
    HatK,
    BergmanSelberg,
    ReducedHermite,
    ReducedLaguerre,
};

// A closed-form reproducing kernel with its geometric weight theta and
// family parameters.  All kernels are evaluated as K(z, conj(u)); the
// conjugation of the second argument is internal.
struct KernelSpec {
    KernelKind kind = KernelKind::HermiteMehler;
    double theta = 2.0;
    double nu = 0.0;     // LaguerreHardyHille / ReducedLaguerre, nu > -1
    double alpha = 0.0;  // JacobiBailey, alpha > -1
    double beta = 0.0;   // JacobiBailey, beta > -1
    double lambda = 0.0; // GegenbauerClosed (>= 0), HatK (> -1/2),
                         // BergmanSelberg (> 0)

    static KernelSpec hermite_mehler(double theta);
    static KernelSpec laguerre_hardy_hille(double theta, double nu);
    static KernelSpec jacobi_bailey(double theta, double alpha, double beta);
    static KernelSpec gegenbauer_closed(double theta, double lambda);
    static KernelSpec hat_k(double theta, double lambda);
    static KernelSpec bergman_selberg(double theta, double lambda);
    static KernelSpec reduced_hermite(double theta);
    static KernelSpec reduced_laguerre(double theta, double nu);

    void validate() const;
    // The bilinear-series family for kernels that have one.
    FamilySpec series_family() const;
};

// Closed-form value of K(z, conj u).  Throws DomainError outside the
// kernel's natural domain and GuardError when a hypergeometric argument
// guard fails.
complex kernel_closed(const KernelSpec& spec, complex z, complex u,
                      const SeriesControl& ctrl = {});

struct SeriesEval {
    complex value{};
    double last_term_mag = 0.0; // tail diagnostic
    int terms_used = 0;
};

// Truncated bilinear expansion sum_{k<=K} phi_k(z) conj(phi_k(u)) theta^{-k}.
SeriesEval kernel_series(const FamilySpec& family, double theta, complex z,
                         complex u, int K, const SeriesControl& ctrl = {});

// Minimum eigenvalue of the Hermitian Gram matrix G_ij = K(p_i, conj p_j),
// 1 <= n <= 32 points.
double gram_min_eig(const KernelSpec& spec, const std::vector<complex>& points);

// Relative residual of the factorization K(z,conj u) =
// s(z) conj(s(u)) K_reduced(z conj u) with s(z) = exp(-z^2/(theta^2-1))
// (Hermite) or exp(-z/(theta-1)) (Laguerre).  Exact identity; the residual
// is pure roundoff.
double factorization_residual(FamilyKind kind, double theta, complex z,
                              complex u, double nu = 0.0);

// Relative difference between JacobiBailey(alpha=beta=lambda-1/2) and
// GegenbauerClosed(lambda) at (z, u).
double gegenbauer_reduction_residual(double theta, double lambda, complex z,
                                     complex u, const SeriesControl& ctrl = {});

struct RatioScanResult {
    double inf = 0.0;
    double sup = 0.0;
    double last = 0.0;
};

// Scan of a_k^mu / a_k^lambda for the hat-kernel coefficient sequences
// a_k^l = ((l+1)/2)_k ((l+2)/2)_k / ((l+1/2)_k k!), k = 0..k_max.
RatioScanResult hatk_ratio_scan(double lambda, double mu, int k_max);

struct JacobiRatioScanResult {
    double inf = 0.0;
    double sup = 0.0;
};

// Scan of the (k,l)-dependent part of a^{alpha,beta}_{k,l} /
// a^{gamma,gamma}_{k,l} over 0 <= k,l <= kl_max (the theta-dependent
// prefactor is constant in k,l and excluded).  Requires
// gamma >= max(alpha, beta).
JacobiRatioScanResult jacobi_ratio_scan(double alpha, double beta, double gamma,
                                        int kl_max);

// gamma_k(z) = sqrt(h_lambda^theta) sqrt((lambda)_k / k!)
//              (2 theta/(theta^2+1))^{k/2} z^k, the Bergman-Selberg
// orthonormal basis; defined for |z| < sqrt((theta^2+1)/(2 theta)).
complex gamma_k_eval(double theta, double lambda, int k, complex z);

// max over the boundary of E_theta of |gamma_k|:
// sqrt(h) sqrt((lambda)_k/k!) ((theta+1)/sqrt(2(theta^2+1)))^k.
double alpha_max(double theta, double lambda, int k);

} // namespace ortholab::kernels

#endif

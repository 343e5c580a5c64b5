#ifndef ORTHOLAB_SUMMABILITY_HPP
#define ORTHOLAB_SUMMABILITY_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ortholab/coefficients.hpp"
#include "ortholab/quadrature.hpp"

namespace ortholab::summability {

using complex = std::complex<double>;
using orthopoly::FamilySpec;
using quadrature::EllipseContour;
using quadrature::PlanarGridSpec;

// Structured outcome of one identity check.  pass holds iff
// rel_err <= tolerance, or abs_err <= tolerance when expected == 0.
struct VerificationReport {
    std::string identity;
    complex computed{};
    complex expected{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    long long runtime_ms = 0;
};

VerificationReport make_report(std::string identity, complex computed,
                               complex expected, double tolerance,
                               long long runtime_ms = 0);

enum class Verdict { Converged, Diverging, Inconclusive };

std::string to_string(Verdict v);

struct WeightedSumResult {
    std::vector<double> partial_sums; // S_0 .. S_K
    bool overflow = false;            // a term left the representable range
};

// S_j = sum_{k<=j} |f_k|^2 theta^k.
WeightedSumResult weighted_sum(const CoefficientSeries& coeffs, double theta,
                               int K);

// Copy of the series with trailing coefficients below
// rel_floor * max_k |f_k| removed.  Quadrature-derived coefficients sit on
// a rounding-noise floor; geometric weights theta^k amplify that noise, so
// analyses run on the trimmed series.
CoefficientSeries trim_trailing_noise(const CoefficientSeries& coeffs,
                                      double rel_floor = 1e-12);

// Verdict from the terms u_k = |f_k|^2 theta^k of a (trimmed) series,
// with h = min(8, #terms / 2): Diverging when the last h terms increase
// strictly (or a term overflowed); Converged when they are non-increasing
// and the h-step geometric-mean ratio (u_last / u_{last-h})^{1/h} is
// <= 0.99; otherwise Inconclusive.
Verdict summability_verdict(const std::vector<double>& terms, bool overflow);

// Full pipeline for quadrature-derived coefficients: trims the rounding
// tail, forms the weighted sums, and decides the verdict.  A trimmed tail
// that sits >= 6 orders below the last kept coefficient marks a
// terminated (finite) expansion, which converges for every theta.
struct SummabilityAnalysis {
    CoefficientSeries trimmed;
    int removed = 0;          // trailing coefficients dropped
    double max_removed = 0.0; // largest dropped magnitude
    std::vector<double> partial_sums;
    Verdict verdict = Verdict::Inconclusive;
};

SummabilityAnalysis analyze_summability(const CoefficientSeries& coeffs,
                                        double theta, double rel_floor = 1e-12);

struct RadiusEstimate {
    double value = 0.0; // +inf when flag == Infinite
    enum class Flag { Finite, Infinite, Inconclusive } flag = Flag::Finite;
};

// Convergence threshold theta* = 1 / limsup |f_k|^{2/k}.  The limsup is
// estimated by two-point tail slopes |f_k / f_j|^{2/(k-j)} with j ~ k/2,
// maximized over the last quarter of the nonzero coefficients; the slope
// form cancels constant and polynomial prefactors that bias the plain
// |f_k|^{2/k} root upward.  Requires at least 16 nonzero coefficients.
// Quadrature-derived series should be noise-trimmed first.
RadiusEstimate radius_estimate(const CoefficientSeries& coeffs);

// Sweep of the weighted-sum analysis across a theta grid, with the
// theta-independent convergence-threshold estimate.
struct SummabilityReport {
    std::vector<double> theta_grid;
    std::vector<std::vector<double>> partial_sums; // S_j per theta
    std::vector<Verdict> verdicts;
    bool radius_available = false;
    RadiusEstimate radius;
    int kept_terms = 0; // length of the noise-trimmed series
};

SummabilityReport summability_report(const CoefficientSeries& coeffs,
                                     const std::vector<double>& theta_grid);

// Theorem-style norm identity for Hermite expansions: compares
// sum_k |f_k|^2 theta^k for f(x) = exp(2xt - t^2) against
// (2/sqrt(pi(theta^2-1))) int |f(z)|^2
//   exp[-2((Re z)^2/(theta+1) + (Im z)^2/(theta-1))] dsigma.
VerificationReport hermite_norm_identity(double t, double theta,
                                         const PlanarGridSpec& grid, int K);

// Laguerre analogue: f(x) = (1-t)^{-nu-1} exp(-xt/(1-t)) and the
// Bessel-weighted area integral with prefactor
// 2 theta^{-nu/2} / (pi (theta-1)).
VerificationReport laguerre_norm_identity(double t, double theta, double nu,
                                          const PlanarGridSpec& grid, int K);

// Complex-plane orthogonality of the standardly normalized polynomials:
// entry (k,m) integrates StandardPoly_k(z) conj(StandardPoly_m(z)) against
// the theta weight and compares with delta_km pi (2 theta)^k k! (Hermite)
// or delta_km Gamma(k+nu+1) theta^k / k! (Laguerre).  Off-diagonal entries
// are checked in absolute terms against offdiag_tol_scale times the
// largest diagonal value.
std::vector<std::vector<VerificationReport>> orthogonality_matrix(
    orthopoly::FamilyKind kind, double theta, double nu, int k_max,
    const PlanarGridSpec& grid, double diag_tol, double offdiag_tol_scale);

struct MembershipReport {
    CoefficientSeries coeffs;         // quadrature-derived, untrimmed
    std::vector<double> partial_sums; // of the trimmed series
    Verdict verdict = Verdict::Inconclusive;
    double boundary_norm = 0.0; // contour integral of |f|^2 |dz|
    double ratio = 0.0;         // S_K / boundary_norm
    bool radius_available = false; // needs >= 16 above-noise coefficients
    RadiusEstimate radius;
};

// Jacobi-side membership evidence for f holomorphic on a neighbourhood of
// the closed ellipse: weighted-sum behaviour of the Fourier coefficients
// at theta, the Szego boundary norm, and their ratio.
MembershipReport jacobi_membership_report(const std::function<complex(double)>& f_real,
                                          const std::function<complex(complex)>& f_complex,
                                          const FamilySpec& family, double theta,
                                          int K, const EllipseContour& contour);

} // namespace ortholab::summability

#endif

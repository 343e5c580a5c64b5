#include "ortholab/summability.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "ortholab/specfun.hpp"

namespace ortholab::summability {

namespace {

constexpr double kPi = 3.14159265358979323846;

using orthopoly::FamilyKind;
using specfun::log_gamma;

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<double> terms_of(const CoefficientSeries& coeffs, double theta) {
    std::vector<double> u(coeffs.values.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        u[k] = std::norm(coeffs.values[k]) * std::pow(theta, static_cast<double>(k));
    return u;
}

// mixed gate: quadrature coefficients must match the analytic values to
// rel 1e-9 where they stand above the floor abs 1e-12 * max|f|
bool coefficients_gate(const CoefficientSeries& got,
                       const std::vector<complex>& expected) {
    double max_mag = 0.0;
    for (const auto& v : expected) max_mag = std::max(max_mag, std::abs(v));
    const std::size_t n = std::min(got.values.size(), expected.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double err = std::abs(got.values[k] - expected[k]);
        if (err > std::max(1e-9 * std::abs(expected[k]), 1e-12 * max_mag))
            return false;
    }
    return true;
}

} // namespace

VerificationReport make_report(std::string identity, complex computed,
                               complex expected, double tolerance,
                               long long runtime_ms) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.computed = computed;
    r.expected = expected;
    r.tolerance = tolerance;
    r.runtime_ms = runtime_ms;
    r.abs_err = std::abs(computed - expected);
    if (expected == complex(0.0, 0.0)) {
        r.rel_err = r.abs_err;
        r.pass = r.abs_err <= tolerance;
    } else {
        r.rel_err = r.abs_err / std::abs(expected);
        r.pass = r.rel_err <= tolerance;
    }
    return r;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Converged: return "Converged";
    case Verdict::Diverging: return "Diverging";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

WeightedSumResult weighted_sum(const CoefficientSeries& coeffs, double theta,
                               int K) {
    if (!(theta > 1.0)) throw DomainError("weighted_sum: theta > 1 required");
    if (coeffs.values.empty()) throw DomainError("weighted_sum: empty series");
    if (K < 0 || K >= static_cast<int>(coeffs.values.size()))
        K = static_cast<int>(coeffs.values.size()) - 1;
    WeightedSumResult out;
    out.partial_sums.reserve(K + 1);
    double s = 0.0;
    for (int k = 0; k <= K; ++k) {
        const double term =
            std::norm(coeffs.values[k]) * std::pow(theta, static_cast<double>(k));
        if (!std::isfinite(term) || term > 1e300) {
            out.overflow = true;
            break;
        }
        s += term;
        out.partial_sums.push_back(s);
    }
    return out;
}

CoefficientSeries trim_trailing_noise(const CoefficientSeries& coeffs,
                                      double rel_floor) {
    double max_mag = 0.0;
    for (const auto& v : coeffs.values) max_mag = std::max(max_mag, std::abs(v));
    CoefficientSeries out = coeffs;
    const double floor = rel_floor * max_mag;
    while (out.values.size() > 1 && std::abs(out.values.back()) < floor)
        out.values.pop_back();
    return out;
}

Verdict summability_verdict(const std::vector<double>& terms, bool overflow) {
    if (overflow) return Verdict::Diverging;
    const int n = static_cast<int>(terms.size());
    const int h = std::min(8, n / 2); // trend window stays in the tail half
    if (h < 3) return Verdict::Inconclusive;
    bool increasing = true, non_increasing = true;
    for (int k = n - h; k < n; ++k) {
        if (terms[k] <= terms[k - 1]) increasing = false;
        if (terms[k] > terms[k - 1]) non_increasing = false;
    }
    if (increasing) return Verdict::Diverging;
    // h-step geometric-mean ratio; the mean over several steps damps the
    // polynomial-prefactor bias of single-term ratios
    if (non_increasing && terms[n - 1 - h] > 0.0) {
        const double rhat = std::pow(terms[n - 1] / terms[n - 1 - h], 1.0 / h);
        if (rhat <= 0.99) return Verdict::Converged;
    }
    return Verdict::Inconclusive;
}

SummabilityAnalysis analyze_summability(const CoefficientSeries& coeffs,
                                        double theta, double rel_floor) {
    SummabilityAnalysis out;
    out.trimmed = trim_trailing_noise(coeffs, rel_floor);
    out.removed = static_cast<int>(coeffs.values.size() - out.trimmed.values.size());
    for (std::size_t k = out.trimmed.values.size(); k < coeffs.values.size(); ++k)
        out.max_removed = std::max(out.max_removed, std::abs(coeffs.values[k]));

    const auto sums = weighted_sum(out.trimmed, theta,
                                   static_cast<int>(out.trimmed.values.size()) - 1);
    out.partial_sums = sums.partial_sums;

    // a cliff of >= 6 orders between the last kept coefficient and the
    // dropped tail marks a numerically terminated expansion: the dropped
    // coefficients are rounding noise of an exact zero, not the
    // continuation of a decay trend, so the sum is finite at every theta
    const double last_kept = std::abs(out.trimmed.values.back());
    if (!sums.overflow && out.removed >= 4 &&
        (out.max_removed == 0.0 || last_kept >= 1e6 * out.max_removed)) {
        out.verdict = Verdict::Converged;
        return out;
    }
    // trend analysis over the above-floor terms only: even/odd families
    // interleave exact zeros that carry no trend information
    double max_mag = 0.0;
    for (const auto& v : out.trimmed.values) max_mag = std::max(max_mag, std::abs(v));
    const auto all_terms = terms_of(out.trimmed, theta);
    std::vector<double> terms;
    terms.reserve(all_terms.size());
    for (std::size_t k = 0; k < all_terms.size(); ++k)
        if (std::abs(out.trimmed.values[k]) >= rel_floor * max_mag)
            terms.push_back(all_terms[k]);
    out.verdict = summability_verdict(terms, sums.overflow);
    return out;
}

RadiusEstimate radius_estimate(const CoefficientSeries& coeffs) {
    // indices of nonzero coefficients (even/odd families interleave zeros)
    std::vector<int> kept;
    for (int k = 0; k < static_cast<int>(coeffs.values.size()); ++k)
        if (std::abs(coeffs.values[k]) > 0.0) kept.push_back(k);
    if (kept.size() < 16)
        throw DomainError("radius_estimate: needs at least 16 nonzero coefficients");

    // two-point tail slopes m_k = |f_k / f_j|^{2/(k-j)} with j the kept
    // index nearest k/2; the slope bias from a k^p prefactor shrinks like
    // p/k, so the maximum runs over the last quarter of the kept indices
    std::vector<double> slopes;
    const std::size_t tail_begin = (3 * kept.size()) / 4;
    for (std::size_t pos = tail_begin; pos < kept.size(); ++pos) {
        const int k = kept[pos];
        const int target = k / 2;
        std::size_t jpos = 0;
        int best = std::numeric_limits<int>::max();
        for (std::size_t q = 0; q < pos; ++q) {
            const int d = std::abs(kept[q] - target);
            if (d < best) {
                best = d;
                jpos = q;
            }
        }
        const int j = kept[jpos];
        if (k - j < 4) continue;
        const double lnr = (std::log(std::abs(coeffs.values[k])) -
                            std::log(std::abs(coeffs.values[j]))) /
                           (k - j);
        slopes.push_back(std::exp(2.0 * lnr));
    }
    if (slopes.size() < 3)
        throw DomainError("radius_estimate: tail too short for the slope estimator");

    RadiusEstimate out;
    const double m_max = *std::max_element(slopes.begin(), slopes.end());
    const double m_min = *std::min_element(slopes.begin(), slopes.end());
    bool monotone_dec = true, monotone_inc = true;
    for (std::size_t i = 1; i < slopes.size(); ++i) {
        if (slopes[i] > slopes[i - 1] * (1.0 + 1e-12)) monotone_dec = false;
        if (slopes[i] < slopes[i - 1] * (1.0 - 1e-12)) monotone_inc = false;
    }

    // |f_k|^{2/k} -> 0: the root estimate has collapsed far below the
    // desk-scale theta range and is still falling
    if (m_max < 0.05 && monotone_dec) {
        out.flag = RadiusEstimate::Flag::Infinite;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    // oscillation without a trend defeats the tail estimate
    if ((m_max - m_min) / m_max > 0.5 && !monotone_dec && !monotone_inc) {
        out.flag = RadiusEstimate::Flag::Inconclusive;
        out.value = 1.0 / m_max;
        return out;
    }
    out.flag = RadiusEstimate::Flag::Finite;
    out.value = 1.0 / m_max;
    return out;
}

SummabilityReport summability_report(const CoefficientSeries& coeffs,
                                     const std::vector<double>& theta_grid) {
    if (theta_grid.empty())
        throw DomainError("summability_report: empty theta grid");
    SummabilityReport out;
    out.theta_grid = theta_grid;
    for (double theta : theta_grid) {
        const auto analysis = analyze_summability(coeffs, theta);
        out.partial_sums.push_back(analysis.partial_sums);
        out.verdicts.push_back(analysis.verdict);
        out.kept_terms = static_cast<int>(analysis.trimmed.values.size());
    }
    try {
        out.radius = radius_estimate(trim_trailing_noise(coeffs));
        out.radius_available = true;
    } catch (const DomainError&) {
        out.radius_available = false;
    }
    return out;
}

VerificationReport hermite_norm_identity(double t, double theta,
                                         const PlanarGridSpec& grid, int K) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!(theta > 1.0 && theta <= 8.0))
        throw DomainError("hermite_norm_identity: theta in (1, 8] required");
    if (!(std::abs(t) <= 0.6))
        throw DomainError("hermite_norm_identity: |t| <= 0.6 required");
    const auto family = FamilySpec::hermite();
    auto f_real = [t](double x) { return complex(std::exp(2.0 * x * t - t * t), 0.0); };
    auto coeffs = quadrature::fourier_coefficients(f_real, family, K, K + 24);

    // analytic coefficients t^k sqrt(sqrt(pi) 2^k / k!) gate the pipeline
    std::vector<complex> analytic(K + 1);
    for (int k = 0; k <= K; ++k) {
        const double log_mag = k * std::log(std::abs(t) > 0 ? std::abs(t) : 1.0) +
                               0.5 * (0.5 * std::log(kPi) + k * std::log(2.0) -
                                      log_gamma(k + 1.0));
        analytic[k] = (t == 0.0 && k > 0)
                          ? 0.0
                          : std::pow(t < 0 ? -1.0 : 1.0, k) * std::exp(log_mag);
    }
    const bool gate_ok = coefficients_gate(coeffs, analytic);

    const auto trimmed = trim_trailing_noise(coeffs);
    const auto sums = weighted_sum(trimmed, theta,
                                   static_cast<int>(trimmed.values.size()) - 1);
    const double sum_side = sums.partial_sums.back();

    auto f_complex = [t](complex z) { return std::exp(2.0 * z * t - t * t); };
    auto g = [&](complex z) {
        const complex v = f_complex(z);
        return v * std::conj(v);
    };
    const auto integral =
        quadrature::planar_weighted_integral(g, quadrature::HermiteThetaWeight{theta}, grid);
    const double pref = 2.0 / std::sqrt(kPi * (theta * theta - 1.0));
    const complex integral_side = pref * integral.value;

    auto report = make_report("hermite_norm_identity(t=" + std::to_string(t) +
                                  ",theta=" + std::to_string(theta) + ")",
                              integral_side, complex(sum_side, 0.0), 1e-6,
                              ms_since(t0));
    if (integral.truncation_warning)
        report.identity += " [truncation-mass warning]";
    if (!gate_ok) {
        report.pass = false;
        report.identity += " [coefficient gate failed]";
    }
    return report;
}

VerificationReport laguerre_norm_identity(double t, double theta, double nu,
                                          const PlanarGridSpec& grid, int K) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!(theta > 1.0 && theta <= 8.0))
        throw DomainError("laguerre_norm_identity: theta in (1, 8] required");
    if (!(nu > -1.0)) throw DomainError("laguerre_norm_identity: nu > -1 required");
    const bool diverging = t * t * theta >= 1.0;
    const auto family = FamilySpec::laguerre(nu);
    auto f_real = [t, nu](double x) {
        return complex(std::pow(1.0 - t, -nu - 1.0) * std::exp(-x * t / (1.0 - t)), 0.0);
    };
    auto coeffs = quadrature::fourier_coefficients(f_real, family, K, K + 24);

    std::vector<complex> analytic(K + 1);
    for (int k = 0; k <= K; ++k) {
        const double mag = 0.5 * (log_gamma(k + nu + 1.0) - log_gamma(k + 1.0));
        analytic[k] = std::pow(t, k) * std::exp(mag);
    }
    const bool gate_ok = coefficients_gate(coeffs, analytic);

    const auto trimmed = trim_trailing_noise(coeffs);
    const auto sums = weighted_sum(trimmed, theta,
                                   static_cast<int>(trimmed.values.size()) - 1);
    const double sum_side = sums.partial_sums.back();

    auto f_complex = [t, nu](complex z) {
        return std::pow(1.0 - t, -nu - 1.0) * std::exp(-z * t / (1.0 - t));
    };
    auto g = [&](complex z) {
        const complex v = f_complex(z);
        return v * std::conj(v);
    };
    const auto integral = quadrature::planar_weighted_integral(
        g, quadrature::LaguerreThetaWeight{theta, nu}, grid);
    const double pref =
        2.0 * std::pow(theta, -0.5 * nu) / (kPi * (theta - 1.0));
    const complex integral_side = pref * integral.value;

    auto report = make_report("laguerre_norm_identity(t=" + std::to_string(t) +
                                  ",theta=" + std::to_string(theta) +
                                  ",nu=" + std::to_string(nu) + ")",
                              integral_side, complex(sum_side, 0.0), 1e-4,
                              ms_since(t0));
    if (integral.truncation_warning)
        report.identity += " [truncation-mass warning]";
    if (diverging) {
        report.pass = false;
        report.identity += " [Diverging: t^2 theta >= 1]";
    }
    if (!gate_ok) {
        report.pass = false;
        report.identity += " [coefficient gate failed]";
    }
    return report;
}

std::vector<std::vector<VerificationReport>> orthogonality_matrix(
    FamilyKind kind, double theta, double nu, int k_max,
    const PlanarGridSpec& grid, double diag_tol, double offdiag_tol_scale) {
    if (!(theta > 1.0 && theta <= 8.0))
        throw DomainError("orthogonality_matrix: theta in (1, 8] required");
    FamilySpec family;
    double pref;
    if (kind == FamilyKind::Hermite) {
        if (k_max < 0 || k_max > 6)
            throw DomainError("orthogonality_matrix: Hermite k_max <= 6");
        family = FamilySpec::hermite();
        pref = 2.0 / std::sqrt(theta * theta - 1.0);
    } else if (kind == FamilyKind::Laguerre) {
        if (k_max < 0 || k_max > 5)
            throw DomainError("orthogonality_matrix: Laguerre k_max <= 5");
        family = FamilySpec::laguerre(nu);
        pref = 2.0 * std::pow(theta, -0.5 * nu) / (kPi * (theta - 1.0));
    } else {
        throw DomainError("orthogonality_matrix: kind must be Hermite or Laguerre");
    }

    // expected diagonal values
    std::vector<double> diag(k_max + 1);
    double max_diag = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        if (kind == FamilyKind::Hermite)
            diag[k] = kPi * std::pow(2.0 * theta, k) * std::exp(log_gamma(k + 1.0));
        else
            diag[k] = std::exp(log_gamma(k + nu + 1.0) - log_gamma(k + 1.0)) *
                      std::pow(theta, k);
        max_diag = std::max(max_diag, diag[k]);
    }

    std::vector<std::vector<VerificationReport>> table(
        k_max + 1, std::vector<VerificationReport>(k_max + 1));
    for (int k = 0; k <= k_max; ++k) {
        for (int m = k; m <= k_max; ++m) {
            const auto t0 = std::chrono::steady_clock::now();
            auto g = [&](complex z) {
                const complex pk = orthopoly::eval_standard(family, k, z);
                const complex pm = orthopoly::eval_standard(family, m, z);
                return pk * std::conj(pm);
            };
            complex value;
            if (kind == FamilyKind::Hermite) {
                value = pref * quadrature::planar_weighted_integral(
                                   g, quadrature::HermiteThetaWeight{theta}, grid)
                                   .value;
            } else {
                value = pref * quadrature::planar_weighted_integral(
                                   g, quadrature::LaguerreThetaWeight{theta, nu}, grid)
                                   .value;
            }
            const std::string name = "ortho(" + std::to_string(k) + "," +
                                     std::to_string(m) + ")";
            VerificationReport rep;
            if (k == m)
                rep = make_report(name, value, complex(diag[k], 0.0), diag_tol,
                                  ms_since(t0));
            else
                rep = make_report(name, value, complex(0.0, 0.0),
                                  offdiag_tol_scale * max_diag, ms_since(t0));
            table[k][m] = rep;
            if (m != k) {
                VerificationReport sym = rep;
                sym.identity = "ortho(" + std::to_string(m) + "," +
                               std::to_string(k) + ")";
                sym.computed = std::conj(rep.computed);
                table[m][k] = sym;
            }
        }
    }
    return table;
}

MembershipReport jacobi_membership_report(
    const std::function<complex(double)>& f_real,
    const std::function<complex(complex)>& f_complex, const FamilySpec& family,
    double theta, int K, const EllipseContour& contour) {
    const auto kind = family.kind;
    if (kind != FamilyKind::Jacobi && kind != FamilyKind::Gegenbauer &&
        kind != FamilyKind::ChebyshevT)
        throw DomainError("jacobi_membership_report: Jacobi-type family required");
    if (family.alpha < -0.5 || family.beta < -0.5)
        throw DomainError("jacobi_membership_report: alpha, beta >= -1/2 required");

    MembershipReport out;
    out.coeffs = quadrature::fourier_coefficients(f_real, family, K, K + 16);
    const auto analysis = analyze_summability(out.coeffs, theta);
    out.partial_sums = analysis.partial_sums;
    out.verdict = analysis.verdict;
    try {
        out.radius = radius_estimate(analysis.trimmed);
        out.radius_available = true;
    } catch (const DomainError&) {
        out.radius_available = false; // expansion too short for the estimator
    }

    auto g = [&](complex z) {
        const complex v = f_complex(z);
        return v * std::conj(v);
    };
    out.boundary_norm =
        quadrature::ellipse_contour_integral(g, contour, [](complex) { return 1.0; })
            .real();
    out.ratio = out.partial_sums.empty()
                    ? 0.0
                    : out.partial_sums.back() / out.boundary_norm;
    return out;
}

} // namespace ortholab::summability

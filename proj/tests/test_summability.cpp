#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "ortholab/kernels.hpp"
#include "ortholab/specfun.hpp"
#include "ortholab/summability.hpp"
#include "test_util.hpp"

using namespace ortholab;
using namespace ortholab::summability;
using orthopoly::FamilyKind;
using orthopoly::FamilySpec;
using complexd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

CoefficientSeries analytic_series(const FamilySpec& family,
                                  std::vector<complexd> values) {
    CoefficientSeries s;
    s.family = family;
    s.values = std::move(values);
    s.quadrature_order = 0;
    return s;
}

CoefficientSeries laguerre_generating_series(double t, double nu, int K) {
    std::vector<complexd> v(K + 1);
    for (int k = 0; k <= K; ++k)
        v[k] = std::pow(t, k) * std::exp(0.5 * (specfun::log_gamma(k + nu + 1.0) -
                                                specfun::log_gamma(k + 1.0)));
    return analytic_series(FamilySpec::laguerre(nu), std::move(v));
}

CoefficientSeries hermite_generating_series(double t, int K) {
    std::vector<complexd> v(K + 1);
    for (int k = 0; k <= K; ++k)
        v[k] = std::pow(t, k) * std::exp(0.5 * (0.5 * std::log(kPi) +
                                                k * std::log(2.0) -
                                                specfun::log_gamma(k + 1.0)));
    return analytic_series(FamilySpec::hermite(), std::move(v));
}

CoefficientSeries chebyshev_generating_series(double t, int K) {
    std::vector<complexd> v(K + 1);
    v[0] = std::sqrt(kPi);
    for (int k = 1; k <= K; ++k) v[k] = std::sqrt(2.0 * kPi) * std::pow(t, k);
    return analytic_series(FamilySpec::chebyshev_t(), std::move(v));
}

} // namespace

TEST_CASE("weighted_sum basics") {
    // a single unit coefficient at index j gives S = theta^j
    std::vector<complexd> delta(10, 0.0);
    delta[4] = 1.0;
    const auto s = weighted_sum(analytic_series(FamilySpec::hermite(), delta), 2.0, 9);
    CHECK(s.partial_sums.back() == doctest::Approx(16.0).epsilon(1e-14));
    CHECK_FALSE(s.overflow);

    // Hermite generating family: S -> sqrt(pi) e^{2 t^2 theta}
    const auto herm = weighted_sum(hermite_generating_series(0.4, 48), 2.0, 48);
    CHECK(rel_err(herm.partial_sums.back(), 3.3614248376927401819685) < 1e-13);

    // Laguerre generating family: S -> Gamma(nu+1) (1-t^2 theta)^{-nu-1}
    const auto lag = weighted_sum(laguerre_generating_series(0.5, 0.5, 160), 3.0, 160);
    CHECK(rel_err(lag.partial_sums.back(), 7.0898154036220641091927) < 1e-7);

    // monotone in K and in theta
    const auto s2 = weighted_sum(hermite_generating_series(0.4, 48), 2.5, 48);
    for (std::size_t j = 1; j < herm.partial_sums.size(); ++j)
        CHECK(herm.partial_sums[j] >= herm.partial_sums[j - 1]);
    CHECK(s2.partial_sums.back() >= herm.partial_sums.back());

    // overflow flag
    std::vector<complexd> big(40, 1e160);
    const auto ovf = weighted_sum(analytic_series(FamilySpec::hermite(), big), 8.0, 39);
    CHECK(ovf.overflow);
}

TEST_CASE("summability verdicts at the convergence threshold") {
    auto verdict_at = [](const CoefficientSeries& c, double theta) {
        return analyze_summability(c, theta).verdict;
    };
    const auto lag = laguerre_generating_series(0.5, 0.5, 64);
    CHECK(verdict_at(lag, 3.5) == Verdict::Converged);
    CHECK(verdict_at(lag, 3.9) == Verdict::Converged);
    CHECK(verdict_at(lag, 4.1) == Verdict::Diverging);

    const auto cheb = chebyshev_generating_series(0.5, 64);
    CHECK(verdict_at(cheb, 3.5) == Verdict::Converged);
    CHECK(verdict_at(cheb, 4.5) == Verdict::Diverging);
}

TEST_CASE("radius estimates") {
    // pure geometric coefficients: theta* = 1/r^2 exactly
    std::vector<complexd> geo(48);
    for (int k = 0; k < 48; ++k) geo[k] = std::pow(0.5, k);
    const auto r_geo = radius_estimate(analytic_series(FamilySpec::hermite(), geo));
    CHECK(r_geo.flag == RadiusEstimate::Flag::Finite);
    CHECK(r_geo.value == doctest::Approx(4.0).epsilon(1e-12));

    // Laguerre generating family at t = 0.5: theta* -> 4
    const auto r_lag = radius_estimate(laguerre_generating_series(0.5, 0.5, 64));
    CHECK(r_lag.flag == RadiusEstimate::Flag::Finite);
    CHECK(r_lag.value >= 3.8);
    CHECK(r_lag.value <= 4.2);

    // Hermite generating family: super-geometric decay, infinite radius
    const auto r_herm = radius_estimate(hermite_generating_series(0.4, 64));
    CHECK(r_herm.flag == RadiusEstimate::Flag::Infinite);
    CHECK(std::isinf(r_herm.value));

    // threshold consistency across generating families once K >= 48
    for (double t : {0.4, 0.5, 0.6}) {
        const auto rl = radius_estimate(laguerre_generating_series(t, 1.5, 64));
        CHECK(rl.value >= 0.95 / (t * t));
        CHECK(rl.value <= 1.05 / (t * t));
        const auto rc = radius_estimate(chebyshev_generating_series(t, 48));
        CHECK(rc.value >= 0.95 / (t * t));
        CHECK(rc.value <= 1.05 / (t * t));
    }

    std::vector<complexd> few(8, 1.0);
    CHECK_THROWS_AS(radius_estimate(analytic_series(FamilySpec::hermite(), few)),
                    DomainError);
}

TEST_CASE("summability_report sweeps a theta grid") {
    const auto coeffs = laguerre_generating_series(0.5, 0.5, 64);
    const auto sweep = summability::summability_report(coeffs, {3.5, 3.9, 4.1});
    REQUIRE(sweep.verdicts.size() == 3);
    CHECK(sweep.verdicts[0] == Verdict::Converged);
    CHECK(sweep.verdicts[1] == Verdict::Converged);
    CHECK(sweep.verdicts[2] == Verdict::Diverging);
    REQUIRE(sweep.radius_available);
    CHECK(sweep.radius.value >= 3.8);
    CHECK(sweep.radius.value <= 4.2);
    // partial sums nondecreasing in K and in theta
    for (const auto& sums : sweep.partial_sums)
        for (std::size_t j = 1; j < sums.size(); ++j)
            CHECK(sums[j] >= sums[j - 1]);
    const auto n0 = std::min(sweep.partial_sums[0].size(), sweep.partial_sums[1].size());
    for (std::size_t j = 0; j < n0; ++j)
        CHECK(sweep.partial_sums[1][j] >= sweep.partial_sums[0][j]);
    CHECK_THROWS_AS(summability::summability_report(coeffs, {}), DomainError);
}

TEST_CASE("hermite norm identity") {
    // t = 0: both sides sqrt(pi)
    const auto grid0 = quadrature::PlanarGridSpec::cartesian_for_hermite(2.0, 0);
    const auto rep0 = hermite_norm_identity(0.0, 2.0, grid0, 32);
    CHECK(rep0.pass);
    CHECK(rel_err(rep0.expected.real(), std::sqrt(kPi)) < 1e-10);
    CHECK(rel_err(rep0.computed.real(), std::sqrt(kPi)) < 1e-10);

    for (double t : {0.2, 0.4}) {
        for (double theta : {1.5, 2.0, 4.0}) {
            const auto grid = quadrature::PlanarGridSpec::cartesian_for_hermite(
                theta, 0, t * (theta + 1.0), 200);
            const auto rep = hermite_norm_identity(t, theta, grid, 48);
            CHECK(rep.pass);
            CHECK(rep.rel_err <= 1e-6);
            // both sides equal the analytic limit sqrt(pi) e^{2 t^2 theta}
            const double limit = std::sqrt(kPi) * std::exp(2.0 * t * t * theta);
            CHECK(rel_err(rep.expected.real(), limit) < 1e-9);
        }
    }
    CHECK_THROWS_AS(hermite_norm_identity(0.7, 2.0, grid0, 32), DomainError);
    CHECK_THROWS_AS(hermite_norm_identity(0.2, 9.0, grid0, 32), DomainError);
}

TEST_CASE("laguerre norm identity") {
    // t = 0: f = 1, both sides Gamma(nu+1)
    const double nu0 = 0.5;
    const auto grid0 = quadrature::PlanarGridSpec::polar_for_laguerre(3.0, 0);
    const auto rep0 = laguerre_norm_identity(0.0, 3.0, nu0, grid0, 24);
    CHECK(rep0.pass);
    CHECK(rel_err(rep0.expected.real(), std::exp(specfun::log_gamma(1.5))) < 1e-9);

    // frozen oracle point: t=0.3, theta=3, nu=0.5 -> 1.4208906...
    const auto rep1 = laguerre_norm_identity(0.3, 3.0, 0.5, grid0, 48);
    CHECK(rep1.pass);
    CHECK(rel_err(rep1.expected.real(), 1.4208906305628832726280) < 1e-8);

    for (double t : {0.2, 0.3}) {
        for (double theta : {2.0, 3.0}) {
            for (double nu : {0.5, 1.5}) {
                const auto grid =
                    quadrature::PlanarGridSpec::polar_for_laguerre(theta, 0);
                const auto rep = laguerre_norm_identity(t, theta, nu, grid, 48);
                CHECK(rep.pass);
                CHECK(rep.rel_err <= 1e-4);
            }
        }
    }
}

TEST_CASE("orthogonality matrices") {
    const auto hgrid = quadrature::PlanarGridSpec::cartesian_for_hermite(2.0, 8);
    const auto herm = orthogonality_matrix(FamilyKind::Hermite, 2.0, 0.0, 4, hgrid,
                                           1e-6, 1e-8);
    // closed-form diagonal values pi (2 theta)^k k!
    CHECK(rel_err(herm[0][0].computed.real(), kPi) < 1e-8);
    CHECK(rel_err(herm[2][2].computed.real(), 32.0 * kPi) < 1e-8);
    for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= 4; ++m) CHECK(herm[k][m].pass);

    // the off-diagonal budget here is the stricter module-level one,
    // 1e-8 x the largest diagonal entry
    const auto lgrid = quadrature::PlanarGridSpec::polar_for_laguerre(3.0, 6);
    const auto lag = orthogonality_matrix(FamilyKind::Laguerre, 3.0, 0.5, 3, lgrid,
                                          1e-4, 1e-8);
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m) CHECK(lag[k][m].pass);
    CHECK(std::abs(lag[1][0].computed) <=
          1e-8 * std::abs(lag[3][3].expected.real()));

    CHECK_THROWS_AS(
        orthogonality_matrix(FamilyKind::Hermite, 2.0, 0.0, 7, hgrid, 1e-6, 1e-8),
        DomainError);
}

TEST_CASE("membership report for the Chebyshev threshold family") {
    const double t = 0.5;
    auto f_real = [t](double x) {
        return complexd((1.0 - t * t) / (1.0 - 2.0 * t * x + t * t), 0.0);
    };
    auto f_complex = [t](complexd z) {
        return (1.0 - t * t) / (1.0 - 2.0 * t * z + t * t);
    };
    const auto family = FamilySpec::chebyshev_t();

    const auto in = jacobi_membership_report(f_real, f_complex, family, 3.5, 64,
                                             quadrature::EllipseContour{3.5, 512});
    CHECK(in.verdict == Verdict::Converged);
    REQUIRE(in.radius_available);
    CHECK(in.radius.value >= 3.8);
    CHECK(in.radius.value <= 4.2);
    CHECK(in.boundary_norm > 0.0);
    CHECK(in.ratio > 0.0);
    // coefficients match sqrt(2 pi) t^k down to the quadrature noise floor
    for (int k = 1; k <= 20; ++k) {
        const double want = std::sqrt(2.0 * kPi) * std::pow(t, k);
        CHECK(std::abs(in.coeffs.values[k].real() - want) <
              std::max(1e-10 * want, 1e-13));
    }
    CHECK(rel_err(in.coeffs.values[0].real(), std::sqrt(kPi)) < 1e-12);

    const auto out = jacobi_membership_report(f_real, f_complex, family, 4.5, 64,
                                              quadrature::EllipseContour{4.5, 512});
    CHECK(out.verdict == Verdict::Diverging);

    // the pole (t + 1/t)/2 sits exactly on the boundary of E_4
    const double pole = 0.5 * (t + 1.0 / t);
    const double defect = kernels::EllipseDomain{4.0}.boundary_defect(complexd(pole, 0.0));
    CHECK(std::abs(defect) < 1e-12);
}

TEST_CASE("membership report for polynomials and constants") {
    // polynomials belong for every theta
    auto p_real = [](double x) { return complexd(x * x * x - 2.0 * x + 0.5, 0.0); };
    auto p_complex = [](complexd z) { return z * z * z - 2.0 * z + 0.5; };
    for (double theta : {2.0, 4.0}) {
        const auto rep =
            jacobi_membership_report(p_real, p_complex, FamilySpec::jacobi(0.5, 0.5),
                                     theta, 48, quadrature::EllipseContour{theta, 256});
        CHECK(rep.verdict == Verdict::Converged);
        CHECK(std::isfinite(rep.boundary_norm));
    }

    // f = 1 against Jacobi(0.5, 0.5): S = tau(0.5,0.5) = pi/2 and the
    // boundary norm is the perimeter of the ellipse
    auto one_real = [](double) { return complexd(1.0, 0.0); };
    auto one_complex = [](complexd) { return complexd(1.0, 0.0); };
    const quadrature::EllipseContour contour{2.0, 512};
    const auto rep =
        jacobi_membership_report(one_real, one_complex, FamilySpec::jacobi(0.5, 0.5),
                                 2.0, 48, contour);
    CHECK(rep.verdict == Verdict::Converged);
    CHECK(rel_err(rep.partial_sums.back(), kPi / 2.0) < 1e-10);
    auto g1 = [](complexd) { return complexd(1.0, 0.0); };
    const double perimeter =
        quadrature::ellipse_contour_integral(g1, contour, [](complexd) { return 1.0; })
            .real();
    CHECK(rel_err(rep.boundary_norm, perimeter) < 1e-12);

    CHECK_THROWS_AS(
        jacobi_membership_report(one_real, one_complex, FamilySpec::jacobi(-0.7, 0.5),
                                 2.0, 48, contour),
        DomainError);
}

TEST_CASE("equivalence-constant evidence across member functions") {
    // six members of the theta = 2 space; the sum/boundary ratio stays in a
    // two-sided band (factor 100)
    const double theta = 2.0;
    const quadrature::EllipseContour contour{theta, 512};
    using Fn = std::pair<std::function<complexd(double)>, std::function<complexd(complexd)>>;
    std::vector<Fn> members;
    members.push_back({[](double) { return complexd(1.0, 0.0); },
                       [](complexd) { return complexd(1.0, 0.0); }});
    members.push_back({[](double x) { return complexd(x, 0.0); },
                       [](complexd z) { return z; }});
    members.push_back({[](double x) { return complexd(x * x * x - x, 0.0); },
                       [](complexd z) { return z * z * z - z; }});
    members.push_back({[](double x) { return complexd(std::exp(x), 0.0); },
                       [](complexd z) { return std::exp(z); }});
    members.push_back({[](double x) { return complexd(std::cos(2.0 * x), 0.0); },
                       [](complexd z) { return std::cos(2.0 * z); }});
    members.push_back({[](double x) { return complexd(1.0 / (x - 2.0), 0.0); },
                       [](complexd z) { return 1.0 / (z - 2.0); }});

    double lo = 1e300, hi = 0.0;
    for (const auto& [fr, fc] : members) {
        const auto rep = jacobi_membership_report(fr, fc, FamilySpec::jacobi(0.5, 0.5),
                                                  theta, 48, contour);
        CHECK(rep.verdict == Verdict::Converged);
        lo = std::min(lo, rep.ratio);
        hi = std::max(hi, rep.ratio);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo < 100.0);
}

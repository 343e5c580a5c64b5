#include "ortholab/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ortholab::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficients of 1/Gamma(1+t) = sum_k a_k t^k (Abramowitz & Stegun 6.1.34).
constexpr double kInvGammaCoef[26] = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.04200263503409523553,
    0.16653861138229148950,
    -0.04219773455554433675,
    -0.00962197152787697356,
    0.00721894324666309954,
    -0.00116516759185906511,
    -0.00021524167411495097,
    0.00012805028238811619,
    -0.00002013485478078824,
    -0.00000125049348214267,
    0.00000113302723198170,
    -0.00000020563384169776,
    0.00000000611609510448,
    0.00000000500200764447,
    -0.00000000118127457049,
    0.00000000010434267117,
    0.00000000000778226344,
    -0.00000000000369680562,
    0.00000000000051003703,
    -0.00000000000002058326,
    -0.00000000000000534812,
    0.00000000000000122678,
    -0.00000000000000011813,
};

// gamma1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)]/(2 mu),
// gamma2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)]/2, for |mu| <= 1/2.
void temme_gammas(double mu, double& gamma1, double& gamma2) {
    const double mu2 = mu * mu;
    double g1 = 0.0, g2 = 0.0, p = 1.0;
    for (int k = 0; 2 * k + 1 < 26; ++k) {
        g1 += kInvGammaCoef[2 * k + 1] * p;        // odd coefficients
        g2 += kInvGammaCoef[2 * k] * p;            // even coefficients
        p *= mu2;
    }
    gamma1 = -g1;
    gamma2 = g2;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, 0 < x <= 2 (Temme's series).
void bessel_k_temme(double mu, double x, double& kmu, double& kmu1) {
    const double mu2 = mu * mu;
    const double ln2x = std::log(2.0 / x);
    const double sigma = mu * ln2x;
    const double sinhrat = std::abs(sigma) < 1e-10
                               ? 1.0 + sigma * sigma / 6.0
                               : std::sinh(sigma) / sigma;
    const double pimu = kPi * mu;
    const double sinrat = std::abs(pimu) < 1e-10
                              ? 1.0 + pimu * pimu / 6.0
                              : pimu / std::sin(pimu);
    double gamma1, gamma2;
    temme_gammas(mu, gamma1, gamma2);

    double f = sinrat * (std::cosh(sigma) * gamma1 + ln2x * sinhrat * gamma2);
    double p = 0.5 * std::exp(mu * ln2x) * std::exp(std::lgamma(1.0 + mu));
    double q = 0.5 * std::exp(-mu * ln2x) * std::exp(std::lgamma(1.0 - mu));
    const double x2_4 = 0.25 * x * x;
    double c = 1.0;
    double sum_f = f;
    double sum_h = p;
    for (int k = 1; k <= 500; ++k) {
        f = (k * f + p + q) / (k * k - mu2);
        p /= (k - mu);
        q /= (k + mu);
        c *= x2_4 / k;
        const double del_f = c * f;
        const double del_h = c * (p - k * f);
        sum_f += del_f;
        sum_h += del_h;
        if (std::abs(del_f) < std::abs(sum_f) * 1e-17 &&
            std::abs(del_h) < std::abs(sum_h) * 1e-17)
            break;
    }
    kmu = sum_f;
    kmu1 = sum_h * 2.0 / x;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x >= 2, via the Steed /
// Thompson-Barnett continued fraction.
void bessel_k_cf2(double mu, double x, double& kmu, double& kmu1) {
    const double a1 = 0.25 - mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double h = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-17) break;
    }
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

bool is_nonpositive_integer(double c) {
    return c <= 0.0 && c == std::floor(c);
}

} // namespace

void SeriesControl::validate() const {
    if (max_terms < 8) throw DomainError("SeriesControl: max_terms must be >= 8");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw DomainError("SeriesControl: rel_tol must lie in (0,1)");
    if (consecutive_small < 2)
        throw DomainError("SeriesControl: consecutive_small must be >= 2");
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double pochhammer(double a, int k) {
    if (k == 0) return 1.0;
    if (k < 0) throw DomainError("pochhammer: k must be >= 0");
    if (a <= 0.0) {
        // fall back to the direct product; valid for any real a
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= a + i;
        return r;
    }
    return std::exp(log_gamma(a + k) - log_gamma(a));
}

complex besseli_entire(double nu, complex w, const SeriesControl& ctrl) {
    ctrl.validate();
    if (!(nu > -1.0)) throw DomainError("besseli_entire: requires nu > -1");
    complex term = std::exp(-log_gamma(nu + 1.0));
    complex sum = term;
    int small_run = 0;
    for (int m = 0; m < ctrl.max_terms; ++m) {
        term *= w / ((m + 1.0) * (nu + m + 1.0));
        sum += term;
        if (std::abs(term) <= ctrl.rel_tol * std::abs(sum)) {
            if (++small_run >= ctrl.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
    }
    throw TruncationError("besseli_entire: series did not converge in " +
                          std::to_string(ctrl.max_terms) + " terms");
}

BesselKResult bessel_k_ex(double nu, double x) {
    if (nu < 0.0) throw DomainError("bessel_k: requires nu >= 0");
    if (!(x > 0.0)) throw DomainError("bessel_k: requires x > 0");
    if (x > 705.0) return {0.0, true};

    const int shift = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - shift; // |mu| <= 1/2
    double kmu, kmu1;
    if (x <= 2.0)
        bessel_k_temme(mu, x, kmu, kmu1);
    else
        bessel_k_cf2(mu, x, kmu, kmu1);

    double klo = kmu, khi = kmu1;
    for (int j = 1; j < shift; ++j) {
        const double knext = klo + 2.0 * (mu + j) / x * khi;
        klo = khi;
        khi = knext;
        if (!std::isfinite(khi))
            throw OverflowError("bessel_k: recurrence overflow for nu=" +
                                std::to_string(nu));
    }
    return {shift == 0 ? klo : khi, false};
}

double bessel_k(double nu, double x) { return bessel_k_ex(nu, x).value; }

double bessel_k_integral(double nu, double x) {
    if (nu < 0.0) throw DomainError("bessel_k_integral: requires nu >= 0");
    if (!(x > 0.0)) throw DomainError("bessel_k_integral: requires x > 0");
    // choose T with x cosh T - nu T > 760, then trapezoid on [0, T];
    // the integrand extends to an even analytic function so the rule is
    // spectrally accurate
    double t_max = std::acosh(std::max(2.0, 760.0 / x));
    for (int it = 0; it < 4; ++it)
        t_max = std::acosh(std::min(1e300, (760.0 + nu * t_max) / x + 1.0));
    t_max = std::min(t_max, 60.0);
    const int n = 6000;
    const double h = t_max / n;
    double sum = 0.5 * std::exp(-x); // t = 0 term: e^{-x cosh 0} cosh(0)
    for (int j = 1; j <= n; ++j) {
        const double t = j * h;
        sum += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
    }
    return h * sum;
}

complex gauss_2f1(double a, double b, double c, complex t,
                  const SeriesControl& ctrl) {
    ctrl.validate();
    if (is_nonpositive_integer(c))
        throw DomainError("gauss_2f1: c must not be a non-positive integer");
    if (std::abs(t) > 0.97)
        throw GuardError("gauss_2f1: |t| > 0.97 outside guarded series domain");
    complex term = 1.0;
    complex sum = 1.0;
    int small_run = 0;
    for (int k = 0; k < ctrl.max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * t;
        sum += term;
        if (std::abs(term) <= ctrl.rel_tol * std::abs(sum)) {
            if (++small_run >= ctrl.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
    }
    throw TruncationError("gauss_2f1: series did not converge in " +
                          std::to_string(ctrl.max_terms) + " terms");
}

complex appell_f4(double a, double b, double c1, double c2,
                  complex t, complex s, const SeriesControl& ctrl) {
    ctrl.validate();
    if (is_nonpositive_integer(c1) || is_nonpositive_integer(c2))
        throw DomainError("appell_f4: c parameters must not be non-positive integers");
    if (std::sqrt(std::abs(t)) + std::sqrt(std::abs(s)) > 0.97)
        throw GuardError("appell_f4: sqrt|t| + sqrt|s| > 0.97 outside guarded domain");
    if (std::abs(s) < 1e-30) return gauss_2f1(a, b, c1, t, ctrl);
    if (std::abs(t) < 1e-30) return gauss_2f1(a, b, c2, s, ctrl);

    complex sum = 0.0;
    complex first = 1.0; // term at (m,n) = (0,N)
    int small_run = 0;
    for (int N = 0; N < ctrl.max_terms; ++N) {
        if (N > 0)
            first *= (a + N - 1.0) * (b + N - 1.0) * s / ((c2 + N - 1.0) * N);
        complex term = first;
        complex block = term;
        for (int m = 1; m <= N; ++m) {
            const int n = N - m;
            term *= t / s * (c2 + n) * (n + 1.0) / ((c1 + m - 1.0) * m);
            block += term;
        }
        sum += block;
        if (std::abs(block) <= ctrl.rel_tol * std::abs(sum)) {
            if (++small_run >= ctrl.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
    }
    throw TruncationError("appell_f4: series did not converge in " +
                          std::to_string(ctrl.max_terms) + " diagonal blocks");
}

std::vector<double> pochhammer_ratio_limit_check(double a, double b, int k_max) {
    if (k_max < 10) throw DomainError("pochhammer_ratio_limit_check: k_max >= 10");
    if (a <= -1.0 || b <= -1.0)
        throw DomainError("pochhammer_ratio_limit_check: need a, b > -1");
    std::vector<double> r;
    r.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        r.push_back(std::exp(log_gamma(a + k) - log_gamma(b + k) +
                             (b - a) * std::log(static_cast<double>(k))));
    }
    return r;
}

} // namespace ortholab::specfun

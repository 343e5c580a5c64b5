#ifndef ORTHOLAB_SPECFUN_HPP
#define ORTHOLAB_SPECFUN_HPP

#include <complex>
#include <vector>

#include "ortholab/errors.hpp"

namespace ortholab::specfun {

using complex = std::complex<double>;

// Truncation policy for the series evaluators.  A sum stops once
// `consecutive_small` successive terms satisfy |term| <= rel_tol * |sum|;
// requiring several small terms in a row guards against stopping at a
// zero crossing.
struct SeriesControl {
    int max_terms = 4000;
    double rel_tol = 1e-14;
    int consecutive_small = 3;

    void validate() const;
};

// ln Gamma(x) for x > 0.  Backed by the C library lgamma.
double log_gamma(double x);

// Pochhammer symbol (a)_k = Gamma(a+k)/Gamma(a), evaluated in log space
// for a > 0; returns the (positive) value.
double pochhammer(double a, int k);

// E_nu(w) = sum_m w^m / (m! Gamma(nu+m+1)), the entire function with
// E_nu(w) = w^{-nu/2} I_nu(2 sqrt(w)).  Evaluating the Bessel factor this
// way keeps it single-valued for complex w.
complex besseli_entire(double nu, complex w, const SeriesControl& ctrl = {});

// Modified Bessel function of the second kind K_nu(x), nu >= 0, x > 0.
// Temme's series for x < 2, Steed/Thompson-Barnett continued fraction for
// x >= 2, forward recurrence in the order.  For x past the exponential
// underflow range the value is 0 and `underflowed` is set.
struct BesselKResult {
    double value = 0.0;
    bool underflowed = false;
};
BesselKResult bessel_k_ex(double nu, double x);
double bessel_k(double nu, double x);

// Slow oracle path for K_nu: trapezoid evaluation of
// int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_k_integral(double nu, double x);

// Gauss hypergeometric series 2F1(a,b;c;t), |t| <= 0.97.
complex gauss_2f1(double a, double b, double c, complex t,
                  const SeriesControl& ctrl = {});

// Appell F4(a,b;c1,c2;t,s) = sum_{m,n} (a)_{m+n}(b)_{m+n} /
// ((c1)_m (c2)_n m! n!) t^m s^n, summed in diagonal blocks m+n = N.
// Convergence guard sqrt|t| + sqrt|s| <= 0.97.
complex appell_f4(double a, double b, double c1, double c2,
                  complex t, complex s, const SeriesControl& ctrl = {});

// r_k = Gamma(a+k)/Gamma(b+k) * k^{b-a} for k = 1..k_max; r_k -> 1.
std::vector<double> pochhammer_ratio_limit_check(double a, double b, int k_max);

} // namespace ortholab::specfun

#endif

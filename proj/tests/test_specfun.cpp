#include "doctest.h"

#include <cmath>
#include <complex>

#include "ortholab/specfun.hpp"
#include "test_util.hpp"

using namespace ortholab;
using namespace ortholab::specfun;
using complexd = std::complex<double>;

namespace {

// brute-force reference for E_nu(w) at extended precision
std::complex<long double> besseli_entire_brute(long double nu,
                                               std::complex<long double> w) {
    std::complex<long double> term = std::exp(-static_cast<long double>(lgammal(nu + 1)));
    std::complex<long double> sum = term;
    for (int m = 0; m < 600; ++m) {
        term *= w / ((m + 1.0L) * (nu + m + 1.0L));
        sum += term;
        if (std::abs(term) < 1e-25L * std::abs(sum) && m > 4) break;
    }
    return sum;
}

} // namespace

TEST_CASE("log_gamma known values") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247000870717).epsilon(1e-14));
    CHECK(log_gamma(6.0) == doctest::Approx(4.7874917427820459942477).epsilon(1e-14));
    // Gamma(x+1) = x Gamma(x) across the range
    for (double x : {0.5, 1.3, 7.0, 123.4, 5.5e3, 9.9e5}) {
        const double lhs = log_gamma(x + 1.0);
        const double rhs = log_gamma(x) + std::log(x);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
    }
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-3.2), DomainError);
}

TEST_CASE("besseli_entire examples") {
    // w = 0: only the m = 0 term survives
    for (double nu : {-0.5, 0.0, 0.5, 2.0})
        CHECK(rel_err(besseli_entire(nu, 0.0), std::exp(-log_gamma(nu + 1.0))) < 1e-14);
    // E_{1/2}(1) = sinh(2)/sqrt(pi)
    CHECK(rel_err(besseli_entire(0.5, 1.0), 2.0462368630890550366051836) < 1e-13);
    // E_0(1) = I_0(2)
    CHECK(rel_err(besseli_entire(0.0, 1.0), 2.2795853023360672674372044) < 1e-13);
    CHECK_THROWS_AS(besseli_entire(-1.5, 1.0), DomainError);
}

TEST_CASE("besseli_entire matches brute force at extended precision") {
    TestRng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const double nu = rng.uniform(-0.9, 3.0);
        const complexd w = rng.box(25.0);
        const complexd got = besseli_entire(nu, w);
        const auto want = besseli_entire_brute(
            nu, std::complex<long double>(w.real(), w.imag()));
        const double err = std::abs(got - complexd(static_cast<double>(want.real()),
                                                   static_cast<double>(want.imag()))) /
                           static_cast<double>(std::abs(want));
        CHECK(err < 1e-11);
    }
}

TEST_CASE("bessel_k closed forms and asymptotics") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    CHECK(rel_err(bessel_k(0.5, 1.0), 0.4610685044478945584395759) < 1e-12);
    // K_0(1), frozen from the integral-representation oracle
    CHECK(rel_err(bessel_k(0.0, 1.0), 0.4210244382407083333356274) < 1e-12);
    CHECK(rel_err(bessel_k(0.0, 2.0), 0.1138938727495334356527196) < 1e-12);
    CHECK(rel_err(bessel_k(2.5, 7.3), 4.597844544388133820478583e-4) < 1e-11);
    CHECK(rel_err(bessel_k(0.25, 0.37), 1.2398219722255861220508309) < 1e-12);
    // asymptotic sqrt(pi/(2x)) e^{-x} within 2% at x = 50
    for (double nu : {0.0, 0.5, 1.0})
        CHECK(rel_err(bessel_k(nu, 50.0),
                      std::sqrt(3.14159265358979324 / 100.0) * std::exp(-50.0)) < 0.02);
    // extreme of the supported range: K_{1/2}(700) = sqrt(pi/1400) e^{-700}
    CHECK(rel_err(bessel_k(0.5, 700.0),
                  std::sqrt(3.14159265358979324 / 1400.0) * std::exp(-700.0)) < 1e-10);
    // underflow range
    const auto under = bessel_k_ex(1.0, 800.0);
    CHECK(under.value == 0.0);
    CHECK(under.underflowed);
    CHECK_FALSE(bessel_k_ex(1.0, 3.0).underflowed);
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(-0.5, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_k_integral(1.0, -2.0), DomainError);
}

TEST_CASE("bessel_k fast path agrees with the integral oracle") {
    for (double nu : {0.0, 0.25, 0.5, 1.0, 2.5}) {
        for (double x : {0.01, 0.11, 0.73, 1.9, 2.1, 6.5, 17.0, 50.0}) {
            const double fast = bessel_k(nu, x);
            const double slow = bessel_k_integral(nu, x);
            CHECK(rel_err(fast, slow) < 1e-8);
        }
    }
}

TEST_CASE("gauss_2f1 examples and guard") {
    CHECK(gauss_2f1(0.3, 0.7, 1.1, 0.0) == complexd(1.0, 0.0));
    CHECK(rel_err(gauss_2f1(1.0, 1.0, 2.0, 0.5), 1.3862943611198906188345) < 1e-13);
    // 2F1(a,b;b;t) = (1-t)^{-a}
    CHECK(rel_err(gauss_2f1(0.7, 1.3, 1.3, 0.4), 1.4298620007401581693540) < 1e-13);
    CHECK(rel_err(gauss_2f1(0.3, 1.2, 1.9, 0.7), 1.2210370690505312034919) < 1e-13);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, complexd(0.98, 0.0)), GuardError);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, -2.0, 0.5), DomainError);
}

TEST_CASE("gauss_2f1 contiguous relation") {
    // 2F1(a,b;c;t) = 2F1(a-1,b;c;t) + (bt/c) 2F1(a,b+1;c+1;t)
    TestRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = rng.uniform(-1.0, 3.0);
        const double b = rng.uniform(0.1, 2.5);
        const double c = rng.uniform(0.3, 3.0);
        const complexd t = rng.box(0.55);
        const complexd lhs = gauss_2f1(a, b, c, t);
        const complexd rhs =
            gauss_2f1(a - 1.0, b, c, t) + b * t / c * gauss_2f1(a, b + 1.0, c + 1.0, t);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("appell_f4 examples") {
    CHECK(appell_f4(1.5, 2.0, 1.5, 1.5, 0.0, 0.0) == complexd(1.0, 0.0));
    // n = 0 row only
    const complexd row = appell_f4(1.2, 0.8, 1.7, 2.2, complexd(0.3, 0.1), 0.0);
    CHECK(rel_err(row, gauss_2f1(1.2, 0.8, 1.7, complexd(0.3, 0.1))) < 1e-13);
    // frozen brute-force double-sum oracle value (= 100/41)
    CHECK(rel_err(appell_f4(1.5, 2.0, 1.5, 1.5, 0.1, 0.2),
                  2.4390243902439024390244) < 1e-12);
    CHECK_THROWS_AS(appell_f4(1.0, 1.0, 1.0, 1.0, 0.5, 0.5), GuardError);
    CHECK_THROWS_AS(appell_f4(1.0, 1.0, -1.0, 1.0, 0.1, 0.1), DomainError);
}

TEST_CASE("appell_f4 matches brute-force double summation") {
    // independent row-by-row summation at extended precision
    auto brute = [](double a, double b, double c1, double c2, complexd t,
                    complexd s) {
        std::complex<long double> total = 0.0L;
        const std::complex<long double> tl(t.real(), t.imag());
        const std::complex<long double> sl(s.real(), s.imag());
        for (int m = 0; m <= 200; ++m) {
            for (int n = 0; n <= 200; ++n) {
                long double lg = lgammal(a + m + n) - lgammal(a) + lgammal(b + m + n) -
                                 lgammal(b) - (lgammal(c1 + m) - lgammal(c1)) -
                                 (lgammal(c2 + n) - lgammal(c2)) - lgammal(1.0L + m) -
                                 lgammal(1.0L + n);
                total += std::exp(std::complex<long double>(lg, 0.0L)) *
                         std::pow(tl, m) * std::pow(sl, n);
            }
        }
        return total;
    };
    TestRng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const double a = rng.uniform(0.3, 2.5);
        const double b = rng.uniform(0.3, 2.5);
        const double c1 = rng.uniform(0.4, 2.0);
        const double c2 = rng.uniform(0.4, 2.0);
        const complexd t = rng.box(0.12);
        const complexd s = rng.box(0.12);
        const auto want = brute(a, b, c1, c2, t, s);
        const complexd got = appell_f4(a, b, c1, c2, t, s);
        const double err =
            std::abs(got - complexd(static_cast<double>(want.real()),
                                    static_cast<double>(want.imag()))) /
            static_cast<double>(std::abs(want));
        CHECK(err < 1e-10);
    }
}

TEST_CASE("pochhammer_ratio_limit_check") {
    const auto equal_args = pochhammer_ratio_limit_check(1.3, 1.3, 50);
    for (double r : equal_args) CHECK(r == doctest::Approx(1.0).epsilon(1e-14));

    const auto r1 = pochhammer_ratio_limit_check(1.5, 0.5, 100);
    CHECK(r1[99] == doctest::Approx(1.005).epsilon(1e-12)); // (k+1/2)/k at k=100

    const auto r2 = pochhammer_ratio_limit_check(2.0, 1.0, 100);
    CHECK(r2[99] == doctest::Approx(1.01).epsilon(1e-12)); // (k+1)/k at k=100

    CHECK_THROWS_AS(pochhammer_ratio_limit_check(1.0, 1.0, 5), DomainError);
}

TEST_CASE("pochhammer ratio tail bound |r_k - 1| <= C/k") {
    const auto r = pochhammer_ratio_limit_check(1.7, 0.4, 400);
    // fit C from k = 10 and confirm it bounds the rest of the tail
    const double c_fit = std::abs(r[9] - 1.0) * 10.0 * 1.05;
    for (int k = 10; k <= 400; ++k)
        CHECK(std::abs(r[k - 1] - 1.0) <= c_fit / k);
    // monotone for large k
    for (int k = 100; k < 400; ++k)
        CHECK(std::abs(r[k] - 1.0) <= std::abs(r[k - 1] - 1.0) * (1.0 + 1e-12));
}

TEST_CASE("series control validation") {
    SeriesControl bad_terms{4, 1e-10, 3};
    CHECK_THROWS_AS(bad_terms.validate(), DomainError);
    SeriesControl bad_tol{100, 2.0, 3};
    CHECK_THROWS_AS(bad_tol.validate(), DomainError);
    SeriesControl bad_consec{100, 1e-10, 1};
    CHECK_THROWS_AS(bad_consec.validate(), DomainError);
    SeriesControl tight{16, 1e-2, 2};
    CHECK_NOTHROW(tight.validate());
    // truncation failure surfaces as TruncationError
    CHECK_THROWS_AS(gauss_2f1(2.0, 3.0, 1.1, complexd(0.9, 0.0), SeriesControl{8, 1e-14, 2}),
                    TruncationError);
}

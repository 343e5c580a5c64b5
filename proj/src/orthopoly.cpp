#include "ortholab/orthopoly.hpp"

#include <cmath>
#include <string>

#include "ortholab/specfun.hpp"

namespace ortholab::orthopoly {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kOverflowGuard = 1e250;
constexpr int kMaxDegree = 200; // forward recurrence stays unscaled

using specfun::log_gamma;

// Gegenbauer(lambda) == Jacobi(lambda-1/2, lambda-1/2) as orthonormal
// sequences, but its recurrence is computed from the classical
// ultraspherical formulas so the equivalence stays a testable fact.
std::pair<double, double> gegenbauer_coeffs(double lambda, int k) {
    if (k == 0) return {0.0, 0.0};
    if (k == 1) return {0.0, std::sqrt(1.0 / (2.0 * lambda + 2.0))};
    const double num = k * (k + 2.0 * lambda - 1.0);
    const double den = 4.0 * (k + lambda) * (k + lambda - 1.0);
    return {0.0, std::sqrt(num / den)};
}

std::pair<double, double> jacobi_coeffs(double alpha, double beta, int k) {
    const double s = alpha + beta;
    if (k == 0) return {(beta - alpha) / (s + 2.0), 0.0};
    const double a_k =
        (beta * beta - alpha * alpha) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
    double beta_k; // squared off-diagonal entry
    if (k == 1) {
        beta_k = 4.0 * (alpha + 1.0) * (beta + 1.0) /
                 ((s + 2.0) * (s + 2.0) * (s + 3.0));
    } else {
        beta_k = 4.0 * k * (k + alpha) * (k + beta) * (k + s) /
                 ((2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) *
                  (2.0 * k + s - 1.0));
    }
    return {a_k, std::sqrt(beta_k)};
}

} // namespace

FamilySpec FamilySpec::hermite() { return {FamilyKind::Hermite}; }

FamilySpec FamilySpec::laguerre(double nu) {
    FamilySpec f{FamilyKind::Laguerre};
    f.nu = nu;
    f.validate();
    return f;
}

FamilySpec FamilySpec::jacobi(double alpha, double beta) {
    FamilySpec f{FamilyKind::Jacobi};
    f.alpha = alpha;
    f.beta = beta;
    f.validate();
    return f;
}

FamilySpec FamilySpec::gegenbauer(double lambda) {
    FamilySpec f{FamilyKind::Gegenbauer};
    f.lambda = lambda;
    f.alpha = lambda - 0.5;
    f.beta = lambda - 0.5;
    f.validate();
    return f;
}

FamilySpec FamilySpec::chebyshev_t() {
    FamilySpec f{FamilyKind::ChebyshevT};
    f.lambda = 0.0;
    f.alpha = -0.5;
    f.beta = -0.5;
    return f;
}

void FamilySpec::validate() const {
    switch (kind) {
    case FamilyKind::Hermite:
    case FamilyKind::ChebyshevT:
        return;
    case FamilyKind::Laguerre:
        if (!(nu > -1.0)) throw DomainError("FamilySpec: Laguerre requires nu > -1");
        return;
    case FamilyKind::Jacobi:
        if (!(alpha > -1.0 && beta > -1.0))
            throw DomainError("FamilySpec: Jacobi requires alpha, beta > -1");
        return;
    case FamilyKind::Gegenbauer:
        if (!(lambda >= 0.0))
            throw DomainError("FamilySpec: Gegenbauer requires lambda >= 0");
        if (alpha != lambda - 0.5 || beta != lambda - 0.5)
            throw DomainError("FamilySpec: Gegenbauer must have alpha = beta = lambda - 1/2");
        return;
    }
    throw DomainError("FamilySpec: unknown kind");
}

double tau_jacobi(double alpha, double beta) {
    return std::exp((alpha + beta + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) +
                    log_gamma(beta + 1.0) - log_gamma(alpha + beta + 2.0));
}

double tau_gegenbauer(double lambda) {
    return std::sqrt(kPi) *
           std::exp(log_gamma(lambda + 0.5) - log_gamma(lambda + 1.0));
}

double FamilySpec::weight_mass() const {
    switch (kind) {
    case FamilyKind::Hermite: return std::sqrt(kPi);
    case FamilyKind::Laguerre: return std::exp(log_gamma(nu + 1.0));
    case FamilyKind::Jacobi: return tau_jacobi(alpha, beta);
    case FamilyKind::Gegenbauer: return tau_gegenbauer(lambda);
    case FamilyKind::ChebyshevT: return kPi;
    }
    throw DomainError("FamilySpec: unknown kind");
}

std::pair<double, double> recurrence_coeffs(const FamilySpec& family, int k) {
    if (k < 0) throw DomainError("recurrence_coeffs: k must be >= 0");
    family.validate();
    switch (family.kind) {
    case FamilyKind::Hermite:
        return {0.0, k == 0 ? 0.0 : std::sqrt(k / 2.0)};
    case FamilyKind::Laguerre:
        return {2.0 * k + family.nu + 1.0,
                k == 0 ? 0.0 : std::sqrt(k * (k + family.nu))};
    case FamilyKind::Jacobi:
        return jacobi_coeffs(family.alpha, family.beta, k);
    case FamilyKind::Gegenbauer:
        return gegenbauer_coeffs(family.lambda, k);
    case FamilyKind::ChebyshevT:
        return gegenbauer_coeffs(0.0, k);
    }
    throw DomainError("recurrence_coeffs: unknown kind");
}

std::vector<complex> eval_orthonormal_all(const FamilySpec& family, int K,
                                          complex z) {
    if (K < 0) throw DomainError("eval_orthonormal: k must be >= 0");
    if (K > kMaxDegree)
        throw DomainError("eval_orthonormal: degree capped at " +
                          std::to_string(kMaxDegree));
    family.validate();
    std::vector<complex> out(K + 1);
    complex prev = 0.0;
    complex cur = 1.0 / std::sqrt(family.weight_mass());
    out[0] = cur;
    for (int k = 0; k < K; ++k) {
        const auto [a_k, b_k] = recurrence_coeffs(family, k);
        const auto [a_next, b_next] = recurrence_coeffs(family, k + 1);
        (void)a_next;
        complex next = ((z - a_k) * cur - b_k * prev) / b_next;
        if (std::abs(next) > kOverflowGuard)
            throw OverflowError("eval_orthonormal: |phi_k| exceeded representable guard at k=" +
                                std::to_string(k + 1));
        prev = cur;
        cur = next;
        out[k + 1] = cur;
    }
    // standard Laguerre polynomials have leading coefficient (-1)^k/k!,
    // so the standard-convention orthonormal sequence alternates sign
    // relative to the positive-leading recurrence output
    if (family.kind == FamilyKind::Laguerre)
        for (int k = 1; k <= K; k += 2) out[k] = -out[k];
    return out;
}

complex eval_orthonormal(const FamilySpec& family, int k, complex z) {
    return eval_orthonormal_all(family, k, z)[k];
}

double standard_scale(const FamilySpec& family, int k) {
    if (k < 0) throw DomainError("standard_scale: k must be >= 0");
    family.validate();
    switch (family.kind) {
    case FamilyKind::Hermite:
        // ||H_k||^2 = 2^k k! sqrt(pi)
        return std::exp(0.5 * (k * std::log(2.0) + log_gamma(k + 1.0) +
                               0.5 * std::log(kPi)));
    case FamilyKind::Laguerre:
        // ||L^nu_k||^2 = Gamma(k+nu+1)/k!
        return std::exp(0.5 * (log_gamma(k + family.nu + 1.0) - log_gamma(k + 1.0)));
    case FamilyKind::ChebyshevT:
        return k == 0 ? std::sqrt(kPi) : std::sqrt(kPi / 2.0);
    case FamilyKind::Jacobi: {
        // ||P^{(alpha,beta)}_k||^2 = 2^{a+b+1}/(2k+a+b+1) *
        //     Gamma(k+a+1)Gamma(k+b+1)/(Gamma(k+a+b+1) k!);
        // the k = 0 norm is tau(a,b), written separately because
        // Gamma(a+b+1) blows up at a+b = -1
        const double a = family.alpha, b = family.beta;
        if (k == 0) return std::sqrt(tau_jacobi(a, b));
        const double log_h2 = (a + b + 1.0) * std::log(2.0) -
                              std::log(2.0 * k + a + b + 1.0) +
                              log_gamma(k + a + 1.0) + log_gamma(k + b + 1.0) -
                              log_gamma(k + a + b + 1.0) - log_gamma(k + 1.0);
        return std::exp(0.5 * log_h2);
    }
    case FamilyKind::Gegenbauer: {
        if (family.lambda == 0.0)
            return k == 0 ? std::sqrt(kPi) : std::sqrt(kPi / 2.0);
        // ||C^lambda_k||^2 = pi 2^{1-2l} Gamma(k+2l) / (k! (k+l) Gamma(l)^2)
        const double l = family.lambda;
        const double log_h2 = std::log(kPi) + (1.0 - 2.0 * l) * std::log(2.0) +
                              log_gamma(k + 2.0 * l) - log_gamma(k + 1.0) -
                              std::log(k + l) - 2.0 * log_gamma(l);
        return std::exp(0.5 * log_h2);
    }
    }
    throw DomainError("standard_scale: unknown kind");
}

complex eval_standard(const FamilySpec& family, int k, complex z) {
    return standard_scale(family, k) * eval_orthonormal(family, k, z);
}

std::vector<complex> eval_standard_all(const FamilySpec& family, int K,
                                       complex z) {
    auto vals = eval_orthonormal_all(family, K, z);
    for (int k = 0; k <= K; ++k) vals[k] *= standard_scale(family, k);
    return vals;
}

} // namespace ortholab::orthopoly

#ifndef ORTHOLAB_ORTHOPOLY_HPP
#define ORTHOLAB_ORTHOPOLY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "ortholab/errors.hpp"

namespace ortholab::orthopoly {

using complex = std::complex<double>;

enum class FamilyKind { Hermite, Laguerre, Jacobi, Gegenbauer, ChebyshevT };

// Which classical orthogonal family, with its weight parameters.
// Hermite: w = e^{-x^2} on R; Laguerre(nu): w = x^nu e^{-x} on (0,inf),
// nu > -1; Jacobi(alpha,beta): w = (1-x)^alpha (1+x)^beta on (-1,1),
// alpha,beta > -1; Gegenbauer(lambda): w = (1-x^2)^{lambda-1/2}, lambda >= 0
// (equals Jacobi(lambda-1/2, lambda-1/2)); ChebyshevT = Gegenbauer(0).
struct FamilySpec {
    FamilyKind kind = FamilyKind::Hermite;
    double nu = 0.0;     // Laguerre
    double alpha = 0.0;  // Jacobi
    double beta = 0.0;   // Jacobi
    double lambda = 0.0; // Gegenbauer

    static FamilySpec hermite();
    static FamilySpec laguerre(double nu);
    static FamilySpec jacobi(double alpha, double beta);
    static FamilySpec gegenbauer(double lambda);
    static FamilySpec chebyshev_t();

    void validate() const;
    // Total mass of the weight: sqrt(pi), Gamma(nu+1), tau(alpha,beta),
    // tau(lambda) respectively.
    double weight_mass() const;
};

// tau(alpha,beta) = 2^{alpha+beta+1} Gamma(alpha+1) Gamma(beta+1) /
// Gamma(alpha+beta+2), the mass of the Jacobi weight.
double tau_jacobi(double alpha, double beta);
// tau(lambda) = sqrt(pi) Gamma(lambda+1/2)/Gamma(lambda+1).
double tau_gegenbauer(double lambda);

// Coefficients of the orthonormal three-term recurrence
//   b_{k+1} p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x),
// with b_k > 0 for k >= 1 (b_0 is unused and returned as 0).
std::pair<double, double> recurrence_coeffs(const FamilySpec& family, int k);

// phi_k(z), the k-th orthonormal polynomial in the standard sign
// convention of its family (for Laguerre the leading coefficient
// alternates: phi_k = (-1)^k times the positive-leading recurrence value).
complex eval_orthonormal(const FamilySpec& family, int k, complex z);

// All of phi_0(z) .. phi_K(z) in one recurrence sweep.
std::vector<complex> eval_orthonormal_all(const FamilySpec& family, int K,
                                          complex z);

// c_k with StandardPoly_k = c_k * phi_k.  Hermite: sqrt(2^k k! sqrt(pi));
// Laguerre: sqrt(Gamma(k+nu+1)/k!); ChebyshevT: sqrt(pi) for k = 0,
// sqrt(pi/2) for k >= 1; Jacobi/Gegenbauer: the classical norms.
double standard_scale(const FamilySpec& family, int k);

// eval_orthonormal scaled by standard_scale, i.e. the standardly
// normalized polynomial H_k, L^nu_k, P^{(alpha,beta)}_k, C^lambda_k, T_k.
complex eval_standard(const FamilySpec& family, int k, complex z);
std::vector<complex> eval_standard_all(const FamilySpec& family, int K,
                                       complex z);

} // namespace ortholab::orthopoly

#endif

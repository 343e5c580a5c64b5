#ifndef ORTHOLAB_COEFFICIENTS_HPP
#define ORTHOLAB_COEFFICIENTS_HPP

#include <complex>
#include <vector>

#include "ortholab/orthopoly.hpp"

namespace ortholab {

// Fourier coefficients f_0..f_K of a function against the orthonormal
// polynomials of `family`, together with the quadrature order that
// produced them (0 when the values are analytic).
struct CoefficientSeries {
    orthopoly::FamilySpec family;
    std::vector<std::complex<double>> values;
    int quadrature_order = 0;
};

} // namespace ortholab

#endif

#ifndef ORTHOLAB_QUADRATURE_HPP
#define ORTHOLAB_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

#include "ortholab/coefficients.hpp"
#include "ortholab/orthopoly.hpp"

namespace ortholab::quadrature {

using complex = std::complex<double>;
using orthopoly::FamilySpec;

// Gauss rule for int f(x) w(x) dx against the family weight.  Weights are
// positive and sum to the weight mass; the rule is exact through degree
// 2n-1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    FamilySpec family;
    int order = 0;
};

// Golub-Welsch from the orthonormal recurrence coefficients, 1 <= n <= 256.
QuadratureRule gauss_rule(const FamilySpec& family, int n);

// f_k = sum_j w_j f(x_j) phi_k(x_j) for k = 0..K.
CoefficientSeries fourier_coefficients(const std::function<complex(double)>& f,
                                       const FamilySpec& family, int K, int n);

enum class PlanarScheme { CartesianTensor, PolarTensor };

// Discretization of a weighted integral over the complex plane, truncated
// to a square [-R,R]^2 (Cartesian) or a disk of radius R (polar).
struct PlanarGridSpec {
    PlanarScheme scheme = PlanarScheme::CartesianTensor;
    double extent = 0.0;   // truncation radius / half-width R
    int resolution = 160;  // nodes per axis

    // R = sqrt((theta+1)/2) * (6 + sqrt(2k+1)) + peak_shift, sized so the
    // Gaussian weight mass outside the square is negligible; peak_shift
    // accommodates integrands whose maximum sits away from the origin.
    static PlanarGridSpec cartesian_for_hermite(double theta, int degree,
                                                double peak_shift = 0.0,
                                                int resolution = 160);
    // R = (theta-1)/(2 sqrt(theta)) * (50 + 10k); requires theta <= 8 so
    // the Bessel decay dominates the exp(2 Re z/(theta-1)) growth factor.
    static PlanarGridSpec polar_for_laguerre(double theta, int degree,
                                             int resolution = 192);
};

struct HermiteThetaWeight {
    double theta;
};
struct LaguerreThetaWeight {
    double theta;
    double nu;
};

struct PlanarIntegral {
    complex value{};
    // a-priori bound on the relative weight mass neglected by truncation
    double neglected_mass_rel = 0.0;
    bool truncation_warning = false; // neglected mass bound > 1e-12
};

// int g(z) weight(z) dsigma over the truncated domain.  Cartesian grids
// use Gauss-Legendre per axis; polar grids use panelled Gauss-Legendre in
// radius and the trapezoid rule in angle.  Point evaluation may run on
// several threads; the reduction is fixed-order pairwise, so results do
// not depend on the worker count.
PlanarIntegral planar_weighted_integral(const std::function<complex(complex)>& g,
                                        const HermiteThetaWeight& weight,
                                        const PlanarGridSpec& grid);
PlanarIntegral planar_weighted_integral(const std::function<complex(complex)>& g,
                                        const LaguerreThetaWeight& weight,
                                        const PlanarGridSpec& grid);

// Boundary of E_theta traversed through the Zhukowskii map
// z = (w + 1/w)/2, w = sqrt(theta) e^{i phi}, with n_nodes uniform in phi.
struct EllipseContour {
    double theta = 2.0;
    int n_nodes = 512;

    void validate() const; // theta > 1, n_nodes a power of two >= 64
    double semi_major() const;
    double semi_minor() const;
};

// Contour integral over the boundary of E_theta of g(z) rho(z) |dz| by the
// trapezoid rule in the Zhukowskii angle (spectrally accurate for smooth
// integrands).
complex ellipse_contour_integral(const std::function<complex(complex)>& g,
                                 const EllipseContour& contour,
                                 const std::function<double(complex)>& rho);

// (1/2pi) contour integral of Tt_k(z) conj(Tt_m(z)) |z^2-1|^{-1/2} |dz|
// where Tt_k = 2 T_k satisfies Tt_k((w+1/w)/2) = w^k + w^{-k}.  Values are
// 4 for k=m=0, theta^k + theta^{-k} for k=m>0, and 0 otherwise.
complex chebyshev_boundary_gram(double theta, int k, int m, int n_nodes = 1024);

} // namespace ortholab::quadrature

#endif

"""Smoke tests for the python bindings."""

import cmath
import math

import pytest

import ortholab
from ortholab import kernels, orthopoly, quadrature, specfun, summability


def test_special_functions():
    assert specfun.log_gamma(6.0) == pytest.approx(math.log(120.0), rel=1e-13)
    # K_{1/2}(x) = sqrt(pi/(2x)) exp(-x)
    assert specfun.bessel_k(0.5, 1.0) == pytest.approx(
        math.sqrt(math.pi / 2.0) * math.exp(-1.0), rel=1e-11
    )
    assert specfun.bessel_k(0.5, 1.0) == pytest.approx(
        specfun.bessel_k_integral(0.5, 1.0), rel=1e-9
    )
    # 2F1(1,1;2;t) = -log(1-t)/t
    val = specfun.gauss_2f1(1.0, 1.0, 2.0, 0.5)
    assert val.real == pytest.approx(2.0 * math.log(2.0), rel=1e-12)


def test_orthonormal_polynomials():
    herm = orthopoly.FamilySpec.hermite()
    assert orthopoly.eval_orthonormal(herm, 0, 0.3).real == pytest.approx(
        math.pi ** -0.25, rel=1e-13
    )
    cheb = orthopoly.FamilySpec.chebyshev_t()
    x = 0.3
    want = math.sqrt(2.0 / math.pi) * math.cos(2.0 * math.acos(x))
    assert orthopoly.eval_orthonormal(cheb, 2, x).real == pytest.approx(want, rel=1e-12)


def test_gauss_rule_mass():
    nodes, weights = quadrature.gauss_rule(orthopoly.FamilySpec.hermite(), 32)
    assert len(nodes) == 32
    assert sum(weights) == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_mehler_series_vs_closed():
    family = orthopoly.FamilySpec.hermite()
    spec = kernels.KernelSpec.hermite_mehler(2.0)
    z, u = 0.3 + 0.2j, 0.1 - 0.4j
    series, _, _ = kernels.kernel_series(family, 2.0, z, u, 60)
    closed = kernels.kernel_closed(spec, z, u)
    assert abs(series - closed) / abs(closed) < 1e-10


def test_boundary_gram_values():
    assert quadrature.chebyshev_boundary_gram(2.0, 0, 0).real == pytest.approx(4.0)
    assert quadrature.chebyshev_boundary_gram(2.0, 3, 3).real == pytest.approx(8.125)
    assert abs(quadrature.chebyshev_boundary_gram(2.0, 2, 5)) < 1e-12


def test_norm_identity_and_radius():
    rep = summability.hermite_norm_identity(0.2, 2.0)
    assert rep.pass_
    assert rep.rel_err <= 1e-6

    values = [0.5**k for k in range(48)]
    radius, flag = summability.radius_estimate(
        orthopoly.FamilySpec.hermite(), values
    )
    assert flag == "finite"
    assert radius == pytest.approx(4.0, rel=1e-12)


def test_coefficients_via_callback():
    t = 0.4
    family = orthopoly.FamilySpec.hermite()
    coeffs = quadrature.fourier_coefficients(
        lambda x: cmath.exp(2.0 * x * t - t * t), family, 12, 48
    )
    want = t**2 * math.sqrt(math.sqrt(math.pi) * 2.0**2 / 2.0)
    assert coeffs[2].real == pytest.approx(want, rel=1e-11)

"""Reproducing kernels and geometric-weight summability for classical
orthogonal expansions.

The heavy lifting lives in the compiled extension ``ortholab._core``;
this package re-exports its submodules.
"""

from ._core import kernels, orthopoly, quadrature, specfun, summability
from ._core import run_acceptance

__all__ = [
    "kernels",
    "orthopoly",
    "quadrature",
    "specfun",
    "summability",
    "run_acceptance",
]

__version__ = "0.1.0"

"""Lattice operations for first and second order stochastic dominance."""

from ._sdlattice import (
    Distribution,
    PiecewiseLinear,
    approx_equal,
    extremum,
    functional,
    icv_transform,
    icx_transform,
    join,
    kolmogorov,
    leq,
    levy,
    meet,
    psi_tight,
    psi_tight_oracle,
    reflect,
    ui_tail,
    wasserstein1,
)

__all__ = [
    "Distribution",
    "PiecewiseLinear",
    "approx_equal",
    "extremum",
    "functional",
    "icv_transform",
    "icx_transform",
    "join",
    "kolmogorov",
    "leq",
    "levy",
    "meet",
    "psi_tight",
    "psi_tight_oracle",
    "reflect",
    "ui_tail",
    "wasserstein1",
]

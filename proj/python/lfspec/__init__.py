"""Exact spectral-measure computations on Q_p and F_p((T))."""

from lfspec._core import (
    acceptance,
    double_integral,
    frame_bounds,
    ft_atoms,
    ft_selfsimilar,
    ft_uniform,
    hadamard,
    landau,
    qlattice,
    selfsimilar,
    spectral_check,
    triad,
)

__all__ = [
    "acceptance",
    "double_integral",
    "frame_bounds",
    "ft_atoms",
    "ft_selfsimilar",
    "ft_uniform",
    "hadamard",
    "landau",
    "qlattice",
    "selfsimilar",
    "spectral_check",
    "triad",
]

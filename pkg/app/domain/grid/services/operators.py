"""
Discrete d1, d2, divergence and Laplacian on periodic lattices
"""
from enum import Enum
from typing import Union

import numpy as np

from app.domain.grid.value_objects import BoxGrid, GridField, GridScalar, GridTwoForm


class DerivativeScheme(str, Enum):
    """Periodic derivative schemes"""
    SPECTRAL = "spectral"
    CENTRAL2 = "central2"


SchemeLike = Union[DerivativeScheme, str]


def partial(values: np.ndarray, grid: BoxGrid, axis: int, scheme: SchemeLike = DerivativeScheme.SPECTRAL) -> np.ndarray:
    """d/dx_axis of a lattice with periodic wraparound"""
    scheme = DerivativeScheme(scheme)
    if scheme is DerivativeScheme.SPECTRAL:
        kappa = grid.angular_wavenumbers()[axis]
        shape = [1] * grid.dimension
        shape[axis] = -1
        spectrum = np.fft.fft(values, axis=axis) * (1j * kappa.reshape(shape))
        return np.real(np.fft.ifft(spectrum, axis=axis))
    h = grid.spacing[axis]
    return (np.roll(values, -1, axis=axis) - np.roll(values, 1, axis=axis)) / (2.0 * h)


def d1_grid(f: GridScalar, scheme: SchemeLike = DerivativeScheme.SPECTRAL) -> GridField:
    """Gradient (d f/dx_1, ..., d f/dx_n)"""
    return GridField.from_arrays(
        f.grid, [partial(f.values, f.grid, axis, scheme) for axis in range(f.grid.dimension)]
    )


def d2_grid(X: GridField, scheme: SchemeLike = DerivativeScheme.SPECTRAL) -> GridTwoForm:
    """(d2 X)_ij = -d f_i/dx_j + d f_j/dx_i for i < j"""
    grid = X.grid
    n = grid.dimension
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            entries[(i, j)] = (
                -partial(X.components[i].values, grid, j, scheme)
                + partial(X.components[j].values, grid, i, scheme)
            )
    return GridTwoForm.from_arrays(grid, entries)


def div_grid(X: GridField, scheme: SchemeLike = DerivativeScheme.SPECTRAL) -> GridScalar:
    grid = X.grid
    total = np.zeros(grid.shape)
    for axis, component in enumerate(X.components):
        total += partial(component.values, grid, axis, scheme)
    return GridScalar(grid, total)


def laplacian_grid(f: GridScalar, scheme: SchemeLike = DerivativeScheme.SPECTRAL) -> GridScalar:
    """div(d1 f) with the same scheme for both derivatives"""
    return div_grid(d1_grid(f, scheme), scheme)

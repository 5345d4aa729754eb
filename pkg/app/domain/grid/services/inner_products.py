"""
Quadrature inner products on periodic lattices

Uniform weights times the cell volume; exact for trigonometric polynomials
below the Nyquist limit. Derivatives inside inner0 and inner1 are spectral.
"""
import math

import numpy as np

from app.domain.grid.value_objects import GridField, GridScalar, GridTwoForm

from .operators import DerivativeScheme, partial


def quadrature(values: np.ndarray, cell_volume: float) -> float:
    return float(np.sum(values) * cell_volume)


def inner_l2(f: GridScalar, g: GridScalar) -> float:
    f.grid.require_same(g.grid)
    return quadrature(f.values * g.values, f.grid.cell_volume)


def inner0(f: GridScalar, g: GridScalar) -> float:
    """<f, g>_0 = int f g + sum_i int f_i g_i + sum_ij int f_ij g_ij"""
    f.grid.require_same(g.grid)
    grid = f.grid
    n = grid.dimension
    spectral = DerivativeScheme.SPECTRAL
    f_first = [partial(f.values, grid, i, spectral) for i in range(n)]
    g_first = [partial(g.values, grid, i, spectral) for i in range(n)]

    integrand = f.values * g.values
    for i in range(n):
        integrand = integrand + f_first[i] * g_first[i]
        for j in range(n):
            integrand = integrand + (
                partial(f_first[i], grid, j, spectral) * partial(g_first[i], grid, j, spectral)
            )
    return quadrature(integrand, grid.cell_volume)


def inner1_l2(X: GridField, Y: GridField) -> float:
    """sum_i int f_i g_i"""
    X.grid.require_same(Y.grid)
    return quadrature(np.sum(X.stack() * Y.stack(), axis=0), X.grid.cell_volume)


def inner1(X: GridField, Y: GridField) -> float:
    """<X, Y>_1 = sum_i int f_i g_i + sum_ij int (d f_i/dx_j)(d g_i/dx_j)"""
    X.grid.require_same(Y.grid)
    grid = X.grid
    n = grid.dimension
    spectral = DerivativeScheme.SPECTRAL
    integrand = np.sum(X.stack() * Y.stack(), axis=0)
    for i in range(n):
        for j in range(n):
            integrand = integrand + (
                partial(X.components[i].values, grid, j, spectral)
                * partial(Y.components[i].values, grid, j, spectral)
            )
    return quadrature(integrand, grid.cell_volume)


def inner2(F: GridTwoForm, G: GridTwoForm) -> float:
    """sum_{i<j} int f_ij g_ij"""
    F.grid.require_same(G.grid)
    total = 0.0
    for key, entry in F.entries.items():
        total += quadrature(entry.values * G.entries[key].values, F.grid.cell_volume)
    return total


def norm0(f: GridScalar) -> float:
    return math.sqrt(max(inner0(f, f), 0.0))


def norm1(X: GridField) -> float:
    return math.sqrt(max(inner1(X, X), 0.0))


def norm2(F: GridTwoForm) -> float:
    return math.sqrt(max(inner2(F, F), 0.0))


def norm_l2(f: GridScalar) -> float:
    return math.sqrt(max(inner_l2(f, f), 0.0))


def norm1_l2(X: GridField) -> float:
    return math.sqrt(max(inner1_l2(X, X), 0.0))

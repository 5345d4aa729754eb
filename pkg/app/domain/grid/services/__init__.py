from .inner_products import (
    inner0,
    inner1,
    inner1_l2,
    inner2,
    inner_l2,
    norm0,
    norm1,
    norm1_l2,
    norm2,
    norm_l2,
    quadrature,
)
from .operators import DerivativeScheme, d1_grid, d2_grid, div_grid, laplacian_grid, partial
from .sampling import sample

__all__ = [
    "DerivativeScheme",
    "d1_grid",
    "d2_grid",
    "div_grid",
    "inner0",
    "inner1",
    "inner1_l2",
    "inner2",
    "inner_l2",
    "laplacian_grid",
    "norm0",
    "norm1",
    "norm1_l2",
    "norm2",
    "norm_l2",
    "partial",
    "quadrature",
    "sample",
]

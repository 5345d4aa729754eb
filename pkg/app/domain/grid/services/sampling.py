"""
Sampling analytic fields onto lattices
"""
from typing import Callable, Optional, Sequence, Union

import numpy as np

from app.core.exceptions import GridError, NumericDomainError
from app.domain.expr.entities import Expr
from app.domain.expr.services import CompiledExprs, compile_exprs
from app.domain.grid.value_objects import BoxGrid, BumpWindow, GridField, GridScalar

AnalyticField = Union[Expr, Sequence[Expr], CompiledExprs, Callable[..., object]]


def _evaluate(field: AnalyticField, grid: BoxGrid, variables: Optional[Sequence[str]]):
    """Returns (values as a list of arrays, whether the result is a vector)"""
    mesh = grid.mesh()
    if isinstance(field, Expr):
        field = [field]
        vector = False
    elif isinstance(field, CompiledExprs):
        return list(field(mesh)), True
    elif callable(field):
        with np.errstate(all="ignore"):
            result = field(*mesh)
        if isinstance(result, (list, tuple)):
            return [np.broadcast_to(np.asarray(r, dtype=float), grid.shape) for r in result], True
        return [np.broadcast_to(np.asarray(result, dtype=float), grid.shape)], False
    else:
        vector = True

    exprs = list(field)
    if variables is None:
        names = sorted(set().union(*(e.variables() for e in exprs))) if exprs else []
        # constant fields need no axis names
        variables = names or [f"axis{a}" for a in range(grid.dimension)]
    if len(variables) != grid.dimension:
        raise GridError(
            f"Field has {len(variables)} variables, grid has dimension {grid.dimension}"
        )
    return list(compile_exprs(exprs, variables)(mesh)), vector


def sample(
    field: AnalyticField,
    grid: BoxGrid,
    window: Optional[BumpWindow] = None,
    variables: Optional[Sequence[str]] = None,
) -> Union[GridScalar, GridField]:
    """
    Evaluate a scalar or n-vector field at the lattice nodes

    Args:
        field: An Expr, a sequence of Expr, compiled expressions or a
            callable taking one coordinate array per axis
        grid: Target lattice
        window: Optional bump window multiplied into every component
        variables: Variable order matching the grid axes

    Returns:
        GridScalar for a single expression or array, GridField for n components
    """
    values, vector = _evaluate(field, grid, variables)
    if window is not None:
        weights = window.weights(grid.mesh())
        values = [v * weights for v in values]

    if not all(np.all(np.isfinite(v)) for v in values):
        raise NumericDomainError("Field is not finite at every lattice node")

    if not vector:
        return GridScalar(grid, values[0])
    if len(values) != grid.dimension:
        raise GridError(
            f"Field has {len(values)} components; expected 1 or {grid.dimension}"
        )
    return GridField.from_arrays(grid, values)

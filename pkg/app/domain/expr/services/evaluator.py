"""
Expression evaluation

Two evaluators share one semantics:

* ``evaluate`` walks the tree with exact scalar arithmetic and strict error
  reporting.
* ``compile_exprs`` turns a sequence of trees into one numpy function over
  coordinate arrays, used for lattices, sample sets and ODE right-hand sides.

In both, a product whose left factor is zero is zero, whatever the right
factor evaluates to. Derivatives of bump rely on this at the edge of the
support.
"""
import math
from functools import singledispatch
from typing import Dict, List, Mapping, Sequence

import numpy as np

from app.core.exceptions import EnvironmentBindingError, NumericDomainError
from app.domain.expr.entities import (
    Add,
    Call,
    Const,
    Div,
    Expr,
    Mul,
    Neg,
    Pow,
    Sub,
    Var,
)
from app.domain.expr.services.calculus import bump_value

_SCALAR_FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "tanh": math.tanh,
    "bump": bump_value,
}


def evaluate(expr: Expr, env: Mapping[str, float]) -> float:
    """Evaluate expr at the point env"""
    try:
        return float(_eval(expr, env))
    except OverflowError as e:
        raise NumericDomainError(f"Overflow while evaluating: {e}") from e


@singledispatch
def _eval(expr: Expr, env: Mapping[str, float]) -> float:
    raise TypeError(f"Cannot evaluate {type(expr).__name__}")


@_eval.register
def _(expr: Const, env: Mapping[str, float]) -> float:
    return expr.value


@_eval.register
def _(expr: Var, env: Mapping[str, float]) -> float:
    try:
        return float(env[expr.name])
    except KeyError:
        raise EnvironmentBindingError(f"No value bound for variable '{expr.name}'") from None


@_eval.register
def _(expr: Add, env: Mapping[str, float]) -> float:
    return _eval(expr.left, env) + _eval(expr.right, env)


@_eval.register
def _(expr: Sub, env: Mapping[str, float]) -> float:
    return _eval(expr.left, env) - _eval(expr.right, env)


@_eval.register
def _(expr: Mul, env: Mapping[str, float]) -> float:
    left = _eval(expr.left, env)
    if left == 0.0:
        return 0.0
    return left * _eval(expr.right, env)


@_eval.register
def _(expr: Div, env: Mapping[str, float]) -> float:
    numerator = _eval(expr.left, env)
    denominator = _eval(expr.right, env)
    if denominator == 0.0:
        raise NumericDomainError("Division by zero")
    return numerator / denominator


@_eval.register
def _(expr: Pow, env: Mapping[str, float]) -> float:
    return _eval(expr.base, env) ** expr.exponent


@_eval.register
def _(expr: Neg, env: Mapping[str, float]) -> float:
    return -_eval(expr.operand, env)


@_eval.register
def _(expr: Call, env: Mapping[str, float]) -> float:
    return _SCALAR_FUNCTIONS[expr.function](_eval(expr.argument, env))


# Vectorized evaluation

def _mul(a, b):
    if np.ndim(a) == 0:
        return 0.0 if a == 0 else a * b
    return np.where(a == 0, 0.0, a * b)


def bump_array(t):
    t = np.asarray(t, dtype=float)
    inside = np.abs(t) < 1.0
    safe = np.where(inside, t, 0.0)
    return np.where(inside, np.exp(-1.0 / (1.0 - safe * safe)), 0.0)


_NAMESPACE = {
    "np": np,
    "_mul": _mul,
    "_bump": bump_array,
    "_sin": np.sin,
    "_cos": np.cos,
    "_exp": np.exp,
    "_tanh": np.tanh,
}


@singledispatch
def _emit(expr: Expr, index: Dict[str, int]) -> str:
    raise TypeError(f"Cannot compile {type(expr).__name__}")


@_emit.register
def _(expr: Const, index: Dict[str, int]) -> str:
    return repr(expr.value)


@_emit.register
def _(expr: Var, index: Dict[str, int]) -> str:
    try:
        return f"_X[{index[expr.name]}]"
    except KeyError:
        raise EnvironmentBindingError(f"No coordinate for variable '{expr.name}'") from None


@_emit.register
def _(expr: Add, index: Dict[str, int]) -> str:
    return f"({_emit(expr.left, index)} + {_emit(expr.right, index)})"


@_emit.register
def _(expr: Sub, index: Dict[str, int]) -> str:
    return f"({_emit(expr.left, index)} - {_emit(expr.right, index)})"


@_emit.register
def _(expr: Mul, index: Dict[str, int]) -> str:
    left = _emit(expr.left, index)
    right = _emit(expr.right, index)
    if isinstance(expr.left, Const) and expr.left.value != 0.0:
        return f"({left} * {right})"
    return f"_mul({left}, {right})"


@_emit.register
def _(expr: Div, index: Dict[str, int]) -> str:
    return f"np.divide({_emit(expr.left, index)}, {_emit(expr.right, index)})"


@_emit.register
def _(expr: Pow, index: Dict[str, int]) -> str:
    return f"np.power({_emit(expr.base, index)}, {expr.exponent})"


@_emit.register
def _(expr: Neg, index: Dict[str, int]) -> str:
    return f"(-{_emit(expr.operand, index)})"


@_emit.register
def _(expr: Call, index: Dict[str, int]) -> str:
    name = "_bump" if expr.function == "bump" else f"_{expr.function}"
    return f"{name}({_emit(expr.argument, index)})"


class CompiledExprs:
    """
    numpy function for a fixed sequence of expressions

    Called with one array per variable (in ``variables`` order, broadcastable
    to a common shape), it returns an array of shape ``(len(exprs), *shape)``.
    """

    def __init__(self, exprs: Sequence[Expr], variables: Sequence[str]):
        self.exprs = tuple(exprs)
        self.variables = tuple(variables)
        index = {name: k for k, name in enumerate(self.variables)}
        body = ", ".join(_emit(e, index) for e in self.exprs)
        self.source = f"def _compiled(_X):\n    return ({body}{',' if self.exprs else ''})\n"
        namespace = dict(_NAMESPACE)
        exec(compile(self.source, "<hodge-games expr>", "exec"), namespace)
        self._fn = namespace["_compiled"]

    def raw(self, coords: Sequence) -> np.ndarray:
        """Evaluate without error-state handling or finiteness checks"""
        values = self._fn(coords)
        shape = np.broadcast_shapes(*(np.shape(c) for c in coords)) if len(coords) else ()
        out = np.empty((len(self.exprs),) + shape)
        for k, value in enumerate(values):
            out[k] = value
        return out

    def at_state(self, state: np.ndarray) -> np.ndarray:
        """
        Fast path for a single point (1-D state vector) inside hot loops

        No error-state handling; callers wrap their loop in np.errstate and
        check finiteness themselves.
        """
        return np.asarray(self._fn(state), dtype=float).reshape(len(self.exprs))

    def __call__(self, coords: Sequence, check_finite: bool = True) -> np.ndarray:
        if len(coords) != len(self.variables):
            raise EnvironmentBindingError(
                f"Expected {len(self.variables)} coordinate arrays, got {len(coords)}"
            )
        with np.errstate(all="ignore"):
            out = self.raw(coords)
        if check_finite and not np.all(np.isfinite(out)):
            raise NumericDomainError("Non-finite value while evaluating compiled expressions")
        return out

    def at_points(self, points: np.ndarray, check_finite: bool = True) -> np.ndarray:
        """Evaluate at rows of a (count, n) point array; returns (count, len(exprs))"""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return self(list(points.T), check_finite=check_finite).T


def compile_exprs(exprs: Sequence[Expr], variables: Sequence[str]) -> CompiledExprs:
    return CompiledExprs(exprs, variables)


def evaluate_many(exprs: Sequence[Expr], env: Mapping[str, float]) -> List[float]:
    return [evaluate(e, env) for e in exprs]

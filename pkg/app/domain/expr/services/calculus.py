"""
Symbolic calculus: simplification and exact partial derivatives
"""
import math
from functools import singledispatch

from app.domain.expr.entities import (
    ONE,
    ZERO,
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

_FOLD_FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "tanh": math.tanh,
}


def _is_const(expr: Expr, value: float) -> bool:
    return isinstance(expr, Const) and expr.value == value


def bump_value(t: float) -> float:
    """exp(-1/(1-t^2)) on (-1, 1), zero elsewhere"""
    if abs(t) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - t * t))


# Smart constructors. Each returns a tree on which no rule fires again,
# which makes simplify idempotent.

def make_neg(operand: Expr) -> Expr:
    if isinstance(operand, Const):
        return Const(-operand.value)
    if isinstance(operand, Neg):
        return operand.operand
    return Neg(operand)


def make_add(left: Expr, right: Expr) -> Expr:
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value + right.value)
    if _is_const(left, 0.0):
        return right
    if _is_const(right, 0.0):
        return left
    if isinstance(right, Neg):
        return make_sub(left, right.operand)
    return Add(left, right)


def make_sub(left: Expr, right: Expr) -> Expr:
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value - right.value)
    if _is_const(right, 0.0):
        return left
    if _is_const(left, 0.0):
        return make_neg(right)
    if isinstance(right, Neg):
        return make_add(left, right.operand)
    return Sub(left, right)


def make_mul(left: Expr, right: Expr) -> Expr:
    if isinstance(left, Const) and isinstance(right, Const):
        return Const(left.value * right.value)
    if _is_const(left, 0.0) or _is_const(right, 0.0):
        return ZERO
    if _is_const(left, 1.0):
        return right
    if _is_const(right, 1.0):
        return left
    if _is_const(left, -1.0):
        return make_neg(right)
    if _is_const(right, -1.0):
        return make_neg(left)
    if isinstance(left, Neg):
        return make_neg(make_mul(left.operand, right))
    if isinstance(right, Neg):
        return make_neg(make_mul(left, right.operand))
    return Mul(left, right)


def make_div(left: Expr, right: Expr) -> Expr:
    if isinstance(left, Const) and isinstance(right, Const) and right.value != 0.0:
        return Const(left.value / right.value)
    if _is_const(right, 1.0):
        return left
    if isinstance(left, Neg):
        return make_neg(make_div(left.operand, right))
    if isinstance(right, Neg):
        return make_neg(make_div(left, right.operand))
    return Div(left, right)


def make_pow(base: Expr, exponent: int) -> Expr:
    if exponent == 0:
        return ONE
    if exponent == 1:
        return base
    if isinstance(base, Const):
        try:
            return Const(base.value ** exponent)
        except OverflowError:
            return Pow(base, exponent)
    return Pow(base, exponent)


def make_call(function: str, argument: Expr) -> Expr:
    if isinstance(argument, Const):
        if function == "bump":
            return Const(bump_value(argument.value))
        try:
            return Const(_FOLD_FUNCTIONS[function](argument.value))
        except OverflowError:
            return Call(function, argument)
    return Call(function, argument)


@singledispatch
def simplify(expr: Expr) -> Expr:
    """
    Constant folding and algebraic identities

    0*x -> 0, 0+x -> x, 1*x -> x, x^0 -> 1, x^1 -> x, -(-x) -> x, plus
    sign hoisting out of products and quotients. Semantics preserving:
    a product whose left factor is zero evaluates to zero.
    """
    raise TypeError(f"Cannot simplify {type(expr).__name__}")


@simplify.register
def _(expr: Const) -> Expr:
    return expr


@simplify.register
def _(expr: Var) -> Expr:
    return expr


@simplify.register
def _(expr: Add) -> Expr:
    return make_add(simplify(expr.left), simplify(expr.right))


@simplify.register
def _(expr: Sub) -> Expr:
    return make_sub(simplify(expr.left), simplify(expr.right))


@simplify.register
def _(expr: Mul) -> Expr:
    return make_mul(simplify(expr.left), simplify(expr.right))


@simplify.register
def _(expr: Div) -> Expr:
    return make_div(simplify(expr.left), simplify(expr.right))


@simplify.register
def _(expr: Pow) -> Expr:
    return make_pow(simplify(expr.base), expr.exponent)


@simplify.register
def _(expr: Neg) -> Expr:
    return make_neg(simplify(expr.operand))


@simplify.register
def _(expr: Call) -> Expr:
    return make_call(expr.function, simplify(expr.argument))


def differentiate(expr: Expr, var: str) -> Expr:
    """Exact partial derivative of expr with respect to var, simplified"""
    return simplify(_derive(expr, var))


@singledispatch
def _derive(expr: Expr, var: str) -> Expr:
    raise TypeError(f"Cannot differentiate {type(expr).__name__}")


@_derive.register
def _(expr: Const, var: str) -> Expr:
    return ZERO


@_derive.register
def _(expr: Var, var: str) -> Expr:
    return ONE if expr.name == var else ZERO


@_derive.register
def _(expr: Add, var: str) -> Expr:
    return Add(_derive(expr.left, var), _derive(expr.right, var))


@_derive.register
def _(expr: Sub, var: str) -> Expr:
    return Sub(_derive(expr.left, var), _derive(expr.right, var))


@_derive.register
def _(expr: Neg, var: str) -> Expr:
    return Neg(_derive(expr.operand, var))


@_derive.register
def _(expr: Mul, var: str) -> Expr:
    # product rule
    return Add(
        Mul(_derive(expr.left, var), expr.right),
        Mul(expr.left, _derive(expr.right, var)),
    )


@_derive.register
def _(expr: Div, var: str) -> Expr:
    # quotient rule
    numerator = Sub(
        Mul(_derive(expr.left, var), expr.right),
        Mul(expr.left, _derive(expr.right, var)),
    )
    return Div(numerator, Pow(expr.right, 2))


@_derive.register
def _(expr: Pow, var: str) -> Expr:
    if expr.exponent == 0:
        return ZERO
    return Mul(
        Mul(Const(expr.exponent), Pow(expr.base, expr.exponent - 1)),
        _derive(expr.base, var),
    )


@_derive.register
def _(expr: Call, var: str) -> Expr:
    inner = _derive(expr.argument, var)
    arg = expr.argument
    if expr.function == "sin":
        outer: Expr = Call("cos", arg)
    elif expr.function == "cos":
        outer = Neg(Call("sin", arg))
    elif expr.function == "exp":
        outer = Call("exp", arg)
    elif expr.function == "tanh":
        outer = Sub(ONE, Pow(Call("tanh", arg), 2))
    else:
        # bump'(t) = bump(t) * (-2t / (1 - t^2)^2); bump stays the left factor
        # so the product is zero outside the support without touching the
        # singular quotient
        outer = Mul(
            Call("bump", arg),
            Div(Mul(Const(-2.0), arg), Pow(Sub(ONE, Pow(arg, 2)), 2)),
        )
    return Mul(outer, inner)

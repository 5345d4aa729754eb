"""
Expression renderer

Produces text that parses back to the same tree. Negations outside a
leading position are parenthesized because the parser reads a leading
minus as negating the whole term.
"""
from functools import singledispatch

from app.domain.expr.entities import Add, Call, Const, Div, Expr, Mul, Neg, Pow, Sub, Var


def _number(value: float) -> str:
    if value.is_integer() and abs(value) < 1e16:
        text = str(int(value))
    else:
        text = repr(value)
    return f"({text})" if value < 0 or text.startswith("-") else text


def render(expr: Expr) -> str:
    """Render an expression in the parser's grammar"""
    return _expr(expr)


def _expr(expr: Expr) -> str:
    if isinstance(expr, Add):
        return f"{_expr(expr.left)} + {_term(expr.right)}"
    if isinstance(expr, Sub):
        return f"{_expr(expr.left)} - {_term(expr.right)}"
    if isinstance(expr, Neg):
        return f"-{_term(expr.operand)}"
    return _term(expr)


def _term(expr: Expr) -> str:
    if isinstance(expr, Mul):
        return f"{_term(expr.left)}*{_factor(expr.right)}"
    if isinstance(expr, Div):
        return f"{_term(expr.left)}/{_factor(expr.right)}"
    return _factor(expr)


def _factor(expr: Expr) -> str:
    if isinstance(expr, (Add, Sub, Neg, Mul, Div)):
        return f"({_expr(expr)})"
    return _atom(expr)


@singledispatch
def _atom(expr: Expr) -> str:
    raise TypeError(f"Cannot render {type(expr).__name__}")


@_atom.register
def _(expr: Const) -> str:
    return _number(expr.value)


@_atom.register
def _(expr: Var) -> str:
    return expr.name


@_atom.register
def _(expr: Call) -> str:
    return f"{expr.function}({_expr(expr.argument)})"


@_atom.register
def _(expr: Pow) -> str:
    base = expr.base
    if isinstance(base, (Var, Call)) or (isinstance(base, Const) and base.value >= 0):
        text = _atom(base)
    else:
        text = f"({_expr(base)})"
    return f"{text}^{expr.exponent}"

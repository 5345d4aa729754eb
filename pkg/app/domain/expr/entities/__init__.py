from .expression import (
    BUILTIN_FUNCTIONS,
    ONE,
    ZERO,
    Add,
    Call,
    Const,
    Div,
    Expr,
    ExprLike,
    Mul,
    Neg,
    NodeKind,
    Pow,
    Sub,
    Var,
    as_expr,
)

__all__ = [
    "BUILTIN_FUNCTIONS",
    "ONE",
    "ZERO",
    "Add",
    "Call",
    "Const",
    "Div",
    "Expr",
    "ExprLike",
    "Mul",
    "Neg",
    "NodeKind",
    "Pow",
    "Sub",
    "Var",
    "as_expr",
]

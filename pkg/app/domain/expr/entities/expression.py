"""
Expression tree entities

Immutable nodes for utility functions. Structural equality and hashing
come from the frozen dataclasses, so two trees compare equal exactly when
they have the same shape and the same leaves.
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Tuple, Union

Number = Union[int, float]


class NodeKind(str, Enum):
    """Expression node kinds"""
    CONSTANT = "constant"
    VARIABLE = "variable"
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    POW = "pow"
    NEG = "neg"
    CALL = "call"


BUILTIN_FUNCTIONS: FrozenSet[str] = frozenset({"sin", "cos", "exp", "tanh", "bump"})


class Expr:
    """Base class for expression nodes"""

    kind: NodeKind

    @property
    def children(self) -> Tuple["Expr", ...]:
        return ()

    def variables(self) -> FrozenSet[str]:
        """Names of all variables occurring in the tree"""
        names: set = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Var):
                names.add(node.name)
            stack.extend(node.children)
        return frozenset(names)

    def size(self) -> int:
        """Number of nodes"""
        return 1 + sum(child.size() for child in self.children)

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children), default=0)

    # Builder operators, handy for constructing games programmatically

    def __add__(self, other: "ExprLike") -> "Expr":
        return Add(self, as_expr(other))

    def __radd__(self, other: "ExprLike") -> "Expr":
        return Add(as_expr(other), self)

    def __sub__(self, other: "ExprLike") -> "Expr":
        return Sub(self, as_expr(other))

    def __rsub__(self, other: "ExprLike") -> "Expr":
        return Sub(as_expr(other), self)

    def __mul__(self, other: "ExprLike") -> "Expr":
        return Mul(self, as_expr(other))

    def __rmul__(self, other: "ExprLike") -> "Expr":
        return Mul(as_expr(other), self)

    def __truediv__(self, other: "ExprLike") -> "Expr":
        return Div(self, as_expr(other))

    def __rtruediv__(self, other: "ExprLike") -> "Expr":
        return Div(as_expr(other), self)

    def __pow__(self, exponent: int) -> "Expr":
        return Pow(self, exponent)

    def __neg__(self) -> "Expr":
        return Neg(self)


@dataclass(frozen=True, eq=True)
class Const(Expr):
    """Real constant"""
    value: float
    kind = NodeKind.CONSTANT

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))


@dataclass(frozen=True, eq=True)
class Var(Expr):
    """Strategy variable"""
    name: str
    kind = NodeKind.VARIABLE


@dataclass(frozen=True, eq=True)
class Add(Expr):
    left: Expr
    right: Expr
    kind = NodeKind.ADD

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Sub(Expr):
    left: Expr
    right: Expr
    kind = NodeKind.SUB

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Mul(Expr):
    left: Expr
    right: Expr
    kind = NodeKind.MUL

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Div(Expr):
    left: Expr
    right: Expr
    kind = NodeKind.DIV

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, eq=True)
class Pow(Expr):
    """Power with a nonnegative integer literal exponent"""
    base: Expr
    exponent: int
    kind = NodeKind.POW

    def __post_init__(self):
        if isinstance(self.exponent, bool) or not isinstance(self.exponent, int):
            raise ValueError(f"Exponent must be an integer literal, got {self.exponent!r}")
        if self.exponent < 0:
            raise ValueError(f"Exponent must be nonnegative, got {self.exponent}")

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.base,)


@dataclass(frozen=True, eq=True)
class Neg(Expr):
    operand: Expr
    kind = NodeKind.NEG

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.operand,)


@dataclass(frozen=True, eq=True)
class Call(Expr):
    """Builtin function application"""
    function: str
    argument: Expr
    kind = NodeKind.CALL

    def __post_init__(self):
        if self.function not in BUILTIN_FUNCTIONS:
            raise ValueError(f"Unknown function: {self.function}")

    @property
    def children(self) -> Tuple[Expr, ...]:
        return (self.argument,)


ExprLike = Union[Expr, Number]

ZERO = Const(0.0)
ONE = Const(1.0)


def as_expr(value: ExprLike) -> Expr:
    """Coerce numbers to constants"""
    if isinstance(value, Expr):
        return value
    return Const(value)

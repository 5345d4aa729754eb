from .calculus import differentiate, simplify
from .evaluator import CompiledExprs, compile_exprs, evaluate, evaluate_many
from .parser import parse, tokenize
from .renderer import render

__all__ = [
    "CompiledExprs",
    "compile_exprs",
    "differentiate",
    "evaluate",
    "evaluate_many",
    "parse",
    "render",
    "simplify",
    "tokenize",
]

"""
Convex combination of two games with the same structure
"""
from app.core.exceptions import UsageError
from app.domain.expr.entities import Add, Const, Mul
from app.domain.expr.services import simplify
from app.domain.game.entities import DifferentialGame


def interpolate_games(g_a: DifferentialGame, g_b: DifferentialGame, gamma: float) -> DifferentialGame:
    """Game with utilities gamma * u_i^A + (1 - gamma) * u_i^B, simplified"""
    if not 0.0 <= gamma <= 1.0:
        raise UsageError(f"gamma must lie in [0, 1], got {gamma}")
    g_a.require_same_structure(g_b)
    utilities = [
        simplify(Add(Mul(Const(gamma), u_a), Mul(Const(1.0 - gamma), u_b)))
        for u_a, u_b in zip(g_a.utilities, g_b.utilities)
    ]
    return g_a.with_utilities(utilities, name=f"{g_a.name}~{g_b.name}@{gamma:.17g}")

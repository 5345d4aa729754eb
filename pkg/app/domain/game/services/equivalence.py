"""
Strategic equivalence of games with the same structure
"""
from typing import Optional

from app.core.config import settings
from app.domain.expr.services.calculus import make_sub, simplify
from app.domain.game.entities import DifferentialGame
from app.domain.game.value_objects import EquivalenceReport, SamplerSpec

from .analysis import is_nonstrategic


def difference_game(g1: DifferentialGame, g2: DifferentialGame) -> DifferentialGame:
    """Game with utilities u_i - u'_i"""
    g1.require_same_structure(g2)
    utilities = [
        make_sub(simplify(a), simplify(b)) for a, b in zip(g1.utilities, g2.utilities)
    ]
    return g1.with_utilities(utilities, name=f"{g1.name}-minus-{g2.name}")


def strategically_equivalent(
    g1: DifferentialGame,
    g2: DifferentialGame,
    sampler: Optional[SamplerSpec] = None,
    tolerance: Optional[float] = None,
) -> EquivalenceReport:
    """Equivalent iff the difference game is non-strategic on the samples"""
    tolerance = tolerance if tolerance is not None else settings.tolerances.nonstrategic
    report = is_nonstrategic(difference_game(g1, g2), sampler=sampler, tolerance=tolerance)
    return EquivalenceReport(
        max_deviation=report.max_norm,
        verdict=report.verdict,
        tolerance=tolerance,
        sampler=report.sampler,
    )

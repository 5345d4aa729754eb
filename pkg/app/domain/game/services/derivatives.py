"""
Symbolic derivative bundle of a game

Du, its Jacobian and the compiled numpy evaluators are built once per game
and shared by every analysis.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from app.domain.expr.entities import ZERO, Expr
from app.domain.expr.services import CompiledExprs, compile_exprs, differentiate
from app.domain.expr.services.calculus import make_add
from app.domain.game.entities import DifferentialGame


@dataclass(frozen=True, eq=False)
class GameDerivatives:
    game: DifferentialGame
    gradient: Tuple[Expr, ...]
    jacobian: Tuple[Tuple[Expr, ...], ...]
    divergence: Expr
    gradient_fn: CompiledExprs
    jacobian_fn: CompiledExprs
    utility_fn: CompiledExprs

    @property
    def own_diagonal(self) -> Tuple[Expr, ...]:
        """d^2 u_m / d x_k^2 for each coordinate k owned by player m"""
        return tuple(self.jacobian[k][k] for k in range(len(self.gradient)))

    def gradient_at(self, points: np.ndarray) -> np.ndarray:
        """Du at the rows of a (count, n) array"""
        return self.gradient_fn.at_points(points)

    def jacobian_at(self, points: np.ndarray) -> np.ndarray:
        """(count, n, n) Jacobians at the rows of a (count, n) array"""
        n = len(self.gradient)
        flat = self.jacobian_fn.at_points(points)
        return flat.reshape(-1, n, n)

    def utilities_at(self, points: np.ndarray) -> np.ndarray:
        """(count, M) utilities at the rows of a (count, n) array"""
        return self.utility_fn.at_points(points)

    def is_divergence_free(self) -> bool:
        """True when the symbolic divergence simplifies to the literal 0"""
        return self.divergence == ZERO


def simultaneous_gradient(game: DifferentialGame) -> Tuple[Expr, ...]:
    """
    Du: coordinate k owned by player m is d u_m / d x_k

    Returns:
        One simplified expression per flat coordinate
    """
    variables = game.variables
    owners = game.owner_of()
    return tuple(
        differentiate(game.players[owners[k]].utility, var) for k, var in enumerate(variables)
    )


@lru_cache(maxsize=128)
def derivatives_for(game: DifferentialGame) -> GameDerivatives:
    variables = game.variables
    gradient = simultaneous_gradient(game)
    jacobian = tuple(tuple(differentiate(g, var) for var in variables) for g in gradient)

    divergence: Expr = ZERO
    for k in range(len(variables)):
        divergence = make_add(divergence, jacobian[k][k])

    return GameDerivatives(
        game=game,
        gradient=gradient,
        jacobian=jacobian,
        divergence=divergence,
        gradient_fn=compile_exprs(gradient, variables),
        jacobian_fn=compile_exprs([entry for row in jacobian for entry in row], variables),
        utility_fn=compile_exprs(game.utilities, variables),
    )

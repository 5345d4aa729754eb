"""
Player Entity
"""
from dataclasses import dataclass
from typing import Tuple

from app.core.exceptions import GameSpecError
from app.domain.expr.entities import Expr


@dataclass(frozen=True)
class Player:
    """
    A player owns an ordered block of strategy variables and a utility

    The utility may depend on every variable of the game; only the owned
    block enters the simultaneous gradient.
    """
    name: str
    variables: Tuple[str, ...]
    utility: Expr

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.name:
            raise GameSpecError("Player name cannot be empty")
        if not self.variables:
            raise GameSpecError("Player must own at least one variable", player=self.name)
        if len(set(self.variables)) != len(self.variables):
            raise GameSpecError("Player variables must be pairwise distinct", player=self.name)

    @property
    def dimension(self) -> int:
        return len(self.variables)

    def with_utility(self, utility: Expr) -> "Player":
        return Player(self.name, self.variables, utility)

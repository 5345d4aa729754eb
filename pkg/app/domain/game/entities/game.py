"""
Differential Game Entity
"""
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from app.core.exceptions import GameSpecError, StructureMismatchError
from app.domain.expr.entities import Expr

from .player import Player


@dataclass(frozen=True)
class DifferentialGame:
    """
    Players with disjoint strategy blocks and smooth utilities

    The flat coordinate order is the concatenation of the players' variable
    lists. Every derived vector (profiles, Du, Jacobian rows) uses it.
    """
    name: str
    players: Tuple[Player, ...]

    def __post_init__(self):
        object.__setattr__(self, "players", tuple(self.players))
        if not self.players:
            raise GameSpecError("Game must have at least one player")

        names = [p.name for p in self.players]
        if len(set(names)) != len(names):
            raise GameSpecError("Player names must be unique")

        seen: Dict[str, str] = {}
        for player in self.players:
            for var in player.variables:
                if var in seen:
                    raise GameSpecError(
                        f"Duplicate variable '{var}' (already owned by '{seen[var]}')",
                        player=player.name,
                    )
                seen[var] = player.name

        declared = set(seen)
        for player in self.players:
            unknown = sorted(player.utility.variables() - declared)
            if unknown:
                raise GameSpecError(
                    f"Utility references undeclared variables: {', '.join(unknown)}",
                    player=player.name,
                )

    @property
    def variables(self) -> Tuple[str, ...]:
        """Flat coordinate order"""
        return tuple(var for player in self.players for var in player.variables)

    @property
    def dimension(self) -> int:
        return sum(player.dimension for player in self.players)

    @property
    def player_count(self) -> int:
        return len(self.players)

    @property
    def utilities(self) -> Tuple[Expr, ...]:
        return tuple(player.utility for player in self.players)

    def owner_of(self) -> Tuple[int, ...]:
        """Index of the owning player for each flat coordinate"""
        return tuple(m for m, player in enumerate(self.players) for _ in player.variables)

    def player_slices(self) -> Tuple[slice, ...]:
        """Flat-coordinate slice of each player's block"""
        slices = []
        start = 0
        for player in self.players:
            slices.append(slice(start, start + player.dimension))
            start += player.dimension
        return tuple(slices)

    def same_structure(self, other: "DifferentialGame") -> bool:
        return [(p.name, p.variables) for p in self.players] == [
            (p.name, p.variables) for p in other.players
        ]

    def require_same_structure(self, other: "DifferentialGame") -> None:
        if not self.same_structure(other):
            raise StructureMismatchError(
                f"Games '{self.name}' and '{other.name}' do not share players and variables"
            )

    def with_utilities(self, utilities: Sequence[Expr], name: str) -> "DifferentialGame":
        """Same players and variables, new utilities"""
        if len(utilities) != len(self.players):
            raise StructureMismatchError(
                f"Expected {len(self.players)} utilities, got {len(utilities)}"
            )
        return DifferentialGame(
            name=name,
            players=tuple(p.with_utility(u) for p, u in zip(self.players, utilities)),
        )

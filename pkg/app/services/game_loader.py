"""
Game Loader - builds games from game-spec documents
"""
from typing import Any, Mapping, Union

from pydantic import ValidationError

from app.api.v1.schemas.game_spec import GameSpecDocument
from app.core.exceptions import ExpressionSyntaxError, GameSpecError
from app.core.logger import get_logger
from app.domain.expr.services import parse, render
from app.domain.game.entities import DifferentialGame, Player

logger = get_logger(__name__)

DocumentLike = Union[GameSpecDocument, Mapping[str, Any]]


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item.get("loc", ()))
        parts.append(f"{location}: {item.get('msg')}" if location else str(item.get("msg")))
    return "; ".join(parts)


def load_game(document: DocumentLike, default_name: str = "game") -> DifferentialGame:
    """
    Validate a game-spec document and parse its utilities

    Every utility is parsed against the union of all players' variables.

    Raises:
        GameSpecError: schema violation, duplicate variable or a utility
            that does not parse (the message names the player)
    """
    # 1. Schema
    if isinstance(document, GameSpecDocument):
        spec = document
    else:
        try:
            spec = GameSpecDocument.model_validate(document)
        except ValidationError as e:
            raise GameSpecError(f"Invalid game document: {_validation_message(e)}") from e

    # 2. Variable partition
    owners: dict = {}
    for player in spec.players:
        for var in player.vars:
            if var in owners:
                raise GameSpecError(
                    f"Duplicate variable '{var}' (already owned by '{owners[var]}')",
                    player=player.name,
                )
            owners[var] = player.name
    declared = frozenset(owners)

    # 3. Utilities
    players = []
    for player in spec.players:
        try:
            utility = parse(player.utility, declared)
        except ExpressionSyntaxError as e:
            raise GameSpecError(f"utility: {e.message}", player=player.name) from e
        players.append(Player(name=player.name, variables=tuple(player.vars), utility=utility))

    game = DifferentialGame(name=spec.name or default_name, players=tuple(players))
    logger.info(
        "Game loaded",
        game=game.name,
        players=game.player_count,
        dimension=game.dimension,
    )
    return game


def dump_game(game: DifferentialGame) -> dict:
    """Game-spec document for a game; utilities are rendered expressions"""
    document = GameSpecDocument(
        name=game.name,
        players=[
            {"name": p.name, "vars": list(p.variables), "utility": render(p.utility)}
            for p in game.players
        ],
    )
    return document.model_dump()

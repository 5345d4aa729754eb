"""
JSON file implementation of GameRepository
"""
import json
from pathlib import Path

from app.core.exceptions import GameSpecError
from app.domain.game.entities import DifferentialGame
from app.domain.game.repository import GameRepository
from app.services.game_loader import dump_game, load_game

from .atomic_writer import atomic_write


class JsonGameRepository(GameRepository):
    """Game-spec documents stored as JSON files"""

    def load(self, path: Path) -> DifferentialGame:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise GameSpecError(f"Cannot read game file {path}: {e.strerror or e}") from e
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise GameSpecError(f"Game file {path} is not valid JSON: {e.msg} at line {e.lineno}") from e
        return load_game(document, default_name=path.stem)

    def save(self, game: DifferentialGame, path: Path) -> Path:
        text = json.dumps(dump_game(game), indent=2, sort_keys=False) + "\n"
        return atomic_write(path, text)

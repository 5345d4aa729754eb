"""
Pytest Configuration and Fixtures
"""
import json
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from app.core.config import SamplerSettings, Settings
from app.core.logger import get_logger
from app.domain.game.entities import DifferentialGame
from app.domain.game.value_objects import SamplerSpec
from app.domain.grid.value_objects import BoxGrid
from app.services.game_loader import load_game

logger = get_logger(__name__)


# Game documents
ORBIT_DOCUMENT = {
    "name": "orbit",
    "players": [
        {"name": "p1", "vars": ["x"], "utility": "x*y"},
        {"name": "p2", "vars": ["y"], "utility": "-x*y - x^3*y"},
    ],
}

# Conserved by the orbit flow
ORBIT_HAMILTONIAN = "y^2/2 + x^2/2 + x^4/4"

VP_NOT_HAMILTONIAN_DOCUMENT = {
    "name": "vp-not-hamiltonian",
    "players": [
        {"name": "p1", "vars": ["x"], "utility": "x^2"},
        {"name": "p2", "vars": ["y"], "utility": "-y^2"},
    ],
}

DIVERGENT_DOCUMENT = {
    "name": "divergent",
    "players": [
        {"name": "p1", "vars": ["x"], "utility": "x*y"},
        {"name": "p2", "vars": ["y"], "utility": "x*y"},
    ],
}

LINEAR_ROTATION_DOCUMENT = {
    "name": "linear-rotation",
    "players": [
        {"name": "p1", "vars": ["x"], "utility": "x*y"},
        {"name": "p2", "vars": ["y"], "utility": "-x*y"},
    ],
}

POTENTIAL_DOCUMENT = {
    "name": "potential",
    "players": [
        {
            "name": "p1",
            "vars": ["x1", "x2"],
            "utility": "-(x1^2 + x2^2)/2 + x1*y1 + x2*y2 - (x1^2 + x2^2)^2",
        },
        {
            "name": "p2",
            "vars": ["y1", "y2"],
            "utility": "-(y1^2 + y2^2)/2 + x1*y1 + x2*y2 - (y1^2 + y2^2)^2",
        },
    ],
}

INTERP_SP_DOCUMENT = {
    "name": "interp-sp",
    "players": [
        {
            "name": "p1",
            "vars": ["x1", "x2"],
            "utility": "-((x1 - y1)^2 + (x2 - y2)^2) - 0.2*(x1^2 + x2^2)",
        },
        {
            "name": "p2",
            "vars": ["y1", "y2"],
            "utility": "-((x1 - y1)^2 + (x2 - y2)^2) - 0.2*(y1^2 + y2^2)",
        },
    ],
}

INTERP_VP_DOCUMENT = {
    "name": "interp-vp",
    "players": [
        {"name": "p1", "vars": ["x1", "x2"], "utility": "x1*y2 - x2*y1"},
        {
            "name": "p2",
            "vars": ["y1", "y2"],
            "utility": "-(x1*y2 - x2*y1) - 0.1*(x1^2*y2^2 + x2^2*y1^2)",
        },
    ],
}


# Game fixtures
@pytest.fixture
def orbit_game() -> DifferentialGame:
    """Hamiltonian game with closed orbits around the origin"""
    return load_game(ORBIT_DOCUMENT)


@pytest.fixture
def vp_game() -> DifferentialGame:
    """Divergence-free but not Hamiltonian"""
    return load_game(VP_NOT_HAMILTONIAN_DOCUMENT)


@pytest.fixture
def divergent_game() -> DifferentialGame:
    """Du = (y, x): closed and divergence-free, with an unstable direction"""
    return load_game(DIVERGENT_DOCUMENT)


@pytest.fixture
def linear_rotation_game() -> DifferentialGame:
    return load_game(LINEAR_ROTATION_DOCUMENT)


@pytest.fixture
def potential_game() -> DifferentialGame:
    """Four-dimensional exact potential game with a stable origin"""
    return load_game(POTENTIAL_DOCUMENT)


@pytest.fixture
def interp_sp_game() -> DifferentialGame:
    return load_game(INTERP_SP_DOCUMENT)


@pytest.fixture
def interp_vp_game() -> DifferentialGame:
    return load_game(INTERP_VP_DOCUMENT)


# Files
@pytest.fixture
def write_game(tmp_path: Path) -> Callable[[dict, str], Path]:
    """Write a game document into tmp_path and return its path"""

    def _write(document: dict, filename: str = "game.json") -> Path:
        path = tmp_path / filename
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def orbit_file(write_game) -> Path:
    return write_game(ORBIT_DOCUMENT, "orbit.json")


@pytest.fixture
def vp_file(write_game) -> Path:
    return write_game(VP_NOT_HAMILTONIAN_DOCUMENT, "vp.json")


@pytest.fixture
def divergent_file(write_game) -> Path:
    return write_game(DIVERGENT_DOCUMENT, "divergent.json")


# Settings, samplers and grids
@pytest.fixture
def test_settings() -> Settings:
    """Default settings with a smaller sample set"""
    return Settings(sampler=SamplerSettings(count=64))


@pytest.fixture
def sampler() -> SamplerSpec:
    return SamplerSpec(low=-2.0, high=2.0, count=64, seed=0)


@pytest.fixture
def periodic_grid() -> BoxGrid:
    """[-pi, pi)^2 with 32 nodes per axis"""
    return BoxGrid.cube(2, -np.pi, np.pi, 32)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)

from .box_grid import DEFAULT_MAX_POINTS, MIN_RESOLUTION, BoxGrid, grid_from_bounds
from .lattices import GridField, GridScalar, GridTwoForm
from .window import BumpWindow

__all__ = [
    "DEFAULT_MAX_POINTS",
    "MIN_RESOLUTION",
    "BoxGrid",
    "BumpWindow",
    "GridField",
    "GridScalar",
    "GridTwoForm",
    "grid_from_bounds",
]

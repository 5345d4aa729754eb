"""
Lattice value objects: scalars, vector fields and two-forms on a BoxGrid
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from app.core.exceptions import GridError

from .box_grid import BoxGrid


@dataclass(frozen=True, eq=False)
class GridScalar:
    """Finite real samples on every node of a grid"""
    grid: BoxGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != self.grid.shape:
            if values.size == self.grid.size:
                values = values.reshape(self.grid.shape)
            else:
                raise GridError(
                    f"Lattice has {values.size} values, grid needs {self.grid.size}"
                )
        if not np.all(np.isfinite(values)):
            raise GridError("Lattice values must be finite")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: BoxGrid) -> "GridScalar":
        return cls(grid, np.zeros(grid.shape))

    def mean(self) -> float:
        return float(np.mean(self.values))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def __add__(self, other: "GridScalar") -> "GridScalar":
        self.grid.require_same(other.grid)
        return GridScalar(self.grid, self.values + other.values)

    def __sub__(self, other: "GridScalar") -> "GridScalar":
        self.grid.require_same(other.grid)
        return GridScalar(self.grid, self.values - other.values)

    def scaled(self, factor: float) -> "GridScalar":
        return GridScalar(self.grid, factor * self.values)


@dataclass(frozen=True, eq=False)
class GridField:
    """Vector field with one scalar lattice per coordinate"""
    grid: BoxGrid
    components: Tuple[GridScalar, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if len(components) != self.grid.dimension:
            raise GridError(
                f"Field needs {self.grid.dimension} components, got {len(components)}"
            )
        for component in components:
            self.grid.require_same(component.grid)
        object.__setattr__(self, "components", components)

    @classmethod
    def from_arrays(cls, grid: BoxGrid, arrays: Iterable[np.ndarray]) -> "GridField":
        return cls(grid, tuple(GridScalar(grid, a) for a in arrays))

    @classmethod
    def zeros(cls, grid: BoxGrid) -> "GridField":
        return cls.from_arrays(grid, [np.zeros(grid.shape)] * grid.dimension)

    def stack(self) -> np.ndarray:
        """(n, *shape) array of component values"""
        return np.stack([c.values for c in self.components])

    def means(self) -> Tuple[float, ...]:
        return tuple(c.mean() for c in self.components)

    def max_abs(self) -> float:
        return max(c.max_abs() for c in self.components)

    def __add__(self, other: "GridField") -> "GridField":
        self.grid.require_same(other.grid)
        return GridField.from_arrays(self.grid, self.stack() + other.stack())

    def __sub__(self, other: "GridField") -> "GridField":
        self.grid.require_same(other.grid)
        return GridField.from_arrays(self.grid, self.stack() - other.stack())

    def scaled(self, factor: float) -> "GridField":
        return GridField.from_arrays(self.grid, factor * self.stack())

    def plus_constant(self, vector: Sequence[float]) -> "GridField":
        return GridField.from_arrays(
            self.grid, [c.values + float(v) for c, v in zip(self.components, vector)]
        )


@dataclass(frozen=True, eq=False)
class GridTwoForm:
    """Antisymmetric two-form stored by its entries f_ij, i < j"""
    grid: BoxGrid
    entries: Dict[Tuple[int, int], GridScalar]

    def __post_init__(self):
        n = self.grid.dimension
        expected = {(i, j) for i in range(n) for j in range(i + 1, n)}
        keys = set(self.entries)
        if keys != expected:
            raise GridError(
                f"Two-form entries must be exactly the pairs i < j, got {sorted(keys)}"
            )
        for entry in self.entries.values():
            self.grid.require_same(entry.grid)
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))

    @classmethod
    def from_arrays(
        cls, grid: BoxGrid, arrays: Dict[Tuple[int, int], np.ndarray]
    ) -> "GridTwoForm":
        return cls(grid, {key: GridScalar(grid, a) for key, a in arrays.items()})

    def max_abs(self) -> float:
        return max((e.max_abs() for e in self.entries.values()), default=0.0)

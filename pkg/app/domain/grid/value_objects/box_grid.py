"""
Box Grid Value Object
"""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from app.core.exceptions import GridError

MIN_RESOLUTION = 8
DEFAULT_MAX_POINTS = 2**24


@dataclass(frozen=True)
class BoxGrid:
    """
    Uniform periodic lattice on a box

    Nodes sit at lower + j*h on each axis, j = 0..N-1; the upper bound is the
    periodic image of the lower one and is not a node.
    """
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    resolution: Tuple[int, ...]
    max_points: int = field(default=DEFAULT_MAX_POINTS, compare=False)

    def __post_init__(self):
        lower = tuple(float(v) for v in self.lower)
        upper = tuple(float(v) for v in self.upper)
        resolution = tuple(int(v) for v in self.resolution)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "resolution", resolution)

        if not resolution:
            raise GridError("Grid must have at least one axis")
        if not (len(lower) == len(upper) == len(resolution)):
            raise GridError("Grid bounds and resolution must have one entry per axis")
        for axis, (lo, hi, n) in enumerate(zip(lower, upper, resolution)):
            if not hi > lo:
                raise GridError(f"Axis {axis}: upper bound {hi} must exceed lower bound {lo}")
            if n < MIN_RESOLUTION or n & (n - 1):
                raise GridError(
                    f"Axis {axis}: resolution {n} must be a power of two >= {MIN_RESOLUTION}"
                )
        if self.size > self.max_points:
            raise GridError(f"Grid has {self.size} points, above the cap of {self.max_points}")

    @classmethod
    def cube(
        cls,
        dimension: int,
        low: float,
        high: float,
        resolution: int,
        max_points: int = DEFAULT_MAX_POINTS,
    ) -> "BoxGrid":
        return cls(
            lower=(low,) * dimension,
            upper=(high,) * dimension,
            resolution=(resolution,) * dimension,
            max_points=max_points,
        )

    @property
    def dimension(self) -> int:
        return len(self.resolution)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.resolution

    @property
    def size(self) -> int:
        return int(np.prod(self.resolution, dtype=np.int64))

    @property
    def lengths(self) -> Tuple[float, ...]:
        return tuple(hi - lo for lo, hi in zip(self.lower, self.upper))

    @property
    def spacing(self) -> Tuple[float, ...]:
        return tuple(length / n for length, n in zip(self.lengths, self.resolution))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def center(self) -> Tuple[float, ...]:
        return tuple((lo + hi) / 2.0 for lo, hi in zip(self.lower, self.upper))

    def axes(self) -> List[np.ndarray]:
        """Node coordinates per axis"""
        return [lo + np.arange(n) * h for lo, n, h in zip(self.lower, self.resolution, self.spacing)]

    def mesh(self) -> List[np.ndarray]:
        """Node coordinate arrays of the full lattice shape (ij indexing)"""
        return np.meshgrid(*self.axes(), indexing="ij")

    def points(self) -> np.ndarray:
        """(size, n) node coordinates in row-major order"""
        return np.stack([m.ravel() for m in self.mesh()], axis=1)

    def angular_wavenumbers(self) -> List[np.ndarray]:
        """
        2*pi*k/L per axis in FFT order

        The Nyquist mode is zeroed so first derivatives of real lattices stay
        real.
        """
        wavenumbers = []
        for n, h in zip(self.resolution, self.spacing):
            kappa = 2.0 * np.pi * np.fft.fftfreq(n, d=h)
            kappa[n // 2] = 0.0
            wavenumbers.append(kappa)
        return wavenumbers

    def wavevector_mesh(self) -> List[np.ndarray]:
        return np.meshgrid(*self.angular_wavenumbers(), indexing="ij")

    def require_same(self, other: "BoxGrid") -> None:
        if self != other:
            raise GridError("Operands live on different grids")

    def to_dict(self) -> dict:
        return {
            "lower": list(self.lower),
            "upper": list(self.upper),
            "resolution": list(self.resolution),
        }


def grid_from_bounds(
    bounds: Sequence[Tuple[float, float]],
    resolution: Sequence[int],
    max_points: int = DEFAULT_MAX_POINTS,
) -> BoxGrid:
    return BoxGrid(
        lower=tuple(b[0] for b in bounds),
        upper=tuple(b[1] for b in bounds),
        resolution=tuple(resolution),
        max_points=max_points,
    )

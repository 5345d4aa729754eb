"""
LatticeCodec - GHG1 binary lattice format

Layout, all little-endian:
    magic    4 bytes  b"GHG1"
    n        u32
    N_a      u32 per axis
    bounds   f64 (lower, upper) per axis
    values   f64, row-major, one full lattice per component
"""
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from app.core.exceptions import GridError
from app.domain.grid.value_objects import BoxGrid, GridField, GridScalar
from app.infrastructure.file_store import atomic_write

MAGIC = b"GHG1"


class LatticeCodec:
    """Encoder/decoder for GHG1 lattice files"""

    def encode(self, grid: BoxGrid, components: Sequence[np.ndarray]) -> bytes:
        header = [
            MAGIC,
            np.array([grid.dimension], dtype="<u4").tobytes(),
            np.array(grid.resolution, dtype="<u4").tobytes(),
            np.array(
                [v for lo, hi in zip(grid.lower, grid.upper) for v in (lo, hi)], dtype="<f8"
            ).tobytes(),
        ]
        body = [np.ascontiguousarray(c, dtype="<f8").reshape(grid.shape).tobytes() for c in components]
        return b"".join(header + body)

    def decode(self, data: bytes) -> Tuple[BoxGrid, List[np.ndarray]]:
        if data[:4] != MAGIC:
            raise GridError("Not a GHG1 lattice: bad magic")
        offset = 4
        try:
            n = int(np.frombuffer(data, dtype="<u4", count=1, offset=offset)[0])
            offset += 4
            resolution = np.frombuffer(data, dtype="<u4", count=n, offset=offset)
            offset += 4 * n
            bounds = np.frombuffer(data, dtype="<f8", count=2 * n, offset=offset)
            offset += 16 * n
        except ValueError as e:
            raise GridError(f"Truncated GHG1 header: {e}") from e

        grid = BoxGrid(
            lower=tuple(bounds[0::2]),
            upper=tuple(bounds[1::2]),
            resolution=tuple(int(v) for v in resolution),
        )
        payload = len(data) - offset
        block = 8 * grid.size
        if payload <= 0 or payload % block:
            raise GridError(
                f"GHG1 payload of {payload} bytes is not a whole number of {grid.shape} lattices"
            )
        values = np.frombuffer(data, dtype="<f8", offset=offset).reshape((-1,) + grid.shape)
        return grid, [np.array(v) for v in values]


_codec = LatticeCodec()


def write_lattice(path: Union[str, Path], lattice: Union[GridScalar, GridField]) -> Path:
    """Write a scalar or field lattice atomically"""
    if isinstance(lattice, GridScalar):
        components = [lattice.values]
    else:
        components = [c.values for c in lattice.components]
    return atomic_write(path, _codec.encode(lattice.grid, components))


def read_lattice(path: Union[str, Path]) -> Union[GridScalar, GridField]:
    """Read a GHG1 file; one component gives a GridScalar, n give a GridField"""
    grid, components = _codec.decode(Path(path).read_bytes())
    if len(components) == 1:
        return GridScalar(grid, components[0])
    if len(components) == grid.dimension:
        return GridField.from_arrays(grid, components)
    raise GridError(
        f"GHG1 file holds {len(components)} components; expected 1 or {grid.dimension}"
    )

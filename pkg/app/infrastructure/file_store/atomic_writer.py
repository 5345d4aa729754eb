"""
Atomic file writes (temp file in the target directory, then rename)
"""
import os
import tempfile
from pathlib import Path
from typing import Union

from app.core.logger import get_logger

logger = get_logger(__name__)


def atomic_write(path: Union[str, Path], data: Union[str, bytes]) -> Path:
    """
    Write data to path so readers never observe a partial file

    Text is encoded as UTF-8 with ``\\n`` line endings.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    payload = data.encode("utf-8") if isinstance(data, str) else data

    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, target)
    except Exception:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise

    logger.debug("File written", path=str(target), size=len(payload))
    return target
